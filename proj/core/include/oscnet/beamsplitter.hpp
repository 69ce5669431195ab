#ifndef OSCNET_BEAMSPLITTER_HPP
#define OSCNET_BEAMSPLITTER_HPP

#include "oscnet/linalg.hpp"

namespace oscnet {

/// Beam splitter with transmission T = cos(theta) and reflection R = sin(theta).
struct BSParams {
    double transmission = 1.0;
    double reflection = 0.0;

    static BSParams from_angle(double theta);
    /// Throws unless T^2 + R^2 = 1 within 1e-12.
    static BSParams checked(double transmission, double reflection);
};

/// One photon shared between two modes: c10 |1,0> + c01 |0,1>.
struct TwoModeOnePhoton {
    Complex c10{1.0, 0.0};
    Complex c01{0.0, 0.0};

    double norm() const;
};

/// Acts as [[T, iR], [iR, T]] on (c10, c01): transmitted amplitude keeps its
/// mode, reflected amplitude crosses with a +i phase.
TwoModeOnePhoton bs_apply(const BSParams& params, const TwoModeOnePhoton& state);

/// Output of two beam splitters in series, fed with |1,0>:
///   c10 = T1 T2 - R1 R2,   c01 = i (R1 T2 + R2 T1).
TwoModeOnePhoton cascade(const BSParams& first, const BSParams& second);

/// True when the cascade annihilates the |1,0> amplitude (|c10| <= 1e-12),
/// i.e. the underlying angles sum to pi/2 mod pi.  Covers both the
/// R1 = T1, R2 = T2 and the R1 = T2, R2 = T1 parameter families.
bool perfect_transfer_condition(const BSParams& first, const BSParams& second);

/// Componentwise equality after removing one overall phase.
bool equal_up_to_global_phase(const TwoModeOnePhoton& a, const TwoModeOnePhoton& b,
                              double tol = 1e-12);

}  // namespace oscnet

#endif
