#ifndef OSCNET_LATTICE_HPP
#define OSCNET_LATTICE_HPP

#include <vector>

#include "oscnet/linalg.hpp"
#include "oscnet/network.hpp"

namespace oscnet {

/// Permutation stored as an image map: column k carries its single 1-entry in
/// row image[k] (0-based internally).  Pe_k = e_{image[k]}.
struct PermutationMatrix {
    std::vector<int> image;

    int dim() const { return static_cast<int>(image.size()); }
    Eigen::MatrixXcd to_dense() const;

    /// Validates that `image` is a bijection on {0..dim-1}.
    static PermutationMatrix from_image(std::vector<int> image);

    /// Composition count until the identity returns; P^dim == I for a single
    /// cycle.  Exact integer arithmetic on the image map.
    PermutationMatrix power(int n) const;
    bool is_identity() const;
};

struct UnitaryMatrix {
    Eigen::MatrixXcd m;
    int dim() const { return static_cast<int>(m.rows()); }
};

/// Normal-mode angular frequencies omega_j = (2*pi/tau) * (j/s + m_j), j=1..s.
struct ModeSpectrum {
    std::vector<double> omega;  // rad/s, all positive

    int size() const { return static_cast<int>(omega.size()); }
    Eigen::MatrixXcd to_diagonal() const;
    double trace() const;
};

/// The ring shift: ones on the subdiagonal plus the top-right corner, so the
/// state of site k moves to site k+1 and the last site wraps to the first.
PermutationMatrix cyclic_shift_matrix(int s);

/// Discrete-Fourier unitary with 1-based index convention,
///   W[j][k] = exp(2*pi*i*j*k/s) / sqrt(s),  j,k = 1..s.
/// The 1-based values in the exponent are load-bearing: the eigenphase list of
/// the ring shift under this W ends at exp(-2*pi*i) = 1 rather than starting
/// at 1, and every closed-form expression downstream assumes that listing.
UnitaryMatrix dft_matrix(int s);

/// Eigenphases of the ring shift in the DFT basis, in listing order
///   (exp(-2*pi*i*1/s), ..., exp(-2*pi*i*s/s)).
/// Computed as the diagonal of the conjugated shift; throws if the conjugation
/// leaves an off-diagonal residual above 1e-12 (it cannot, structurally).
std::vector<Complex> shift_eigenphases(int s);

/// Mode spectrum of the network; strictly positive for m_j >= 0.
ModeSpectrum mode_frequencies(const NetworkSpec& spec);

}  // namespace oscnet

#endif
