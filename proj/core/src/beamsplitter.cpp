#include "oscnet/beamsplitter.hpp"

#include <cmath>
#include <stdexcept>

namespace oscnet {

BSParams BSParams::from_angle(double theta) {
    return BSParams{std::cos(theta), std::sin(theta)};
}

BSParams BSParams::checked(double transmission, double reflection) {
    const double r2 = transmission * transmission + reflection * reflection;
    if (std::abs(r2 - 1.0) > 1e-12)
        throw std::invalid_argument("BSParams: T^2 + R^2 must equal 1");
    return BSParams{transmission, reflection};
}

double TwoModeOnePhoton::norm() const {
    return std::sqrt(std::norm(c10) + std::norm(c01));
}

TwoModeOnePhoton bs_apply(const BSParams& params, const TwoModeOnePhoton& state) {
    const Complex i_r(0.0, params.reflection);
    return TwoModeOnePhoton{
        params.transmission * state.c10 + i_r * state.c01,
        i_r * state.c10 + params.transmission * state.c01,
    };
}

TwoModeOnePhoton cascade(const BSParams& first, const BSParams& second) {
    const double t1 = first.transmission, r1 = first.reflection;
    const double t2 = second.transmission, r2 = second.reflection;
    return TwoModeOnePhoton{
        Complex(t1 * t2 - r1 * r2, 0.0),
        Complex(0.0, r1 * t2 + r2 * t1),
    };
}

bool perfect_transfer_condition(const BSParams& first, const BSParams& second) {
    return std::abs(cascade(first, second).c10) <= 1e-12;
}

bool equal_up_to_global_phase(const TwoModeOnePhoton& a, const TwoModeOnePhoton& b, double tol) {
    // Align phases on the larger component of a, then compare componentwise.
    const Complex ref_a = std::abs(a.c10) >= std::abs(a.c01) ? a.c10 : a.c01;
    const Complex ref_b = std::abs(a.c10) >= std::abs(a.c01) ? b.c10 : b.c01;
    if (std::abs(ref_a) < tol || std::abs(ref_b) < tol)
        return std::abs(a.c10 - b.c10) <= tol && std::abs(a.c01 - b.c01) <= tol;
    const Complex phase = (ref_b / std::abs(ref_b)) / (ref_a / std::abs(ref_a));
    return std::abs(phase * a.c10 - b.c10) <= tol && std::abs(phase * a.c01 - b.c01) <= tol;
}

}  // namespace oscnet
