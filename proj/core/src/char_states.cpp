#include "oscnet/char_states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "oscnet/propagator.hpp"

namespace oscnet {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_site(const NetworkSpec& spec, int site, const char* who) {
    if (site < 1 || site > spec.s)
        throw std::invalid_argument(std::string(who) + ": site index out of range");
}

/// mu_j1(t) without materializing the full matrix.
Complex mu_site1(const NetworkSpec& spec, int site, double t) {
    const int s = spec.s;
    const double t_over_tau = t / spec.tau;
    Complex sum = 0.0;
    for (int l = 1; l <= s; ++l) {
        const double phase = kTwoPi * ((site - 1 - t_over_tau) * l / s -
                                       spec.m[static_cast<size_t>(l - 1)] * t_over_tau);
        sum += std::polar(1.0, phase);
    }
    return sum / static_cast<double>(s);
}
}  // namespace

double laguerre(int n, double x) {
    if (n < 0)
        throw std::invalid_argument("laguerre: order must be non-negative");
    if (n == 0) return 1.0;
    double prev = 1.0;       // L_0
    double curr = 1.0 - x;   // L_1
    for (int k = 1; k < n; ++k) {
        const double next = ((2 * k + 1 - x) * curr - k * prev) / (k + 1);
        prev = curr;
        curr = next;
    }
    return curr;
}

Complex fock_char(int n, Complex alpha) {
    const double a2 = std::norm(alpha);
    return Complex(std::exp(-0.5 * a2) * laguerre(n, a2));
}

Complex coherent_char(Complex beta, Complex alpha) {
    return std::exp(-0.5 * std::norm(alpha) + alpha * std::conj(beta) - std::conj(alpha) * beta);
}

Complex reduced_fock_char(const NetworkSpec& spec, int site, double t, int n, Complex alpha) {
    require_site(spec, site, "reduced_fock_char");
    return CharFunction::reduced_fock(spec, site, t, n)(alpha);
}

Complex reduced_coherent_char(const NetworkSpec& spec, int site, double t, Complex beta,
                              Complex alpha) {
    require_site(spec, site, "reduced_coherent_char");
    return CharFunction::reduced_coherent(spec, site, t, beta)(alpha);
}

double g_function(const NetworkSpec& spec, int site, double t) {
    require_site(spec, site, "g_function");
    return std::norm(mu_site1(spec, site, t));
}

CharFunction CharFunction::fock(int n, double g) {
    if (n < 0)
        throw std::invalid_argument("CharFunction: photon number must be non-negative");
    if (g < -1e-12 || g > 1.0 + 1e-12)
        throw std::invalid_argument("CharFunction: transfer weight must lie in [0, 1]");
    CharFunction f;
    f.kind_ = Kind::kFock;
    f.n_ = n;
    f.g_ = std::clamp(g, 0.0, 1.0);
    return f;
}

CharFunction CharFunction::coherent(Complex beta, Complex amp) {
    CharFunction f;
    f.kind_ = Kind::kCoherent;
    f.beta_ = beta;
    f.amp_ = amp;
    return f;
}

CharFunction CharFunction::reduced_fock(const NetworkSpec& spec, int site, double t, int n) {
    require_site(spec, site, "CharFunction::reduced_fock");
    return fock(n, std::norm(mu_site1(spec, site, t)));
}

CharFunction CharFunction::reduced_coherent(const NetworkSpec& spec, int site, double t,
                                            Complex beta) {
    require_site(spec, site, "CharFunction::reduced_coherent");
    return coherent(beta, mu_site1(spec, site, t));
}

Complex CharFunction::operator()(Complex alpha) const {
    const double a2 = std::norm(alpha);
    if (kind_ == Kind::kFock)
        return Complex(std::exp(-0.5 * a2) * laguerre(n_, g_ * a2));
    return std::exp(-0.5 * a2 + amp_ * alpha * std::conj(beta_) -
                    std::conj(amp_) * std::conj(alpha) * beta_);
}

GSeries sweep_g(const NetworkSpec& spec, int site, double t_min, double t_max, int steps) {
    require_site(spec, site, "sweep_g");
    if (!(t_min < t_max))
        throw std::invalid_argument("sweep_g: need t_min < t_max");
    if (steps < 2)
        throw std::invalid_argument("sweep_g: need at least 2 grid points");

    GSeries series{spec, site, {}};
    series.points.reserve(static_cast<size_t>(steps));
    const double span = t_max - t_min;
    for (int i = 0; i < steps; ++i) {
        const double t = t_min + span * i / (steps - 1);
        series.points.push_back(GPoint{t, g_function(spec, site, t)});
    }
    return series;
}

}  // namespace oscnet
