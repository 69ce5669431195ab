#include "oscnet/propagator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oscnet {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

Propagator mu_closed_form(const NetworkSpec& spec, double t) {
    const int s = spec.s;
    const double t_over_tau = t / spec.tau;

    // Per-l phase factors shared by every (j,k): the time part of the bracket
    // and the excitation-index phase.
    std::vector<Complex> time_phase(static_cast<size_t>(s));
    for (int l = 1; l <= s; ++l) {
        const double bracket = -kTwoPi * t_over_tau * l / s;
        const double excitation = -kTwoPi * spec.m[static_cast<size_t>(l - 1)] * t_over_tau;
        time_phase[static_cast<size_t>(l - 1)] = std::polar(1.0, bracket + excitation);
    }

    // The j,k dependence enters only through the offset d = j - k.
    std::vector<Complex> by_offset(static_cast<size_t>(2 * s - 1));
    for (int d = -(s - 1); d <= s - 1; ++d) {
        Complex sum = 0.0;
        for (int l = 1; l <= s; ++l) {
            const long long dl = static_cast<long long>(d) * l % s;
            sum += std::polar(1.0, kTwoPi * static_cast<double>(dl) / s) * time_phase[static_cast<size_t>(l - 1)];
        }
        by_offset[static_cast<size_t>(d + s - 1)] = sum / static_cast<double>(s);
    }

    Propagator prop;
    prop.s = s;
    prop.t = t;
    prop.mu.resize(s, s);
    for (int j = 0; j < s; ++j)
        for (int k = 0; k < s; ++k)
            prop.mu(j, k) = by_offset[static_cast<size_t>(j - k + s - 1)];
    prop.nu = Eigen::MatrixXcd::Zero(s, s);
    return prop;
}

Propagator mu_spectral(const NetworkSpec& spec, double t) {
    const Eigen::MatrixXcd w = dft_matrix(spec.s).m;
    const ModeSpectrum mode = mode_frequencies(spec);

    Eigen::VectorXcd phases(spec.s);
    for (int j = 0; j < spec.s; ++j)
        phases(j) = std::polar(1.0, -mode.omega[static_cast<size_t>(j)] * t);

    Propagator prop;
    prop.s = spec.s;
    prop.t = t;
    prop.mu = w * phases.asDiagonal() * w.adjoint();
    prop.nu = Eigen::MatrixXcd::Zero(spec.s, spec.s);
    return prop;
}

Eigen::MatrixXcd mu_exponential_oracle(const CouplingMatrix& lambda, double t) {
    return exp_minus_i(lambda.lambda, t);
}

TransferCheck check_transfer_conditions(const Propagator& prop, int from, int to) {
    if (from < 1 || from > prop.s || to < 1 || to > prop.s)
        throw std::invalid_argument("check_transfer_conditions: site index out of range");

    TransferCheck check;
    for (int j = 0; j < prop.s; ++j) {
        const Complex expected = (j == from - 1) ? Complex(1.0) : Complex(0.0);
        check.mu_residual = std::max(check.mu_residual, std::abs(prop.mu(to - 1, j) - expected));
        check.nu_residual = std::max(check.nu_residual, std::abs(prop.nu(to - 1, j)));
    }
    check.pass = check.mu_residual <= 1e-10 && check.nu_residual <= 1e-10;
    return check;
}

}  // namespace oscnet
