#include "oscnet/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oscnet {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

CouplingMatrix synthesize_couplings(const NetworkSpec& spec) {
    const int s = spec.s;
    const double prefactor = kTwoPi / (s * spec.tau);

    // One weighted phase sum per site offset d = j - k; the matrix is a
    // function of the offset only (circulant up to Hermitian conjugation).
    std::vector<Complex> by_offset(static_cast<size_t>(2 * s - 1));
    for (int d = -(s - 1); d <= s - 1; ++d) {
        Complex sum = 0.0;
        for (int l = 1; l <= s; ++l) {
            const double weight = static_cast<double>(l) / s + spec.m[static_cast<size_t>(l - 1)];
            const long long dl = static_cast<long long>(d) * l % s;
            sum += weight * std::polar(1.0, kTwoPi * static_cast<double>(dl) / s);
        }
        by_offset[static_cast<size_t>(d + s - 1)] = prefactor * sum;
    }

    Eigen::MatrixXcd lambda(s, s);
    for (int j = 0; j < s; ++j)
        for (int k = 0; k < s; ++k)
            lambda(j, k) = by_offset[static_cast<size_t>(j - k + s - 1)];
    return CouplingMatrix{std::move(lambda), spec.tau, spec.m};
}

CouplingMatrix synthesize_couplings_spectral(const NetworkSpec& spec) {
    const Eigen::MatrixXcd w = dft_matrix(spec.s).m;
    const Eigen::MatrixXcd omega = mode_frequencies(spec).to_diagonal();
    return CouplingMatrix{w * omega * w.adjoint(), spec.tau, spec.m};
}

double diagonal_element(const NetworkSpec& spec) {
    double sum = 0.0;
    for (int l = 1; l <= spec.s; ++l)
        sum += static_cast<double>(l) / spec.s + spec.m[static_cast<size_t>(l - 1)];
    return kTwoPi / (spec.s * spec.tau) * sum;
}

Eigen::MatrixXcd TwoModeForm::coupling() const {
    Eigen::MatrixXcd lambda(2, 2);
    lambda << omega, c, c, omega;
    return lambda;
}

TwoModeForm two_mode_closed_form(int m1, int m2, double c) {
    if (m1 < 0 || m2 < 0)
        throw std::invalid_argument("two_mode_closed_form: excitation indices must be non-negative");
    if (!(c > 0.0))
        throw std::invalid_argument("two_mode_closed_form: coupling must be positive");
    const int numer = 1 + 2 * m2 - 2 * m1;
    if (numer <= 0)
        throw std::invalid_argument("two_mode_closed_form: 1 + 2*m2 - 2*m1 must be positive "
                                    "(otherwise the transfer time is not positive)");
    TwoModeForm form;
    form.m1 = m1;
    form.m2 = m2;
    form.c = c;
    form.omega = c * (3 + 2 * m1 + 2 * m2) / numer;
    form.tau = (0.5 + m2 - m1) * kPi / c;
    return form;
}

double BogoliubovReport::max_residual() const {
    return *std::max_element(residuals.begin(), residuals.end());
}

BogoliubovReport validate_bogoliubov(const BogoliubovPair& pair) {
    const auto& w = pair.W;
    const auto& v = pair.V;
    if (w.rows() != w.cols() || v.rows() != v.cols())
        throw std::invalid_argument("validate_bogoliubov: matrices must be square");
    if (w.rows() != v.rows())
        throw std::invalid_argument("validate_bogoliubov: W and V dimensions differ");

    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(w.rows(), w.cols());
    BogoliubovReport report;
    report.residuals[0] = max_abs(w * w.adjoint() - v * v.adjoint() - id);
    report.residuals[1] = max_abs(w.adjoint() * w - v.transpose() * v.conjugate() - id);
    report.residuals[2] = max_abs(w * v.transpose() - v * w.transpose());
    report.residuals[3] = max_abs(w.adjoint() * v - v.transpose() * w.conjugate());
    report.pass = report.max_residual() <= 1e-10;
    return report;
}

double diagonalizer_residual(const Eigen::MatrixXcd& u, const ModeSpectrum& mode,
                             double tau, const PermutationMatrix& target) {
    if (u.rows() != mode.size() || u.rows() != target.dim())
        throw std::invalid_argument("diagonalizer_residual: dimension mismatch");
    Eigen::MatrixXcd lhs(u.rows(), u.cols());
    for (int j = 0; j < mode.size(); ++j)
        lhs.row(j) = std::polar(1.0, -mode.omega[static_cast<size_t>(j)] * tau) * u.row(j);
    return max_abs(lhs - u * target.to_dense());
}

CouplingMatrix synthesize_for_permutation(int s, double tau, const PermutationMatrix& perm,
                                          const std::vector<int>& m) {
    if (perm.dim() != s)
        throw std::invalid_argument("synthesize_for_permutation: permutation dimension != s");
    if (!(tau > 0.0))
        throw std::invalid_argument("synthesize_for_permutation: tau must be positive");
    if (static_cast<int>(m.size()) != s)
        throw std::invalid_argument("synthesize_for_permutation: need exactly s excitation indices");
    for (int mj : m)
        if (mj < 0)
            throw std::invalid_argument("synthesize_for_permutation: excitation indices must be non-negative");

    Eigen::MatrixXcd lambda = Eigen::MatrixXcd::Zero(s, s);
    std::vector<bool> visited(static_cast<size_t>(s), false);
    size_t next_m = 0;

    for (int start = 0; start < s; ++start) {
        if (visited[static_cast<size_t>(start)]) continue;

        // Collect the cycle through `start` in traversal order.
        std::vector<int> cycle;
        for (int site = start; !visited[static_cast<size_t>(site)];
             site = perm.image[static_cast<size_t>(site)]) {
            visited[static_cast<size_t>(site)] = true;
            cycle.push_back(site);
        }

        const int len = static_cast<int>(cycle.size());
        std::vector<int> cycle_m(m.begin() + static_cast<long>(next_m),
                                 m.begin() + static_cast<long>(next_m) + len);
        next_m += static_cast<size_t>(len);

        // The L-ring synthesis on the cycle, in traversal order, makes the
        // propagator at tau act as the one-step shift c_i -> c_{i+1}, which is
        // exactly perm restricted to the cycle.  A fixed point reduces to
        // lambda_jj = 2*pi*(1 + m_j)/tau.
        const CouplingMatrix block = synthesize_couplings(NetworkSpec(len, tau, std::move(cycle_m)));
        for (int a = 0; a < len; ++a)
            for (int b = 0; b < len; ++b)
                lambda(cycle[static_cast<size_t>(a)], cycle[static_cast<size_t>(b)]) = block.lambda(a, b);
    }

    return CouplingMatrix{std::move(lambda), tau, m};
}

}  // namespace oscnet
