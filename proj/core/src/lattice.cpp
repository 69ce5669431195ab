#include "oscnet/lattice.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oscnet {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_positive_size(int s, const char* who) {
    if (s < 1)
        throw std::invalid_argument(std::string(who) + ": ring size must be >= 1");
}
}  // namespace

Eigen::MatrixXcd PermutationMatrix::to_dense() const {
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(dim(), dim());
    for (int k = 0; k < dim(); ++k)
        p(image[static_cast<size_t>(k)], k) = 1.0;
    return p;
}

PermutationMatrix PermutationMatrix::from_image(std::vector<int> image) {
    const int n = static_cast<int>(image.size());
    if (n == 0)
        throw std::invalid_argument("PermutationMatrix: empty image");
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int row : image) {
        if (row < 0 || row >= n)
            throw std::invalid_argument("PermutationMatrix: image entry out of range");
        if (seen[static_cast<size_t>(row)])
            throw std::invalid_argument("PermutationMatrix: image is not a bijection");
        seen[static_cast<size_t>(row)] = true;
    }
    return PermutationMatrix{std::move(image)};
}

PermutationMatrix PermutationMatrix::power(int n) const {
    if (n < 0)
        throw std::invalid_argument("PermutationMatrix::power: negative exponent");
    std::vector<int> out(image.size());
    for (size_t k = 0; k < image.size(); ++k) {
        int pos = static_cast<int>(k);
        for (int step = 0; step < n; ++step)
            pos = image[static_cast<size_t>(pos)];
        out[k] = pos;
    }
    return PermutationMatrix{std::move(out)};
}

bool PermutationMatrix::is_identity() const {
    for (size_t k = 0; k < image.size(); ++k)
        if (image[k] != static_cast<int>(k)) return false;
    return true;
}

Eigen::MatrixXcd ModeSpectrum::to_diagonal() const {
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(size(), size());
    for (int j = 0; j < size(); ++j)
        d(j, j) = omega[static_cast<size_t>(j)];
    return d;
}

double ModeSpectrum::trace() const {
    double sum = 0.0;
    for (double w : omega) sum += w;
    return sum;
}

PermutationMatrix cyclic_shift_matrix(int s) {
    require_positive_size(s, "cyclic_shift_matrix");
    std::vector<int> image(static_cast<size_t>(s));
    for (int k = 0; k < s; ++k)
        image[static_cast<size_t>(k)] = (k + 1) % s;
    return PermutationMatrix{std::move(image)};
}

UnitaryMatrix dft_matrix(int s) {
    require_positive_size(s, "dft_matrix");
    const double norm = 1.0 / std::sqrt(static_cast<double>(s));
    Eigen::MatrixXcd w(s, s);
    for (int j = 0; j < s; ++j)
        for (int k = 0; k < s; ++k) {
            // 1-based j*k in the phase, reduced mod s to keep the argument small
            const long long jk = static_cast<long long>(j + 1) * (k + 1) % s;
            w(j, k) = norm * std::polar(1.0, kTwoPi * static_cast<double>(jk) / s);
        }
    return UnitaryMatrix{std::move(w)};
}

std::vector<Complex> shift_eigenphases(int s) {
    require_positive_size(s, "shift_eigenphases");
    const Eigen::MatrixXcd w = dft_matrix(s).m;
    const Eigen::MatrixXcd conjugated = w.adjoint() * cyclic_shift_matrix(s).to_dense() * w;

    Eigen::MatrixXcd off = conjugated;
    off.diagonal().setZero();
    if (max_abs(off) > 1e-12)
        throw std::runtime_error("shift_eigenphases: conjugated shift is not diagonal");

    std::vector<Complex> phases(static_cast<size_t>(s));
    for (int j = 0; j < s; ++j)
        phases[static_cast<size_t>(j)] = conjugated(j, j);
    return phases;
}

ModeSpectrum mode_frequencies(const NetworkSpec& spec) {
    ModeSpectrum mode;
    mode.omega.resize(static_cast<size_t>(spec.s));
    for (int j = 1; j <= spec.s; ++j)
        mode.omega[static_cast<size_t>(j - 1)] =
            kTwoPi / spec.tau * (static_cast<double>(j) / spec.s + spec.m[static_cast<size_t>(j - 1)]);
    return mode;
}

}  // namespace oscnet
