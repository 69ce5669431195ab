#include "oscnet/linalg.hpp"

#include <stdexcept>

namespace oscnet {

double max_abs(const Eigen::MatrixXcd& a) {
    if (a.size() == 0) return 0.0;
    return a.cwiseAbs().maxCoeff();
}

double hermiticity_error(const Eigen::MatrixXcd& a) {
    return max_abs(a - a.adjoint());
}

double unitarity_error(const Eigen::MatrixXcd& u) {
    return max_abs(u.adjoint() * u - Eigen::MatrixXcd::Identity(u.cols(), u.cols()));
}

HermitianEigen eigh(const Eigen::MatrixXcd& h) {
    if (h.rows() != h.cols())
        throw std::invalid_argument("eigh: matrix must be square");
    const double scale = std::max(1.0, max_abs(h));
    if (hermiticity_error(h) > 1e-9 * scale)
        throw std::invalid_argument("eigh: matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigh: eigendecomposition failed to converge");
    return HermitianEigen{solver.eigenvalues(), solver.eigenvectors()};
}

Eigen::MatrixXcd exp_minus_i(const HermitianEigen& eig, double t) {
    const auto n = eig.values.size();
    Eigen::VectorXcd phases(n);
    for (Eigen::Index k = 0; k < n; ++k)
        phases(k) = std::polar(1.0, -eig.values(k) * t);
    return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

Eigen::MatrixXcd exp_minus_i(const Eigen::MatrixXcd& h, double t) {
    return exp_minus_i(eigh(h), t);
}

}  // namespace oscnet
