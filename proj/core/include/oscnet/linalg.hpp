#ifndef OSCNET_LINALG_HPP
#define OSCNET_LINALG_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace oscnet {

using Complex = std::complex<double>;

/// max-abs entry norm; the norm used by every structural identity check
double max_abs(const Eigen::MatrixXcd& a);

/// ||A - A^dagger||_max
double hermiticity_error(const Eigen::MatrixXcd& a);

/// ||U^dagger U - I||_max
double unitarity_error(const Eigen::MatrixXcd& u);

struct HermitianEigen {
    Eigen::VectorXd values;    // ascending
    Eigen::MatrixXcd vectors;  // columns
};

/// Eigendecomposition of a Hermitian matrix.  Throws std::invalid_argument if
/// the input is not Hermitian (relative tolerance 1e-9 on the max-abs scale).
HermitianEigen eigh(const Eigen::MatrixXcd& h);

/// exp(-i H t) for Hermitian H, built from the eigendecomposition.  All matrix
/// exponentials in this library go through here or through a known
/// diagonalizer; there is no Pade/scaling-squaring path.
Eigen::MatrixXcd exp_minus_i(const Eigen::MatrixXcd& h, double t);

/// Same, reusing a precomputed decomposition.
Eigen::MatrixXcd exp_minus_i(const HermitianEigen& eig, double t);

}  // namespace oscnet

#endif
