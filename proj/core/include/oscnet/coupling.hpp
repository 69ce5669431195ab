#ifndef OSCNET_COUPLING_HPP
#define OSCNET_COUPLING_HPP

#include <array>
#include <vector>

#include "oscnet/lattice.hpp"
#include "oscnet/linalg.hpp"
#include "oscnet/network.hpp"

namespace oscnet {

/// Hermitian matrix of coupling coefficients lambda_jk (rad/s, hbar = 1).
/// Invariants: Hermitian, constant diagonal equal to trace(Omega)/s, and the
/// eigenvalue multiset equals the mode spectrum of the producing network.
/// `tau` and `m` are carried along as provenance for serialization.
struct CouplingMatrix {
    Eigen::MatrixXcd lambda;
    double tau = 0.0;
    std::vector<int> m;

    int size() const { return static_cast<int>(lambda.rows()); }
};

/// Couplings that realize perfect cyclic transfer with period tau:
///   lambda_jk = (2*pi/(s*tau)) * sum_l (l/s + m_l) * exp(2*pi*i*(j-k)*l/s).
/// Built by the explicit summation; the spectral sandwich of the DFT around
/// diag(omega) reproduces it to 1e-12 and is exercised by the tests.
CouplingMatrix synthesize_couplings(const NetworkSpec& spec);

/// Spectral construction route for the same matrix: conjugate diag(omega) by
/// the DFT unitary.  Kept as a separately callable path so the two routes can
/// be compared entry by entry.
CouplingMatrix synthesize_couplings_spectral(const NetworkSpec& spec);

/// The j-independent diagonal coupling, (2*pi/(s*tau)) * sum_l (l/s + m_l);
/// equals trace(Omega)/s.
double diagonal_element(const NetworkSpec& spec);

/// Two-oscillator closed form: common frequency omega, exchange coupling c,
/// and the transfer period they imply.
///   c/omega = (1 + 2*m2 - 2*m1) / (3 + 2*m1 + 2*m2)
///   tau * c = (1/2 + m2 - m1) * pi
struct TwoModeForm {
    double omega = 0.0;  // rad/s
    double c = 0.0;      // rad/s
    int m1 = 0;
    int m2 = 0;
    double tau = 0.0;    // s

    /// [[omega, c], [c, omega]]
    Eigen::MatrixXcd coupling() const;
};

/// Solve the two-mode family for given excitation indices and coupling
/// strength.  Requires 1 + 2*m2 - 2*m1 > 0 so that c > 0 gives tau > 0.
TwoModeForm two_mode_closed_form(int m1, int m2, double c);

/// Candidate mode-mixing transformation a' = W a + V a^dag.
struct BogoliubovPair {
    Eigen::MatrixXcd W;
    Eigen::MatrixXcd V;
};

/// Residuals of the four commutation-preservation conditions
///   W W^dag - V V^dag = I         (boson norm)
///   W^dag W - V^T V^* = I         (dual norm)
///   W V^T  - V W^T    = 0         (pair symmetry)
///   W^dag V - V^T W^* = 0         (pair adjoint)
struct BogoliubovReport {
    std::array<double, 4> residuals{};
    bool pass = false;

    double max_residual() const;
};

/// Checks the four conditions at tolerance 1e-10.  Throws on a W/V dimension
/// mismatch or non-square input.
BogoliubovReport validate_bogoliubov(const BogoliubovPair& pair);

/// ||exp(-i Omega tau) U - U P||_max for a candidate diagonalizer U of the
/// permutation P.  Zero exactly when U conjugates P onto the phase matrix of
/// the spectrum; used by the uniqueness spot-checks, where random unitaries
/// must fail by a wide margin.
double diagonalizer_residual(const Eigen::MatrixXcd& u, const ModeSpectrum& mode,
                             double tau, const PermutationMatrix& target);

/// Couplings whose propagator at t = tau equals an arbitrary permutation, not
/// just the ring shift.  The permutation is split into disjoint cycles; each
/// cycle of length L gets the L-ring synthesis with the next L entries of `m`
/// consumed in cycle-traversal order (cycles ordered by their smallest site,
/// each traversed starting from that site).  A fixed point becomes a bare
/// oscillator at omega = 2*pi*(1 + m_j)/tau.
CouplingMatrix synthesize_for_permutation(int s, double tau, const PermutationMatrix& perm,
                                          const std::vector<int>& m);

}  // namespace oscnet

#endif
