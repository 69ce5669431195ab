#ifndef OSCNET_CHAR_STATES_HPP
#define OSCNET_CHAR_STATES_HPP

#include <vector>

#include "oscnet/linalg.hpp"
#include "oscnet/network.hpp"

namespace oscnet {

/// Laguerre polynomial L_n(x) by the three-term recurrence
///   (k+1) L_{k+1} = (2k+1-x) L_k - k L_{k-1}.
/// Double precision keeps this accurate for n <= 50 at |x| <= 25 (the
/// |alpha| <= 5 window used here); beyond that the recurrence loses digits
/// to cancellation.
double laguerre(int n, double x);

/// Characteristic function of the number state |n>:
///   exp(-|alpha|^2/2) * L_n(|alpha|^2), real for every alpha.
Complex fock_char(int n, Complex alpha);

/// Characteristic function of the coherent state |beta>:
///   exp(-|alpha|^2/2) * exp(alpha*conj(beta) - conj(alpha)*beta).
/// The second factor is a pure phase, so |value| = exp(-|alpha|^2/2).
Complex coherent_char(Complex beta, Complex alpha);

/// Reduced characteristic function of site j (1-based) at time t when the
/// network started in |n, 0, ..., 0>:
///   exp(-|alpha|^2/2) * L_n(g_j(t) * |alpha|^2).
Complex reduced_fock_char(const NetworkSpec& spec, int site, double t, int n, Complex alpha);

/// Reduced characteristic function of site j at time t for the initial state
/// |beta, 0, ..., 0>:
///   exp(-|alpha|^2/2 + mu_j1(t)*alpha*conj(beta) - conj(mu_j1(t))*conj(alpha)*beta).
Complex reduced_coherent_char(const NetworkSpec& spec, int site, double t, Complex beta,
                              Complex alpha);

/// Transfer indicator g_j(t) = |mu_j1(t)|^2 in [0, 1]: the weight of site 1's
/// initial state currently sitting at site j.  g_j(t) = g_1(t - (j-1)*tau).
double g_function(const NetworkSpec& spec, int site, double t);

/// Symbolic reduced characteristic function, evaluable at any point.  Two
/// closed forms cover the dynamics of this Hamiltonian family:
///   number state with a transfer weight   exp(-|a|^2/2) L_n(g |a|^2)
///   coherent state with an amplitude      exp(-|a|^2/2 + amp a b* - amp* a* b)
/// Evaluation at 0 gives 1 by construction.
class CharFunction {
public:
    /// g must lie in [0, 1]; values within 1e-12 outside are clamped.
    static CharFunction fock(int n, double g);
    static CharFunction coherent(Complex beta, Complex amp);

    /// The reduced state of `site` at time `t` for the initial condition
    /// |n, 0, ..., 0> or |beta, 0, ..., 0>.
    static CharFunction reduced_fock(const NetworkSpec& spec, int site, double t, int n);
    static CharFunction reduced_coherent(const NetworkSpec& spec, int site, double t,
                                         Complex beta);

    Complex operator()(Complex alpha) const;

    bool is_fock() const { return kind_ == Kind::kFock; }
    int photon_number() const { return n_; }
    double weight() const { return g_; }
    Complex amplitude() const { return amp_; }

private:
    enum class Kind { kFock, kCoherent };
    Kind kind_ = Kind::kFock;
    int n_ = 0;
    double g_ = 1.0;
    Complex beta_{};
    Complex amp_{};
};

struct GPoint {
    double t = 0.0;  // seconds
    double g = 0.0;
};

/// g_j sampled on a uniform grid, both endpoints included.
struct GSeries {
    NetworkSpec spec;
    int site = 1;
    std::vector<GPoint> points;
};

/// `steps` is the number of grid points (>= 2); spacing (t_max-t_min)/(steps-1).
GSeries sweep_g(const NetworkSpec& spec, int site, double t_min, double t_max, int steps);

}  // namespace oscnet

#endif
