// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Tolerances are fixed here, not configurable, so a regression cannot be
// waved through by loosening a knob at run time.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oscnet/beamsplitter.hpp"
#include "oscnet/char_states.hpp"
#include "oscnet/coupling.hpp"
#include "oscnet/fock.hpp"
#include "oscnet/propagator.hpp"
#include "support/oracles.hpp"

#ifndef OSCNET_CLI_PATH
#define OSCNET_CLI_PATH "oscnet"
#endif
#ifndef OSCNET_GOLDEN_DIR
#define OSCNET_GOLDEN_DIR "golden"
#endif

using namespace oscnet;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    std::printf("%s %2d %s (%s)\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
    if (!pass) ++g_failures;
}

std::string residual_detail(double residual, double limit) {
    std::ostringstream out;
    out << "max residual " << residual << ", limit " << limit;
    return out.str();
}

double seconds_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<NetworkSpec> transfer_sweep_specs() {
    std::mt19937_64 rng(1001);
    std::uniform_int_distribution<int> m_dist(0, 5);
    std::vector<NetworkSpec> specs;
    for (int s = 2; s <= 16; ++s)
        for (double tau : {0.5, 1.0, 3.0}) {
            specs.push_back(NetworkSpec::uniform(s, tau));
            for (int extra = 0; extra < 3; ++extra) {
                std::vector<int> m(static_cast<size_t>(s));
                for (int& mj : m) mj = m_dist(rng);
                specs.push_back(NetworkSpec(s, tau, std::move(m)));
            }
        }
    return specs;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return {};
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// 1. mu(tau) = C through all three routes across the full sweep, under 5 s.
void criterion_cyclic_transfer(const std::vector<NetworkSpec>& specs) {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (const NetworkSpec& spec : specs) {
        const Eigen::MatrixXcd shift = cyclic_shift_matrix(spec.s).to_dense();
        worst = std::max(worst, max_abs(mu_closed_form(spec, spec.tau).mu - shift));
        worst = std::max(worst, max_abs(mu_spectral(spec, spec.tau).mu - shift));
        worst = std::max(worst,
                         max_abs(mu_exponential_oracle(synthesize_couplings(spec), spec.tau) - shift));
    }
    const double elapsed = seconds_since(start);
    report(1, "cyclic transfer identity, all routes",
           worst <= 1e-11 && elapsed < 5.0,
           residual_detail(worst, 1e-11) + ", " + std::to_string(elapsed) + " s");
}

// 2. mu(s*tau) = I across the same sweep.
void criterion_recurrence(const std::vector<NetworkSpec>& specs) {
    double worst = 0.0;
    for (const NetworkSpec& spec : specs) {
        const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(spec.s, spec.s);
        worst = std::max(worst, max_abs(mu_spectral(spec, spec.s * spec.tau).mu - id));
        worst = std::max(worst, max_abs(mu_closed_form(spec, spec.s * spec.tau).mu - id));
    }
    report(2, "recurrence after s periods", worst <= 1e-11, residual_detail(worst, 1e-11));
}

// 3. mu(n*tau) = mu(tau)^n for n = 1..2s.
void criterion_power_law(const std::vector<NetworkSpec>& specs) {
    double worst = 0.0;
    for (const NetworkSpec& spec : specs) {
        const Eigen::MatrixXcd step = mu_closed_form(spec, spec.tau).mu;
        Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(spec.s, spec.s);
        for (int n = 1; n <= 2 * spec.s; ++n) {
            power = (power * step).eval();
            worst = std::max(worst, max_abs(mu_closed_form(spec, n * spec.tau).mu - power));
        }
    }
    report(3, "integer-period power law", worst <= 1e-10, residual_detail(worst, 1e-10));
}

// 4. three-route equivalence on 100 random (spec, t).
void criterion_route_equivalence() {
    std::mt19937_64 rng(1004);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const NetworkSpec spec = testing::random_spec(rng);
        std::uniform_real_distribution<double> t_dist(-10.0 * spec.s * spec.tau,
                                                      10.0 * spec.s * spec.tau);
        const double t = t_dist(rng);
        const Eigen::MatrixXcd closed = mu_closed_form(spec, t).mu;
        const Eigen::MatrixXcd spectral = mu_spectral(spec, t).mu;
        const Eigen::MatrixXcd exact = mu_exponential_oracle(synthesize_couplings(spec), t);
        worst = std::max(worst, max_abs(closed - spectral));
        worst = std::max(worst, max_abs(closed - exact));
        worst = std::max(worst, max_abs(spectral - exact));
    }
    report(4, "route equivalence on random samples", worst <= 1e-10,
           residual_detail(worst, 1e-10));
}

// 5. row/column shift identities on 100 random (j, k, t).
void criterion_shift_properties() {
    std::mt19937_64 rng(1005);
    const std::vector<NetworkSpec> specs = {
        NetworkSpec::uniform(7, 1.0),
        NetworkSpec(7, 1.0, {0, 1, 0, 0, 0, 2, 0}),
        NetworkSpec(5, 0.5, {3, 0, 1, 0, 2}),
        NetworkSpec(9, 3.0, {0, 0, 4, 0, 1, 0, 0, 5, 0}),
    };
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const NetworkSpec& spec = specs[static_cast<size_t>(trial) % specs.size()];
        std::uniform_int_distribution<int> index(1, spec.s);
        std::uniform_real_distribution<double> t_dist(-2.0 * spec.s * spec.tau,
                                                      2.0 * spec.s * spec.tau);
        const int j = index(rng), k = index(rng);
        const double t = t_dist(rng);
        const Eigen::MatrixXcd now = mu_closed_form(spec, t).mu;
        const Eigen::MatrixXcd before = mu_closed_form(spec, t - spec.tau).mu;
        const int row_source = (j == 1) ? spec.s : j - 1;     // mu_jk(t) = mu_(j-1)k(t-tau)
        const int col_target = (k == spec.s) ? 1 : k + 1;     // mu_jk(t) = mu_j(k+1)(t-tau)
        worst = std::max(worst, std::abs(now(j - 1, k - 1) - before(row_source - 1, k - 1)));
        worst = std::max(worst, std::abs(now(j - 1, k - 1) - before(j - 1, col_target - 1)));
    }
    report(5, "row and column shift identities", worst <= 1e-12, residual_detail(worst, 1e-12));
}

// 6. s = 2 closed form and the c/omega ratio.
void criterion_two_mode_form() {
    double worst = 0.0;
    double worst_ratio = 0.0;
    for (int m1 = 0; m1 <= 2; ++m1)
        for (int m2 = 0; m2 <= 2; ++m2)
            for (double tau : {0.5, 1.0}) {
                const auto lam = synthesize_couplings(NetworkSpec(2, tau, {m1, m2}));
                const double pi_over_tau = std::numbers::pi / tau;
                Eigen::MatrixXcd expected(2, 2);
                expected << pi_over_tau * (1.5 + m1 + m2), pi_over_tau * (0.5 + m2 - m1),
                    pi_over_tau * (0.5 + m2 - m1), pi_over_tau * (1.5 + m1 + m2);
                worst = std::max(worst, max_abs(lam.lambda - expected));

                const double ratio = lam.lambda(0, 1).real() / lam.lambda(0, 0).real();
                const double rational =
                    (1.0 + 2.0 * m2 - 2.0 * m1) / (3.0 + 2.0 * m1 + 2.0 * m2);
                worst_ratio = std::max(worst_ratio, std::abs(ratio - rational));
            }
    report(6, "two-oscillator closed form", worst <= 1e-12 && worst_ratio <= 1e-13,
           residual_detail(worst, 1e-12) + ", ratio residual " + std::to_string(worst_ratio));
}

// 7. ring sweep endpoints plus byte-stable CSV through the CLI.
void criterion_figure_one() {
    const NetworkSpec spec = NetworkSpec::uniform(7, 1.0);
    const GSeries series = sweep_g(spec, 1, 0.0, 7.0, 701);
    double worst = std::abs(series.points.front().g - 1.0);
    worst = std::max(worst, std::abs(series.points.back().g - 1.0));
    for (int k = 1; k <= 6; ++k)
        worst = std::max(worst, series.points[static_cast<size_t>(100 * k)].g);

    const std::string flags = " sweep-g --s 7 --tau 1 --m 0 --site 1 --t-max 7 --steps 701 --out ";
    const std::string out1 = "/tmp/oscnet_acceptance_sweep1.csv";
    const std::string out2 = "/tmp/oscnet_acceptance_sweep2.csv";
    const bool ran = std::system((std::string(OSCNET_CLI_PATH) + flags + out1).c_str()) == 0 &&
                     std::system((std::string(OSCNET_CLI_PATH) + flags + out2).c_str()) == 0;
    const std::string first = slurp(out1);
    const bool stable = ran && !first.empty() && first == slurp(out2) &&
                        first == slurp(std::string(OSCNET_GOLDEN_DIR) + "/sweep_g_s7_m0_701.csv");
    std::remove(out1.c_str());
    std::remove(out2.c_str());

    report(7, "ring sweep reproduction, byte-stable CSV", worst <= 1e-12 && stable,
           residual_detail(worst, 1e-12) + (stable ? ", golden file matched" : ", GOLDEN MISMATCH"));
}

// 8. excited configuration: same sweep at integer periods, different between.
void criterion_figure_two() {
    const GSeries base = sweep_g(NetworkSpec::uniform(7, 1.0), 1, 0.0, 7.0, 701);
    const GSeries excited =
        sweep_g(NetworkSpec(7, 1.0, {0, 1, 0, 0, 0, 2, 0}), 1, 0.0, 7.0, 701);
    double worst_at_periods = 0.0;
    double max_interior_gap = 0.0;
    for (size_t i = 0; i < base.points.size(); ++i) {
        const double gap = std::abs(base.points[i].g - excited.points[i].g);
        if (i % 100 == 0)
            worst_at_periods = std::max(worst_at_periods, gap);
        else
            max_interior_gap = std::max(max_interior_gap, gap);
    }
    report(8, "excited configuration sweep", worst_at_periods <= 1e-12 && max_interior_gap > 0.01,
           residual_detail(worst_at_periods, 1e-12) + ", interior gap " +
               std::to_string(max_interior_gap));
}

// 9. exact sector evolution transfers |n,0,...> to the next site, under 10 s.
void criterion_fock_transfer() {
    const auto start = std::chrono::steady_clock::now();
    double worst_loss = 0.0;
    std::mt19937_64 rng(1009);
    std::uniform_int_distribution<int> m_dist(0, 2);
    for (int s = 2; s <= 4; ++s)
        for (int n = 1; n <= 3; ++n)
            for (int variant = 0; variant < 2; ++variant) {
                std::vector<int> m(static_cast<size_t>(s), 0);
                if (variant == 1)
                    for (int& mj : m) mj = m_dist(rng);
                const NetworkSpec spec(s, 1.0, m);
                const auto basis = std::make_shared<const FockBasis>(s, n);
                const auto h = build_sector_hamiltonian(synthesize_couplings(spec), *basis);
                std::vector<int> source(static_cast<size_t>(s), 0), target(source);
                source[0] = n;
                target[1] = n;
                const double f = fidelity(evolve(FockVector::basis_state(basis, source), h, 1.0),
                                          FockVector::basis_state(basis, target));
                worst_loss = std::max(worst_loss, 1.0 - f);
            }
    const double elapsed = seconds_since(start);
    report(9, "number-state transfer in the exact sector",
           worst_loss <= 1e-9 && elapsed < 10.0,
           residual_detail(worst_loss, 1e-9) + ", " + std::to_string(elapsed) + " s");
}

// 10. entangled pair restoration at every period multiple.
void criterion_entanglement() {
    double worst_loss = 0.0;
    for (int n : {1, 2}) {
        const auto report_data = entangled_transfer_check(NetworkSpec::uniform(3, 1.0), n);
        for (double f : report_data.fidelity_at_period)
            worst_loss = std::max(worst_loss, 1.0 - f);
    }
    report(10, "entangled pair restoration", worst_loss <= 1e-9, residual_detail(worst_loss, 1e-9));
}

// 11. oracle occupation probabilities against the transfer indicator.
void criterion_indicator_consistency() {
    std::mt19937_64 rng(1011);
    const NetworkSpec spec(5, 1.0, {0, 1, 0, 0, 2});
    const auto basis = std::make_shared<const FockBasis>(5, 1);
    const auto h = build_sector_hamiltonian(synthesize_couplings(spec), *basis);
    const FockVector initial = FockVector::basis_state(basis, {1, 0, 0, 0, 0});
    std::uniform_real_distribution<double> t_dist(0.0, 2.0 * spec.s * spec.tau);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const double t = t_dist(rng);
        const FockVector evolved = evolve(initial, h, t);
        for (int j = 1; j <= spec.s; ++j)
            worst = std::max(worst, std::abs(std::norm(evolved.amps(j - 1)) -
                                             g_function(spec, j, t)));
    }
    report(11, "occupation probabilities equal the indicator", worst <= 1e-10,
           residual_detail(worst, 1e-10));
}

// 12. Bogoliubov conditions for the DFT pair; random unitaries break the
// fixed-point identity.
void criterion_bogoliubov() {
    double worst = 0.0;
    for (int s = 1; s <= 16; ++s) {
        const auto report_data =
            validate_bogoliubov({dft_matrix(s).m, Eigen::MatrixXcd::Zero(s, s)});
        worst = std::max(worst, report_data.max_residual());
    }

    std::mt19937_64 rng(1012);
    const NetworkSpec spec = NetworkSpec::uniform(4, 1.0);
    const ModeSpectrum mode = mode_frequencies(spec);
    const PermutationMatrix shift = cyclic_shift_matrix(4);
    double smallest_random = 1e9;
    for (int trial = 0; trial < 100; ++trial) {
        const Eigen::MatrixXcd u = testing::random_unitary(4, rng);
        smallest_random = std::min(smallest_random,
                                   diagonalizer_residual(u, mode, spec.tau, shift));
    }
    const double control = diagonalizer_residual(dft_matrix(4).m.conjugate(), mode, spec.tau, shift);

    report(12, "mode-mixing conditions and diagonalizer uniqueness",
           worst <= 1e-12 && smallest_random > 1e-6 && control <= 1e-12,
           residual_detail(worst, 1e-12) + ", weakest random failure " +
               std::to_string(smallest_random));
}

// 13. beam-splitter cascade: relocation, composition, sector-evolution match.
void criterion_beamsplitter() {
    const BSParams balanced = BSParams::from_angle(std::numbers::pi / 4.0);
    const TwoModeOnePhoton relocated = cascade(balanced, balanced);
    double worst = std::abs(relocated.c10);
    worst = std::max(worst, std::abs(std::abs(relocated.c01) - 1.0));

    for (double a : {0.2, 0.9, 1.5})
        for (double b : {0.1, 0.7, 2.2}) {
            const auto direct = cascade(BSParams::from_angle(a), BSParams::from_angle(b));
            const auto composed = bs_apply(BSParams::from_angle(b),
                                           bs_apply(BSParams::from_angle(a),
                                                    TwoModeOnePhoton{Complex(1.0), Complex(0.0)}));
            worst = std::max(worst, std::abs(direct.c10 - composed.c10));
            worst = std::max(worst, std::abs(direct.c01 - composed.c01));
        }

    // sector-evolution agreement; the +i reflection convention corresponds to
    // the negative exchange coupling
    double worst_oracle = 0.0;
    const FockBasis basis(2, 1);
    for (double theta : {0.2, std::numbers::pi / 4.0, 1.1}) {
        CouplingMatrix lam{Eigen::MatrixXcd::Zero(2, 2), 1.0, {0, 0}};
        lam.lambda(0, 1) = -theta;
        lam.lambda(1, 0) = -theta;
        const Eigen::MatrixXcd u = exp_minus_i(build_sector_hamiltonian(lam, basis), 1.0);
        const auto out = bs_apply(BSParams::from_angle(theta),
                                  TwoModeOnePhoton{Complex(1.0), Complex(0.0)});
        worst_oracle = std::max(worst_oracle, std::abs(u(0, 0) - out.c10));
        worst_oracle = std::max(worst_oracle, std::abs(u(1, 0) - out.c01));
    }

    report(13, "beam-splitter cascade", worst <= 1e-12 && worst_oracle <= 1e-10,
           residual_detail(worst, 1e-12) + ", sector-evolution residual " +
               std::to_string(worst_oracle));
}

// 14. arbitrary permutations: exp(-i lambda tau) = P.
void criterion_permutations() {
    std::mt19937_64 rng(1014);
    std::uniform_int_distribution<int> size_dist(2, 8);
    std::uniform_int_distribution<int> m_dist(0, 3);
    std::uniform_real_distribution<double> tau_dist(0.5, 3.0);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const int s = size_dist(rng);
        const auto perm =
            PermutationMatrix::from_image(testing::random_permutation_image(s, rng));
        std::vector<int> m(static_cast<size_t>(s));
        for (int& mj : m) mj = m_dist(rng);
        const double tau = tau_dist(rng);
        const CouplingMatrix lam = synthesize_for_permutation(s, tau, perm, m);
        worst = std::max(worst, max_abs(mu_exponential_oracle(lam, tau) - perm.to_dense()));
    }
    report(14, "arbitrary permutation synthesis", worst <= 1e-10, residual_detail(worst, 1e-10));
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<NetworkSpec> specs = transfer_sweep_specs();

    criterion_cyclic_transfer(specs);
    criterion_recurrence(specs);
    criterion_power_law(specs);
    criterion_route_equivalence();
    criterion_shift_properties();
    criterion_two_mode_form();
    criterion_figure_one();
    criterion_figure_two();
    criterion_fock_transfer();
    criterion_entanglement();
    criterion_indicator_consistency();
    criterion_bogoliubov();
    criterion_beamsplitter();
    criterion_permutations();

    std::printf("%d of 14 criteria passed in %.2f s\n", 14 - g_failures, seconds_since(start));
    return g_failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
