#include "oscnet/fock.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <stdexcept>

#include "oscnet/propagator.hpp"

namespace oscnet {

namespace {

constexpr long long kMaxSectorStates = 200000;

long long sector_size(int sites, int total) {
    // C(total + sites - 1, sites - 1), bailing out early past the guard
    long long size = 1;
    for (int i = 1; i <= sites - 1; ++i) {
        size = size * (total + i) / i;  // exact: product of i consecutive integers
        if (size > 4 * kMaxSectorStates) return size;
    }
    return size;
}

}  // namespace

FockBasis::FockBasis(int sites, int total) : sites_(sites), total_(total) {
    if (sites < 1)
        throw std::invalid_argument("FockBasis: need at least one site");
    if (total < 0)
        throw std::invalid_argument("FockBasis: total excitation number must be non-negative");
    const long long expected = sector_size(sites, total);
    if (expected > kMaxSectorStates)
        throw std::invalid_argument("FockBasis: sector would have " + std::to_string(expected) +
                                    " states, above the 200000-state limit");

    states_.reserve(static_cast<size_t>(expected));
    std::vector<int> occ(static_cast<size_t>(sites), 0);
    occ[0] = total;
    states_.push_back(occ);
    // Descending lexicographic successor: decrement the rightmost nonzero
    // among the first s-1 slots, pile everything to its right one slot over.
    while (true) {
        int h = -1;
        for (int i = sites - 2; i >= 0; --i)
            if (occ[static_cast<size_t>(i)] > 0) { h = i; break; }
        if (h < 0) break;
        int rest = 0;
        for (int i = h + 1; i < sites; ++i) {
            rest += occ[static_cast<size_t>(i)];
            occ[static_cast<size_t>(i)] = 0;
        }
        occ[static_cast<size_t>(h)] -= 1;
        occ[static_cast<size_t>(h + 1)] = rest + 1;
        states_.push_back(occ);
    }
}

int FockBasis::index_of(const std::vector<int>& occupation) const {
    // Descending lex order allows binary search with the reversed comparison.
    auto it = std::lower_bound(states_.begin(), states_.end(), occupation,
                               [](const std::vector<int>& a, const std::vector<int>& b) {
                                   return a > b;
                               });
    if (it == states_.end() || *it != occupation) return -1;
    return static_cast<int>(it - states_.begin());
}

FockVector FockVector::basis_state(std::shared_ptr<const FockBasis> basis,
                                   const std::vector<int>& occupation) {
    const int idx = basis->index_of(occupation);
    if (idx < 0)
        throw std::invalid_argument("FockVector: occupation vector not in this sector");
    FockVector v{std::move(basis), Eigen::VectorXcd::Zero(0)};
    v.amps = Eigen::VectorXcd::Zero(v.basis->size());
    v.amps(idx) = 1.0;
    return v;
}

FockVector FockVector::from_terms(
    std::shared_ptr<const FockBasis> basis,
    const std::vector<std::pair<std::vector<int>, Complex>>& terms) {
    FockVector v{std::move(basis), Eigen::VectorXcd::Zero(0)};
    v.amps = Eigen::VectorXcd::Zero(v.basis->size());
    for (const auto& [occupation, amp] : terms) {
        const int idx = v.basis->index_of(occupation);
        if (idx < 0)
            throw std::invalid_argument("FockVector: occupation vector not in this sector");
        v.amps(idx) += amp;
    }
    const double norm = v.amps.norm();
    if (norm == 0.0)
        throw std::invalid_argument("FockVector: superposition sums to zero");
    if (std::abs(norm - 1.0) > 1e-6)
        std::cerr << "oscnet: warning: input superposition norm " << norm
                  << " deviates from 1, renormalizing\n";
    v.amps /= norm;
    return v;
}

Eigen::MatrixXcd build_sector_hamiltonian(const CouplingMatrix& lambda, const FockBasis& basis) {
    const int s = basis.sites();
    if (lambda.size() != s)
        throw std::invalid_argument("build_sector_hamiltonian: coupling matrix dimension != sites");

    const int dim = basis.size();
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    std::vector<int> moved;
    for (int col = 0; col < dim; ++col) {
        const std::vector<int>& occ = basis.state(col);

        Complex diag = 0.0;
        for (int j = 0; j < s; ++j)
            diag += lambda.lambda(j, j) * static_cast<double>(occ[static_cast<size_t>(j)]);
        h(col, col) += diag;

        for (int k = 0; k < s; ++k) {
            if (occ[static_cast<size_t>(k)] == 0) continue;
            for (int j = 0; j < s; ++j) {
                if (j == k) continue;
                moved = occ;
                moved[static_cast<size_t>(k)] -= 1;
                moved[static_cast<size_t>(j)] += 1;
                const int row = basis.index_of(moved);
                const double amplitude = std::sqrt(static_cast<double>(occ[static_cast<size_t>(k)]) *
                                                   (occ[static_cast<size_t>(j)] + 1));
                h(row, col) += lambda.lambda(j, k) * amplitude;
            }
        }
    }
    return h;
}

FockVector evolve(const FockVector& fock, const Eigen::MatrixXcd& hamiltonian, double t) {
    if (hamiltonian.rows() != fock.amps.size())
        throw std::invalid_argument("evolve: Hamiltonian dimension does not match the state");
    FockVector out = fock;
    out.amps = exp_minus_i(hamiltonian, t) * fock.amps;
    return out;
}

double fidelity(const FockVector& a, const FockVector& b) {
    if (!a.basis || !b.basis || !(*a.basis == *b.basis))
        throw std::invalid_argument("fidelity: states live on different bases");
    return std::norm(a.amps.dot(b.amps));
}

bool EntangledTransferReport::all_periods_pass(double tol) const {
    for (double f : fidelity_at_period)
        if (f < 1.0 - tol) return false;
    return true;
}

namespace {

/// (|n at site a> + |n at site b>)/sqrt(2) with all other sites empty.
FockVector two_site_pair(std::shared_ptr<const FockBasis> basis, int site_a, int site_b, int n) {
    const int s = basis->sites();
    std::vector<int> occ_a(static_cast<size_t>(s), 0), occ_b(static_cast<size_t>(s), 0);
    occ_a[static_cast<size_t>(site_a)] = n;
    occ_b[static_cast<size_t>(site_b)] = n;
    const Complex w = 1.0 / std::sqrt(2.0);
    return FockVector::from_terms(std::move(basis), {{occ_a, w}, {occ_b, w}});
}

}  // namespace

EntangledTransferReport entangled_transfer_check(const NetworkSpec& spec, int n) {
    if (spec.s < 3)
        throw std::invalid_argument("entangled_transfer_check: need s >= 3 so the shifted pair fits");
    if (n < 1)
        throw std::invalid_argument("entangled_transfer_check: need n >= 1");

    const auto basis = std::make_shared<const FockBasis>(spec.s, n);
    const Eigen::MatrixXcd h = build_sector_hamiltonian(synthesize_couplings(spec), *basis);
    const HermitianEigen eig = eigh(h);

    const FockVector initial = two_site_pair(basis, 0, 1, n);
    const Eigen::VectorXcd modes = eig.vectors.adjoint() * initial.amps;

    auto state_at = [&](double t) {
        FockVector v = initial;
        Eigen::VectorXcd phased(modes.size());
        for (Eigen::Index i = 0; i < modes.size(); ++i)
            phased(i) = std::polar(1.0, -eig.values(i) * t) * modes(i);
        v.amps = eig.vectors * phased;
        return v;
    };

    std::vector<FockVector> shifted;
    shifted.reserve(static_cast<size_t>(spec.s + 1));
    for (int k = 0; k <= spec.s; ++k)
        shifted.push_back(two_site_pair(basis, k % spec.s, (k + 1) % spec.s, n));

    EntangledTransferReport report;
    report.fidelity_at_period.resize(static_cast<size_t>(spec.s + 1));
    for (int k = 0; k <= spec.s; ++k)
        report.fidelity_at_period[static_cast<size_t>(k)] =
            fidelity(state_at(k * spec.tau), shifted[static_cast<size_t>(k)]);

    // Between period multiples, report how close the state comes to any
    // shifted copy of itself (best case over k).
    constexpr int kSamplesPerPeriod = 16;
    for (int k = 0; k < spec.s; ++k)
        for (int i = 1; i < kSamplesPerPeriod; ++i) {
            const double t = (k + static_cast<double>(i) / kSamplesPerPeriod) * spec.tau;
            const FockVector v = state_at(t);
            double best = 0.0;
            for (const FockVector& target : shifted)
                best = std::max(best, fidelity(v, target));
            if (best < report.min_intermediate_fidelity) {
                report.min_intermediate_fidelity = best;
                report.argmin_time = t;
            }
        }
    return report;
}

double single_excitation_consistency(const NetworkSpec& spec, double t) {
    const auto basis = FockBasis(spec.s, 1);
    const Eigen::MatrixXcd h = build_sector_hamiltonian(synthesize_couplings(spec), basis);
    const Eigen::MatrixXcd sector_evolution = exp_minus_i(h, t);
    return max_abs(sector_evolution - mu_closed_form(spec, t).mu);
}

}  // namespace oscnet
