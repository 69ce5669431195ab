#include <benchmark/benchmark.h>

#include <memory>

#include "oscnet/char_states.hpp"
#include "oscnet/coupling.hpp"
#include "oscnet/fock.hpp"
#include "oscnet/propagator.hpp"

using namespace oscnet;

static void SynthesizeCouplings(benchmark::State& state) {
    const auto spec = NetworkSpec::uniform(static_cast<int>(state.range(0)), 1.0);
    for (auto _ : state) {
        auto lam = synthesize_couplings(spec);
        benchmark::DoNotOptimize(lam.lambda.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(SynthesizeCouplings)->RangeMultiplier(2)->Range(2, 64)->Complexity();

static void PropagatorClosedForm(benchmark::State& state) {
    const auto spec = NetworkSpec::uniform(static_cast<int>(state.range(0)), 1.0);
    double t = 0.0;
    for (auto _ : state) {
        t += 0.37;
        auto prop = mu_closed_form(spec, t);
        benchmark::DoNotOptimize(prop.mu.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(PropagatorClosedForm)->RangeMultiplier(2)->Range(2, 64)->Complexity();

static void PropagatorSpectral(benchmark::State& state) {
    const auto spec = NetworkSpec::uniform(static_cast<int>(state.range(0)), 1.0);
    double t = 0.0;
    for (auto _ : state) {
        t += 0.37;
        auto prop = mu_spectral(spec, t);
        benchmark::DoNotOptimize(prop.mu.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(PropagatorSpectral)->RangeMultiplier(2)->Range(2, 64)->Complexity();

static void PropagatorExponential(benchmark::State& state) {
    const auto spec = NetworkSpec::uniform(static_cast<int>(state.range(0)), 1.0);
    const auto lam = synthesize_couplings(spec);
    double t = 0.0;
    for (auto _ : state) {
        t += 0.37;
        auto mu = mu_exponential_oracle(lam, t);
        benchmark::DoNotOptimize(mu.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(PropagatorExponential)->RangeMultiplier(2)->Range(2, 64)->Complexity();

static void SectorHamiltonian(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto spec = NetworkSpec::uniform(5, 1.0);
    const auto lam = synthesize_couplings(spec);
    const FockBasis basis(5, n);
    for (auto _ : state) {
        auto h = build_sector_hamiltonian(lam, basis);
        benchmark::DoNotOptimize(h.data());
    }
    state.SetLabel(std::to_string(basis.size()) + " states");
}
BENCHMARK(SectorHamiltonian)->DenseRange(1, 5);

static void SectorEvolve(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto spec = NetworkSpec::uniform(5, 1.0);
    const auto basis = std::make_shared<const FockBasis>(5, n);
    const auto h = build_sector_hamiltonian(synthesize_couplings(spec), *basis);
    std::vector<int> occupation(5, 0);
    occupation[0] = n;
    const auto initial = FockVector::basis_state(basis, occupation);
    for (auto _ : state) {
        auto evolved = evolve(initial, h, 0.73);
        benchmark::DoNotOptimize(evolved.amps.data());
    }
    state.SetLabel(std::to_string(basis->size()) + " states");
}
BENCHMARK(SectorEvolve)->DenseRange(1, 5);

static void IndicatorSweep(benchmark::State& state) {
    const auto spec = NetworkSpec::uniform(7, 1.0);
    for (auto _ : state) {
        auto series = sweep_g(spec, 1, 0.0, 7.0, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(series.points.data());
    }
}
BENCHMARK(IndicatorSweep)->Arg(101)->Arg(701)->Arg(4001);

BENCHMARK_MAIN();
