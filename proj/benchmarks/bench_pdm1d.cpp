#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "pdm1d/pdm1d.hpp"

namespace {

pdm::Structure random_structure(int layers, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> m(0.2, 5.0), v(-2.0, 4.0), w(0.05, 2.0);
    pdm::Structure s;
    s.left_lead = {m(rng), 0.0};
    s.right_lead = {m(rng), v(rng)};
    for (int i = 0; i < layers; ++i) s.layers.push_back({w(rng), m(rng), v(rng)});
    return s;
}

void BM_scatter(benchmark::State& state) {
    const auto s = random_structure(static_cast<int>(state.range(0)), 7u);
    const pdm::OrderingScheme scheme{-1.0};
    double e = 4.2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(pdm::scatter(s, e, scheme).transmission);
        e += 1e-6;  // defeat value caching across iterations
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_scatter)->RangeMultiplier(2)->Range(1, 64)->Complexity();

void BM_barrier_transmission(benchmark::State& state) {
    const pdm::BarrierParams p{1.0, 2.0, 1.0, 2.0, {-1.0}, {}};
    double e = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(pdm::barrier_transmission(p, e));
        e += 1e-9;
    }
}
BENCHMARK(BM_barrier_transmission);

void BM_dispersion_rhs(benchmark::State& state) {
    const pdm::LatticeParams p{1.0, 2.0, 1.0, 1.0, 1.0, {-1.0}, {}};
    double e = 3.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(pdm::dispersion_rhs(p, e));
        e += 1e-9;
    }
}
BENCHMARK(BM_dispersion_rhs);

void BM_band_diagram(benchmark::State& state) {
    const pdm::LatticeParams p{1.0, 2.0, 1.0, 1.0, 1.0, {-0.5}, {}};
    for (auto _ : state)
        benchmark::DoNotOptimize(
            pdm::band_diagram(p, 0.01, 50.0, static_cast<std::size_t>(state.range(0))));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_band_diagram)->Range(1 << 12, 1 << 18)->Complexity();

void BM_well_spectrum(benchmark::State& state) {
    const pdm::WellParams p{2.0, 1.0, 50.0, 1.0, {-1.0}, {}};
    for (auto _ : state) benchmark::DoNotOptimize(pdm::well_spectrum(p));
}
BENCHMARK(BM_well_spectrum);

}  // namespace

BENCHMARK_MAIN();
