#include <benchmark/benchmark.h>

#include <random>

#include "bohl/lattice.hpp"
#include "bohl/oracles.hpp"

using namespace bohl;

namespace {

LatticePotential make_potential(long n) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> d(0.5, 5.0);
    std::vector<double> v(static_cast<std::size_t>(n));
    for (double& x : v) x = d(rng);
    return LatticePotential(LatticeWindow(0, n - 1), std::move(v));
}

void BM_ReconstructPipeline(benchmark::State& state) {
    const auto v = make_potential(state.range(0));
    for (auto _ : state) {
        const auto b = positive_basis(v);
        const auto z = diagonal_sequence(build_green_matrix(b.minus, b.plus));
        auto vz = potential_from_diagonal(z);
        benchmark::DoNotOptimize(vz);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ReconstructPipeline)->RangeMultiplier(4)->Range(16, 256)->Complexity();

void BM_GreenByInversion(benchmark::State& state) {
    const auto v = make_potential(state.range(0));
    for (auto _ : state) {
        auto g = oracles::green_by_inversion(v);
        benchmark::DoNotOptimize(g);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GreenByInversion)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

} // namespace
