#include <benchmark/benchmark.h>

#include "bohl/bohl_transform.hpp"
#include "bohl/continuum_darboux.hpp"

using namespace bohl;

namespace {

void BM_IntegrateSle(benchmark::State& state) {
    const auto v = ContinuumPotential::affine(1.0, 0.0);
    const Grid g(1.0, 5.0, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto u = integrate_sle(v, g, 1.0, 0.5);
        benchmark::DoNotOptimize(u);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_IntegrateSle)->Arg(4001)->Arg(40001);

void BM_DiagonalAndDarboux(benchmark::State& state) {
    const auto v = ContinuumPotential::affine(1.0, 0.0);
    const Grid g(1.0, 5.0, static_cast<std::size_t>(state.range(0)));
    const auto pair = positive_pair(v, g);
    const auto f = bump_function(g, 3.0, 1.9);
    for (auto _ : state) {
        const auto z = diagonal_function(pair.recessive, pair.dominant);
        auto r = darboux_factorization_residual(z, v, f);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_DiagonalAndDarboux)->Arg(4001);

} // namespace
