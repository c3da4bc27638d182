#include <benchmark/benchmark.h>

#include "conesemi/forest.hpp"
#include "conesemi/oracle.hpp"

using namespace conesemi;

namespace {

ConePtr n2() { return make_orthant(2); }

void BM_HilbertBasis(benchmark::State& state) {
    for (auto _ : state) {
        auto c = make_cone(2, {Vec{4, 1}, Vec{5, 3}});
        benchmark::DoNotOptimize(c->hilbert_basis());
    }
}
BENCHMARK(BM_HilbertBasis);

void BM_Interval(benchmark::State& state) {
    auto c = make_cone(2, {Vec{1, 0}, Vec{1, 1}});
    Vec k{static_cast<Coord>(state.range(0)), static_cast<Coord>(state.range(0)) / 2};
    for (auto _ : state) benchmark::DoNotOptimize(c->interval(k));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Interval)->RangeMultiplier(2)->Range(4, 32)->Complexity();

void BM_MinimalGenerators(benchmark::State& state) {
    std::vector<Vec> gaps{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 0}, {1, 1}, {1, 2}, {1, 3},
                          {1, 4}, {1, 5}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 0}, {3, 3}, {3, 4},
                          {4, 5}};
    for (auto _ : state) {
        CSemigroup s = CSemigroup::from_gaps(n2(), gaps);
        benchmark::DoNotOptimize(s.minimal_generators());
    }
}
BENCHMARK(BM_MinimalGenerators);

void BM_EnumerateIrreducible(benchmark::State& state) {
    Vec k{2, static_cast<Coord>(state.range(0))};
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_irreducible(n2(), k, IrreducibleKind::Symmetric));
}
BENCHMARK(BM_EnumerateIrreducible)->DenseRange(3, 5, 2);

void BM_BuildForest(benchmark::State& state) {
    Vec k{static_cast<Coord>(state.range(0)), static_cast<Coord>(state.range(0))};
    for (auto _ : state)
        benchmark::DoNotOptimize(build_forest(n2(), k, TermOrder::grlex()));
}
BENCHMARK(BM_BuildForest)->DenseRange(2, 3);

void BM_OracleEnumerateAll(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle::enumerate_all(n2(), Vec{2, 3}));
}
BENCHMARK(BM_OracleEnumerateAll);

void BM_OracleCompare(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle::compare(n2(), Vec{3, 3}, TermOrder::grlex()).ok());
}
BENCHMARK(BM_OracleCompare);

}  // namespace

BENCHMARK_MAIN();
