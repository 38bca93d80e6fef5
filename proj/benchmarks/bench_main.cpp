// Timings for the hot paths: nested-radical comparison, the lemma sweeps,
// compatibility graph construction, the clique search, the subset oracle
// and the concyclic construction.

#include "diogon/circle_construct.hpp"
#include "diogon/ngon_search.hpp"
#include "diogon/quad.hpp"
#include "diogon/trigon_laws.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace diogon;

QuadScalar surd(long long r, long long c, long long d) {
    return QuadScalar(Rational(r), Rational(c), Int(d));
}

void BM_CompareSqrtSums(benchmark::State& state) {
    // four squared lengths from the same quadratic field, as in the search
    QuadScalar a = surd(3, 2, 5), b = surd(1, 1, 5), c = surd(2, 2, 5), d = surd(4, 1, 5);
    for (auto _ : state) benchmark::DoNotOptimize(compare_sqrt_sums(a, b, c, d));
}
BENCHMARK(BM_CompareSqrtSums);

void BM_Lemma1Sweep(benchmark::State& state) {
    for (auto _ : state) {
        auto r = lemma1_sweep(Int(10), Int(10), Int(5), Int(5));
        benchmark::DoNotOptimize(r.rows.data());
    }
}
BENCHMARK(BM_Lemma1Sweep)->Unit(benchmark::kMillisecond);

SearchConfig frame(long long k, long long M) {
    SearchConfig cfg;
    cfg.k = Int(k);
    cfg.M = Int(M);
    return cfg;
}

void BM_BuildGraph(benchmark::State& state) {
    SearchConfig cfg = frame(3, 20);
    for (auto _ : state) {
        auto g = build_graph(cfg);
        benchmark::DoNotOptimize(&g);
    }
}
BENCHMARK(BM_BuildGraph)->Unit(benchmark::kMillisecond);

void BM_Search(benchmark::State& state) {
    SearchConfig cfg = frame(3, 20);
    for (auto _ : state) {
        auto rep = search(cfg);
        benchmark::DoNotOptimize(rep.max_n_found);
    }
}
BENCHMARK(BM_Search)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
    SearchConfig cfg = frame(2, 10);
    for (auto _ : state) {
        auto rep = brute_force_oracle(cfg);
        benchmark::DoNotOptimize(rep.max_n_found);
    }
}
BENCHMARK(BM_Oracle)->Unit(benchmark::kMillisecond);

void BM_Construct(benchmark::State& state) {
    for (auto _ : state) {
        auto set = construct_diophantine(10);
        benchmark::DoNotOptimize(set.points.data());
    }
}
BENCHMARK(BM_Construct)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
