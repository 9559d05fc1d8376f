#include <benchmark/benchmark.h>

#include "spextree/spextree.hpp"

using namespace spextree;

static void BM_PowerIterationS(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Graph g = construct_S(n, 3, n / 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(spectral_radius(g).value);
}
BENCHMARK(BM_PowerIterationS)->Arg(100)->Arg(1000)->Arg(4000);

static void BM_QuotientRoot(benchmark::State& state) {
    auto m = quotient_S(1000, 3, 200);
    for (auto _ : state)
        benchmark::DoNotOptimize(quotient_spectral_radius(m).value);
}
BENCHMARK(BM_QuotientRoot);

// The S(n,q,1) host is F-free, so the search must exhaust.
static void BM_ContainsTreeAbsent(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Graph tree = spider_tree({3, 3, 3});
    Graph host = construct_S(n, 3, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(contains_tree(host, tree).status);
}
BENCHMARK(BM_ContainsTreeAbsent)->Arg(20)->Arg(40)->Arg(200);

static void BM_ContainsTreeFound(benchmark::State& state) {
    Graph tree = spider_tree({3, 3, 3});
    Graph host = construct_S(40, 4, 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(contains_tree(host, tree).status);
}
BENCHMARK(BM_ContainsTreeFound);

static void BM_CanonicalForm(benchmark::State& state) {
    Graph g = construct_K_ab_p(5, 30, 10);
    for (auto _ : state)
        benchmark::DoNotOptimize(canonical_form(g).leaves);
}
BENCHMARK(BM_CanonicalForm);

// Enumeration results are cached, so time a fresh canonical augmentation step instead:
// canonical forms of every graph on 7 vertices.
static void BM_CanonicalFormsOrder7(benchmark::State& state) {
    const auto& graphs = nonisomorphic_graphs(7);
    for (auto _ : state)
        for (const auto& g : graphs)
            benchmark::DoNotOptimize(canonical_form(g).leaves);
}
BENCHMARK(BM_CanonicalFormsOrder7)->Unit(benchmark::kMillisecond);

static void BM_ExhaustiveOracle(benchmark::State& state) {
    Graph tree = path_graph(5);
    for (auto _ : state)
        benchmark::DoNotOptimize(spex_exhaustive(7, tree).optimum.value);
}
BENCHMARK(BM_ExhaustiveOracle)->Unit(benchmark::kMillisecond);

static void BM_JoinformOracle(benchmark::State& state) {
    Graph tree = spider_tree({3, 3, 1, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(spex_joinform(30, tree, false).optimum.value);
}
BENCHMARK(BM_JoinformOracle)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
