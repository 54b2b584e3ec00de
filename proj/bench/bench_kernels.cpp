// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "ssc/coloring.hpp"
#include "ssc/search.hpp"
#include "ssc/steiner.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

void BM_GenerateSts(benchmark::State& state) {
    const ssc::Dimension n(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ssc::generate_sts(n));
}
BENCHMARK(BM_GenerateSts)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

void BM_GenerateStsParallel(benchmark::State& state) {
    const ssc::Dimension n(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ssc::generate_sts_parallel(n));
}
BENCHMARK(BM_GenerateStsParallel)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

void BM_PairCoverage(benchmark::State& state) {
    const auto ts = ssc::generate_sts(ssc::Dimension(static_cast<unsigned>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(ssc::verify_pair_coverage(ts));
}
BENCHMARK(BM_PairCoverage)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

void BM_PairCoverageParallel(benchmark::State& state) {
    const auto ts = ssc::generate_sts(ssc::Dimension(static_cast<unsigned>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(ssc::verify_pair_coverage_parallel(ts));
}
BENCHMARK(BM_PairCoverageParallel)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

void BM_ColorFromPacking(benchmark::State& state) {
    const auto [g, pr] = ssc::make_star_realization(ssc::Dimension(static_cast<unsigned>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(ssc::color_from_packing(g, pr));
    state.SetComplexityN(static_cast<benchmark::IterationCount>(g.num_elements()));
}
BENCHMARK(BM_ColorFromPacking)->DenseRange(12, 20, 2)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oN);

ssc::Coloring star_coloring(unsigned n, ssc::Graph& g) {
    auto [graph, pr] = ssc::make_star_realization(ssc::Dimension(n));
    g = graph;
    return std::get<ssc::Coloring>(ssc::color_from_packing(g, pr));
}

void BM_VerifyColoring(benchmark::State& state) {
    ssc::Graph g;
    const auto c = star_coloring(static_cast<unsigned>(state.range(0)), g);
    for (auto _ : state) benchmark::DoNotOptimize(ssc::verify_coloring(g, c));
}
BENCHMARK(BM_VerifyColoring)->DenseRange(16, 20, 2)->Unit(benchmark::kMillisecond);

void BM_VerifyColoringParallel(benchmark::State& state) {
    ssc::Graph g;
    const auto c = star_coloring(static_cast<unsigned>(state.range(0)), g);
    for (auto _ : state) benchmark::DoNotOptimize(ssc::verify_coloring_parallel(g, c));
}
BENCHMARK(BM_VerifyColoringParallel)->DenseRange(16, 20, 2)->Unit(benchmark::kMillisecond);

// Counting every coloring of K_{1,7} (n = 4) explores the whole tree.
void BM_SolveCountAll(benchmark::State& state) {
    std::vector<ssc::Edge> edges;
    for (ssc::Vertex i = 1; i <= 7; ++i) edges.emplace_back(0, i);
    const ssc::Graph g(8, edges);
    ssc::SearchConfig cfg;
    cfg.find_all = true;
    cfg.threads = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ssc::solve(g, cfg));
}
BENCHMARK(BM_SolveCountAll)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
