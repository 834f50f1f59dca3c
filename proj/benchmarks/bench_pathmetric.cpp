#include <benchmark/benchmark.h>

#include <random>

#include "fixtures.hpp"
#include "pathmetric/oracle.hpp"
#include "pathmetric/path_metric.hpp"
#include "pathmetric/resistance.hpp"
#include "pathmetric/structure.hpp"

using namespace pathmetric;

namespace {

WeightedGraph weight_graph(std::size_t n) {
    std::mt19937_64 rng(n);
    return testing::random_weighted_graph(rng, n, 8.0 / static_cast<double>(n), false);
}

ConductanceGraph conductance_graph(std::size_t n) {
    std::mt19937_64 rng(n + 1);
    return testing::random_connected_graph(rng, n, 4.0 / static_cast<double>(n), 3);
}

}  // namespace

static void BM_AllPairsMetric(benchmark::State& state) {
    const WeightedGraph g = weight_graph(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(all_pairs_metric(g));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AllPairsMetric)->RangeMultiplier(2)->Range(16, 512)->Complexity();

static void BM_GeodesicWeight(benchmark::State& state) {
    const MetricTable t = all_pairs_metric(weight_graph(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(geodesic_weight(t));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GeodesicWeight)->RangeMultiplier(2)->Range(16, 256)->Complexity();

static void BM_EffectiveResistance(benchmark::State& state) {
    const ConductanceGraph b = conductance_graph(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(effective_resistance(b, 0, b.size() - 1));
    }
}
BENCHMARK(BM_EffectiveResistance)->RangeMultiplier(4)->Range(16, 1024);

static void BM_ResistanceMatrix(benchmark::State& state) {
    const ConductanceGraph b = conductance_graph(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(resistance_matrix(b));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ResistanceMatrix)->RangeMultiplier(2)->Range(16, 256)->Complexity();

static void BM_BlockGraphRecognition(benchmark::State& state) {
    std::mt19937_64 rng(7);
    const ConductanceGraph b = testing::random_block_graph(rng, static_cast<std::size_t>(state.range(0)), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_block_graph(b));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BlockGraphRecognition)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

static void BM_BlockGraphByDefinition(benchmark::State& state) {
    std::mt19937_64 rng(7);
    const ConductanceGraph b = testing::random_block_graph(rng, static_cast<std::size_t>(state.range(0)), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle::is_block_graph_by_definition(b));
    }
}
BENCHMARK(BM_BlockGraphByDefinition)->DenseRange(4, 8, 2);

static void BM_SpanningForestResistance(benchmark::State& state) {
    std::mt19937_64 rng(11);
    const ConductanceGraph b =
        testing::random_connected_graph(rng, static_cast<std::size_t>(state.range(0)), 0.4, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle::spanning_tree_resistance(b, 0, b.size() - 1));
    }
}
BENCHMARK(BM_SpanningForestResistance)->DenseRange(4, 8, 2);
BENCHMARK_MAIN();
