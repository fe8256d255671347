#include <benchmark/benchmark.h>

#include <random>

#include "linkeval/corpus.hpp"
#include "linkeval/predictors.hpp"
#include "linkeval/split.hpp"

using namespace linkeval;

namespace {

std::vector<NodePair> probe_queries(const Graph& g, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<NodePair> out;
    while (out.size() < count) {
        const NodeId a = NodeId(uniform_index(rng, g.node_count()));
        const NodeId b = NodeId(uniform_index(rng, g.node_count()));
        if (a != b) out.emplace_back(a, b);
    }
    return out;
}

void bm_ra(benchmark::State& state) {
    const Graph g = erdos_renyi(NodeId(state.range(0)), 8.0 / double(state.range(0)), 1);
    const auto queries = probe_queries(g, 512, 2);
    for (auto _ : state) benchmark::DoNotOptimize(ra_scores(g, queries));
}
BENCHMARK(bm_ra)->Arg(200)->Arg(1000)->Arg(5000);

void bm_ra3(benchmark::State& state) {
    const Graph g = erdos_renyi(NodeId(state.range(0)), 8.0 / double(state.range(0)), 1);
    const auto queries = probe_queries(g, 512, 2);
    for (auto _ : state) benchmark::DoNotOptimize(ra3_scores(g, queries));
}
BENCHMARK(bm_ra3)->Arg(200)->Arg(1000)->Arg(5000);

void bm_mfi_dense(benchmark::State& state) {
    const Graph g = erdos_renyi(NodeId(state.range(0)), 8.0 / double(state.range(0)), 1);
    const auto queries = probe_queries(g, 256, 2);
    for (auto _ : state) benchmark::DoNotOptimize(mfi_scores(g, queries));
}
BENCHMARK(bm_mfi_dense)->Arg(200)->Arg(800);

void bm_make_split(benchmark::State& state) {
    const Graph g = erdos_renyi(NodeId(state.range(0)), 8.0 / double(state.range(0)), 1);
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(make_split(g, ++seed));
}
BENCHMARK(bm_make_split)->Arg(1000)->Arg(10000);

void bm_deepwalk_small(benchmark::State& state) {
    const Graph g = watts_strogatz(100, 6, 0.1, 3);
    const auto queries = probe_queries(g, 128, 2);
    DeepWalkOptions opts;
    opts.walk_length = 20;
    opts.walks_per_node = 5;
    opts.dimensions = 32;
    opts.window = 5;
    for (auto _ : state) benchmark::DoNotOptimize(deepwalk_scores(g, queries, opts));
}
BENCHMARK(bm_deepwalk_small);

}  // namespace
