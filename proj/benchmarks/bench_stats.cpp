#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "linkeval/common.hpp"
#include "linkeval/metrics.hpp"
#include "linkeval/stats.hpp"

using namespace linkeval;

namespace {

RankMatrix random_rank_matrix(std::size_t networks, std::size_t algorithms, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    RankMatrix m;
    m.domain = "bench";
    for (std::size_t l = 0; l < algorithms; ++l) m.algorithms.push_back("a" + std::to_string(l));
    for (std::size_t i = 0; i < networks; ++i) {
        m.networks.push_back("n" + std::to_string(i));
        std::vector<int> row(algorithms);
        std::iota(row.begin(), row.end(), 1);
        for (std::size_t k = 0; k + 1 < row.size(); ++k)
            std::swap(row[k], row[k + uniform_index(rng, row.size() - k)]);
        m.ranks.insert(m.ranks.end(), row.begin(), row.end());
    }
    return m;
}

void bm_kendall_tau(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::vector<double> a(state.range(0)), b(state.range(0));
    std::iota(a.begin(), a.end(), 1.0);
    std::iota(b.begin(), b.end(), 1.0);
    for (std::size_t k = 0; k + 1 < b.size(); ++k)
        std::swap(b[k], b[k + uniform_index(rng, b.size() - k)]);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            kendall_tau(std::span<const double>(a), std::span<const double>(b)));
}
BENCHMARK(bm_kendall_tau)->Arg(12)->Arg(64);

void bm_intra_consistency(benchmark::State& state) {
    const auto m = random_rank_matrix(std::size_t(state.range(0)), 12, 2);
    for (auto _ : state) benchmark::DoNotOptimize(consistency(m, m));
}
BENCHMARK(bm_intra_consistency)->Arg(50)->Arg(150);

void bm_exact_auc(benchmark::State& state) {
    std::mt19937_64 rng(3);
    LabeledScores ls;
    for (int i = 0; i < state.range(0); ++i) {
        ls.positives.push_back(unit_real(rng) + 0.1);
        ls.negatives.push_back(unit_real(rng));
    }
    for (auto _ : state) benchmark::DoNotOptimize(exact_auc(ls));
}
BENCHMARK(bm_exact_auc)->Arg(1000)->Arg(100000);

void bm_permutation_test(benchmark::State& state) {
    std::mt19937_64 rng(4);
    PcaEmbedding e;
    e.dims = 3;
    for (int i = 0; i < 120; ++i) {
        e.network_ids.push_back("n" + std::to_string(i));
        e.labels.push_back(i % 4 == 0 ? "a" : (i % 4 == 1 ? "b" : (i % 4 == 2 ? "c" : "d")));
        for (int d = 0; d < 3; ++d) e.coords.push_back(unit_real(rng));
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(permutation_test(e, std::size_t(state.range(0)), 5));
}
BENCHMARK(bm_permutation_test)->Arg(200)->Arg(2000);

void bm_rsc_curve(benchmark::State& state) {
    const auto m = random_rank_matrix(std::size_t(state.range(0)), 12, 6);
    for (auto _ : state) benchmark::DoNotOptimize(rsc_curve(m, 100, 7));
}
BENCHMARK(bm_rsc_curve)->Arg(40)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
