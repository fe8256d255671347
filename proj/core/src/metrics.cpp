#include "linkeval/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "linkeval/common.hpp"

namespace linkeval {

namespace {

void check(const LabeledScores& ls) {
    if (ls.positives.empty() || ls.negatives.empty())
        throw std::invalid_argument("metrics: need at least one positive and one negative");
    for (double v : ls.positives)
        if (!std::isfinite(v)) throw std::invalid_argument("metrics: non-finite positive score");
    for (double v : ls.negatives)
        if (!std::isfinite(v)) throw std::invalid_argument("metrics: non-finite negative score");
}

/// Pooled items sorted by descending score with negatives before positives
/// at equal scores. Returns the is-positive sequence in rank order.
std::vector<char> pessimistic_ranking(const LabeledScores& ls) {
    std::vector<std::pair<double, char>> pool;
    pool.reserve(ls.positives.size() + ls.negatives.size());
    for (double v : ls.negatives) pool.push_back({v, 0});
    for (double v : ls.positives) pool.push_back({v, 1});
    std::stable_sort(pool.begin(), pool.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first > y.first;
        return x.second < y.second;  // negatives first on ties
    });
    std::vector<char> flags(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i) flags[i] = pool[i].second;
    return flags;
}

}  // namespace

double exact_auc(const LabeledScores& ls) {
    check(ls);
    // midranks over the pooled scores give P(pos > neg) + 0.5 P(pos = neg)
    const std::size_t np = ls.positives.size(), nn = ls.negatives.size();
    std::vector<std::pair<double, char>> pool;
    pool.reserve(np + nn);
    for (double v : ls.positives) pool.push_back({v, 1});
    for (double v : ls.negatives) pool.push_back({v, 0});
    std::sort(pool.begin(), pool.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    double rank_sum_pos = 0.0;
    std::size_t i = 0;
    while (i < pool.size()) {
        std::size_t j = i;
        while (j < pool.size() && pool[j].first == pool[i].first) ++j;
        const double midrank = 0.5 * double(i + 1 + j);  // ranks are 1-based
        for (std::size_t k = i; k < j; ++k)
            if (pool[k].second) rank_sum_pos += midrank;
        i = j;
    }
    const double u = rank_sum_pos - double(np) * double(np + 1) / 2.0;
    return u / (double(np) * double(nn));
}

double sampled_auc(const LabeledScores& ls, std::uint64_t n_pairs, std::uint64_t seed) {
    check(ls);
    if (n_pairs == 0) throw std::invalid_argument("sampled_auc: need N >= 1");
    std::mt19937_64 rng(seed);
    std::uint64_t wins = 0, ties = 0;
    for (std::uint64_t k = 0; k < n_pairs; ++k) {
        const double p = ls.positives[uniform_index(rng, ls.positives.size())];
        const double n = ls.negatives[uniform_index(rng, ls.negatives.size())];
        if (p > n) ++wins;
        else if (p == n) ++ties;
    }
    return (double(wins) + 0.5 * double(ties)) / double(n_pairs);
}

AucResult auc(const LabeledScores& ls, const AucOptions& opts) {
    check(ls);
    bool sample = opts.mode == AucOptions::Mode::Sampled;
    if (opts.mode == AucOptions::Mode::Auto) {
        const std::uint64_t pairs =
            std::uint64_t(ls.positives.size()) * std::uint64_t(ls.negatives.size());
        sample = pairs > opts.exact_pair_limit;
    }
    if (sample) return {sampled_auc(ls, opts.sample_pairs, opts.seed), true};
    return {exact_auc(ls), false};
}

double precision_at_probe(const LabeledScores& ls) {
    check(ls);
    const auto flags = pessimistic_ranking(ls);
    const std::size_t k = ls.positives.size();
    std::size_t hits = 0;
    for (std::size_t i = 0; i < k && i < flags.size(); ++i) hits += flags[i];
    return double(hits) / double(k);
}

double aupr(const LabeledScores& ls) {
    check(ls);
    const auto flags = pessimistic_ranking(ls);
    const double np = double(ls.positives.size());
    double seen_pos = 0.0;
    double area = 0.0;
    for (std::size_t i = 0; i < flags.size(); ++i) {
        if (!flags[i]) continue;
        seen_pos += 1.0;
        area += (seen_pos / double(i + 1)) / np;  // recall steps by 1/np
    }
    return area;
}

double ndcg(const LabeledScores& ls) {
    check(ls);
    const auto flags = pessimistic_ranking(ls);
    double dcg = 0.0;
    for (std::size_t i = 0; i < flags.size(); ++i)
        if (flags[i]) dcg += 1.0 / std::log2(double(i + 2));
    double ideal = 0.0;
    for (std::size_t i = 0; i < ls.positives.size(); ++i) ideal += 1.0 / std::log2(double(i + 2));
    return dcg / ideal;
}

MetricReport evaluate_scores(const LabeledScores& ls, const AucOptions& opts) {
    MetricReport rep;
    const auto a = auc(ls, opts);
    rep.auc = a.value;
    rep.auc_sampled = a.sampled;
    rep.precision = precision_at_probe(ls);
    rep.aupr = aupr(ls);
    rep.ndcg = ndcg(ls);
    return rep;
}

}  // namespace linkeval
