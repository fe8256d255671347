#pragma once

#include <cstdint>
#include <vector>

namespace linkeval {

/// Probe-positive and sampled-negative scores for one evaluation round.
struct LabeledScores {
    std::vector<double> positives;
    std::vector<double> negatives;
};

struct AucOptions {
    enum class Mode { Auto, Exact, Sampled };
    Mode mode = Mode::Auto;
    std::uint64_t sample_pairs = 100000;
    std::uint64_t seed = 0;
    /// Auto switches to sampling above this |pos|*|neg| product.
    std::uint64_t exact_pair_limit = 10000000;
};

struct AucResult {
    double value = 0.0;
    bool sampled = false;
};

/// Exact rank-based AUC: P(pos > neg) + 0.5 P(pos = neg).
double exact_auc(const LabeledScores& ls);

/// (N1 + 0.5 N2) / N over N uniformly drawn positive-negative pairs.
double sampled_auc(const LabeledScores& ls, std::uint64_t n_pairs, std::uint64_t seed);

AucResult auc(const LabeledScores& ls, const AucOptions& opts = {});

/// Fraction of positives among the top-|positives| pooled scores; tied
/// negatives rank above tied positives (pessimistic).
double precision_at_probe(const LabeledScores& ls);

/// Step-interpolated area under precision-recall over descending thresholds
/// (pessimistic tie order).
double aupr(const LabeledScores& ls);

/// Binary-relevance DCG over the pooled pessimistic ranking divided by the
/// ideal DCG, log2 position discounting.
double ndcg(const LabeledScores& ls);

struct MetricReport {
    double auc = 0.0;
    double precision = 0.0;
    double aupr = 0.0;
    double ndcg = 0.0;
    bool auc_sampled = false;
};

MetricReport evaluate_scores(const LabeledScores& ls, const AucOptions& opts = {});

}  // namespace linkeval
