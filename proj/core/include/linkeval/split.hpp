#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "linkeval/graph.hpp"
#include "linkeval/predictors.hpp"

namespace linkeval {

/// One seeded partition of E plus sampled negatives.
///
/// Sizes realize E^T : E^V : E^P = 0.64 : 0.16 : 0.20 with the probe rounded
/// first (|E^P| = round(0.2 m)), then validation (round(0.16 m)), remainder
/// to train. negatives (|E^P|) and validation_negatives (|E^V|) are drawn
/// uniformly without replacement from U - E and are mutually disjoint.
struct SplitSample {
    std::vector<NodePair> train_edges;
    std::vector<NodePair> validation_edges;
    std::vector<NodePair> probe_edges;
    std::vector<NodePair> negatives;
    std::vector<NodePair> validation_negatives;
    std::uint64_t seed = 0;
};

struct EvalConfig {
    int repeats = 10;
    std::uint64_t seed_base = 0;
    /// Exact AUC below this |pos|*|neg| product, sampled above it.
    std::uint64_t exact_auc_pair_limit = 10000000;
    std::uint64_t auc_sample_pairs = 100000;
};

SplitSample make_split(const Graph& g, std::uint64_t seed);

/// Graph on the same node set (and labels) induced by an edge subset.
Graph edge_subgraph(const Graph& g, std::span<const NodePair> edges);

struct TraversalResult {
    PredictorConfig chosen;
    double validation_auc = 0.0;
    std::size_t failed_points = 0;
    std::vector<std::string> failures;
};

/// Grid traversal: trains each grid point on E^T only, ranks points by AUC
/// of validation positives vs validation negatives, and returns the argmax
/// configuration (ties keep the earliest declared point). Grid points that
/// throw are skipped; throws when every point fails. The caller retrains on
/// E^T u E^V with the winner.
TraversalResult traverse_hyperparameters(const Predictor& predictor, const Graph& g,
                                         const SplitSample& split, const EvalConfig& cfg);

}  // namespace linkeval
