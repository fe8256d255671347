#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linkeval/graph.hpp"

namespace linkeval {

struct FeatureOptions {
    /// Above this LCC size, diameter/average distance are estimated from
    /// sampled BFS sources instead of the full all-pairs sweep.
    NodeId exact_threshold = 5000;
    std::size_t sample_sources = 512;
    std::uint64_t seed = 0;  // source sampling and community detection
};

struct TopologyFeatureSet {
    std::uint32_t diameter = 0;
    double degree_entropy = 0.0;
    double clustering = 0.0;
    double modularity = 0.0;
    double avg_distance = 0.0;
    double density = 0.0;

    bool distances_estimated = false;   // sampled-source diameter/avg_distance
    bool degenerate_distance = false;   // single-node LCC
    bool degenerate_clustering = false; // no connected triple

    /// Flag tokens for the features CSV, semicolon-joined by the caller.
    std::vector<std::string> flags() const;
};

struct DistanceSummary {
    std::uint32_t diameter = 0;
    double avg_distance = 0.0;
    bool estimated = false;
    bool degenerate = false;
};

/// Diameter and mean distance over the LCC of g (exact below the threshold,
/// sampled-source estimates above it).
DistanceSummary distance_stats(const Graph& g, const FeatureOptions& opts = {});

/// Shannon entropy (base 2) of the degree distribution over all nodes.
double degree_entropy(const Graph& g);

/// Global transitivity: 3 * triangles / connected triples; 0 when the graph
/// has no connected triple (degenerate flag set if requested).
double clustering_coefficient(const Graph& g, bool* degenerate = nullptr);

struct Partition {
    std::vector<std::uint32_t> community;  // node -> community id (0-based, dense)
    std::size_t count = 0;
};

/// Greedy multi-level modularity maximization. Deterministic for a fixed
/// seed: seed 0 sweeps nodes in ascending id order, any other seed uses a
/// seeded shuffle per level; gain ties resolve to the smallest community id.
Partition louvain_communities(const Graph& g, std::uint64_t seed = 0);

/// Newman modularity Q of a given partition. Throws when m = 0.
double modularity(const Graph& g, const Partition& partition);

/// All six descriptors; modularity uses louvain_communities(g, opts.seed).
TopologyFeatureSet topology_features(const Graph& g, const FeatureOptions& opts = {});

}  // namespace linkeval
