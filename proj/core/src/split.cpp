#include "linkeval/split.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "linkeval/metrics.hpp"

namespace linkeval {

namespace {

NodePair pair_from_rank(std::uint64_t rank, NodeId n) {
    // rank in [0, n(n-1)/2) -> (i, j), i < j, lexicographic
    NodeId i = 0;
    std::uint64_t remaining = rank;
    std::uint64_t row = n - 1;
    while (remaining >= row) {
        remaining -= row;
        --row;
        ++i;
    }
    return NodePair(i, NodeId(i + 1 + remaining));
}

std::vector<NodePair> sample_non_edges(const Graph& g, std::size_t want, std::mt19937_64& rng) {
    const CandidateSpace space(g);
    const std::uint64_t universe = space.universe_size();
    const std::uint64_t available = space.non_edge_count();
    if (available < want) throw std::runtime_error("insufficient non-edges");

    const NodeId n = g.node_count();
    std::vector<NodePair> out;
    out.reserve(want);
    std::unordered_set<NodePair, NodePairHash> taken;
    if (available <= 2 * std::uint64_t(want)) {
        // dense graph: enumerate every non-edge, then draw without replacement
        std::vector<NodePair> pool;
        pool.reserve(available);
        for (NodeId i = 0; i < n; ++i)
            for (NodeId j = i + 1; j < n; ++j)
                if (!g.has_edge(i, j)) pool.emplace_back(i, j);
        for (std::size_t k = 0; k < want; ++k) {
            std::swap(pool[k], pool[k + uniform_index(rng, pool.size() - k)]);
            out.push_back(pool[k]);
        }
        return out;
    }
    while (out.size() < want) {
        const NodePair cand = pair_from_rank(uniform_index(rng, universe), n);
        if (g.has_edge(cand.a, cand.b) || !taken.insert(cand).second) continue;
        out.push_back(cand);
    }
    return out;
}

}  // namespace

SplitSample make_split(const Graph& g, std::uint64_t seed) {
    const std::size_t m = g.edge_count();
    if (m < 5) throw std::invalid_argument("make_split: need at least 5 edges");

    // probe rounded first so |E^P| stays closest to 0.2 m
    const std::size_t probe = std::size_t(std::llround(0.20 * double(m)));
    const std::size_t valid = std::size_t(std::llround(0.16 * double(m)));
    if (probe == 0 || valid == 0 || probe + valid >= m)
        throw std::invalid_argument("make_split: degenerate split sizes");

    std::mt19937_64 rng(seed);
    std::vector<NodePair> edges = g.edges();
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        std::swap(edges[i], edges[i + uniform_index(rng, edges.size() - i)]);

    SplitSample s;
    s.seed = seed;
    s.probe_edges.assign(edges.begin(), edges.begin() + probe);
    s.validation_edges.assign(edges.begin() + probe, edges.begin() + probe + valid);
    s.train_edges.assign(edges.begin() + probe + valid, edges.end());

    auto negs = sample_non_edges(g, probe + valid, rng);
    s.negatives.assign(negs.begin(), negs.begin() + probe);
    s.validation_negatives.assign(negs.begin() + probe, negs.end());
    return s;
}

Graph edge_subgraph(const Graph& g, std::span<const NodePair> edges) {
    std::vector<std::string> labels;
    labels.reserve(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) labels.push_back(g.label(v));
    return Graph::from_edges(g.node_count(), {edges.begin(), edges.end()}, std::move(labels));
}

TraversalResult traverse_hyperparameters(const Predictor& predictor, const Graph& g,
                                         const SplitSample& split, const EvalConfig& cfg) {
    const auto grid = predictor.grid();
    if (grid.empty()) throw std::invalid_argument("traversal: empty grid");

    const Graph train = edge_subgraph(g, split.train_edges);
    std::vector<NodePair> queries(split.validation_edges.begin(), split.validation_edges.end());
    queries.insert(queries.end(), split.validation_negatives.begin(),
                   split.validation_negatives.end());

    AucOptions auc_opts;
    auc_opts.exact_pair_limit = cfg.exact_auc_pair_limit;
    auc_opts.sample_pairs = cfg.auc_sample_pairs;
    auc_opts.seed = mix_seed(split.seed, 0x7261766572u);

    TraversalResult result;
    bool have_best = false;
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        PredictorConfig point = grid[gi];
        point.seed = mix_seed(split.seed, gi);
        try {
            const ScoreTable st = predictor.score(train, queries, point);
            LabeledScores ls;
            ls.positives.assign(st.scores.begin(),
                                st.scores.begin() + split.validation_edges.size());
            ls.negatives.assign(st.scores.begin() + split.validation_edges.size(),
                                st.scores.end());
            const double v = auc(ls, auc_opts).value;
            if (!have_best || v > result.validation_auc) {  // ties keep earliest point
                result.chosen = point;
                result.validation_auc = v;
                have_best = true;
            }
        } catch (const std::exception& e) {
            ++result.failed_points;
            result.failures.push_back(predictor.id() + " grid point " + std::to_string(gi) +
                                      ": " + e.what());
        }
    }
    if (!have_best)
        throw std::runtime_error("traversal: every grid point failed for " + predictor.id());
    return result;
}

}  // namespace linkeval
