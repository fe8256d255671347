#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "linkeval/graph.hpp"

namespace linkeval {

/// Algorithm id plus named hyperparameters and the training seed. The
/// parameter list keeps declaration order so config snapshots are stable.
struct PredictorConfig {
    std::string algorithm;
    std::vector<std::pair<std::string, double>> params;
    std::uint64_t seed = 0;

    double param(const std::string& name, double fallback) const;
    std::string to_string() const;
};

/// Likelihood scores for a list of canonical query pairs.
struct ScoreTable {
    std::vector<NodePair> pairs;
    std::vector<double> scores;
    std::string predictor_id;
    PredictorConfig config;
    std::size_t isolated_nodes = 0;  // nodes scored from their initialization state

    /// Throws unless sizes match and every score is finite.
    void validate() const;
};

/// A trainable scorer: maps (training graph, query pairs, config) to scores.
class Predictor {
public:
    virtual ~Predictor() = default;
    virtual const std::string& id() const = 0;
    /// Hyperparameter grid in declared traversal order; singleton for
    /// parameter-free algorithms.
    virtual std::vector<PredictorConfig> grid() const = 0;
    virtual ScoreTable score(const Graph& train, std::span<const NodePair> queries,
                             const PredictorConfig& cfg) const = 0;
};

// --- native scorers ---

/// Resource allocation: sum of 1/deg over common neighbours.
ScoreTable ra_scores(const Graph& train, std::span<const NodePair> queries);

/// Degree-normalized length-3 walk count:
/// s_ij = sum_{u,v} A_iu A_uv A_vj / sqrt(deg u * deg v).
ScoreTable ra3_scores(const Graph& train, std::span<const NodePair> queries);

/// Matrix forest index: entries of (I + alpha L)^{-1}. Dense factorization up
/// to dense_limit nodes, conjugate-gradient column solves beyond it.
ScoreTable mfi_scores(const Graph& train, std::span<const NodePair> queries, double alpha = 0.1,
                      NodeId dense_limit = 2000);

struct NmfOptions {
    int rank = 64;
    int iterations = 200;
    std::uint64_t seed = 0;
};

/// Raw multiplicative-update factorization A ~ W H minimizing the squared
/// Frobenius error; `a` is rows x cols row-major, entries must be >= 0.
/// errors holds the objective after each iteration (non-increasing).
struct NmfFactors {
    std::vector<double> w;  // rows x rank, row-major
    std::vector<double> h;  // rank x cols, row-major
    std::size_t rows = 0, cols = 0, rank = 0;
    std::vector<double> errors;
};
NmfFactors nmf_factorize(const std::vector<double>& a, std::size_t rows, std::size_t cols,
                         std::size_t rank, int iterations, std::uint64_t seed);

/// Adjacency factorization scores s_ij = (W H)_ij. Requires rank <= n.
ScoreTable nmf_scores(const Graph& train, std::span<const NodePair> queries,
                      const NmfOptions& opts);

struct DeepWalkOptions {
    int walk_length = 40;
    int walks_per_node = 10;
    int dimensions = 32;
    int window = 5;
    int negatives = 5;
    double learning_rate = 0.025;
    std::uint64_t seed = 0;
};

/// Uniform random walks + skip-gram with negative sampling; scores are inner
/// products of the trained node embeddings. Deterministic for a fixed seed.
/// Isolated nodes keep their initialization vectors and are counted in
/// ScoreTable::isolated_nodes.
ScoreTable deepwalk_scores(const Graph& train, std::span<const NodePair> queries,
                           const DeepWalkOptions& opts);

/// Node embeddings only (row-major n x dimensions), for inspection/tests.
std::vector<double> deepwalk_embeddings(const Graph& train, const DeepWalkOptions& opts);

/// Reads a `node_i,node_j,score` CSV (one header line, original node ids)
/// and aligns it to `expected`. Rows may appear in any order and either
/// endpoint order. Throws on unknown ids, non-finite scores, duplicate pairs,
/// and missing pairs (listing the first 10).
ScoreTable ingest_external_scores(const std::string& path, const Graph& g,
                                  std::span<const NodePair> expected);

// --- registry ---

/// Template for per-(network, seed) external score files; `{network}` and
/// `{seed}` placeholders are substituted on resolve.
struct ExternalScorer {
    std::string name;
    std::string path_template;
    std::string resolve(const std::string& network_id, std::uint64_t seed) const;
};

/// Ordered roster of algorithms. Registration order is the tie-break order
/// used when ranking algorithms per network.
class AlgorithmRegistry {
public:
    using Entry = std::variant<std::shared_ptr<Predictor>, ExternalScorer>;

    /// ra, ra3, mfi, nmf, deepwalk with their declared grids, in that order.
    static AlgorithmRegistry with_native_defaults();

    void register_predictor(std::shared_ptr<Predictor> p);
    void register_external(ExternalScorer scorer);

    bool contains(const std::string& id) const;
    const Entry& at(const std::string& id) const;
    std::vector<std::string> ids() const;  // registration order
    std::size_t size() const { return entries_.size(); }

private:
    std::vector<std::pair<std::string, Entry>> entries_;
};

}  // namespace linkeval
