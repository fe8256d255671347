#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "linkeval/predictors.hpp"

namespace linkeval {

namespace {

// degree^0.75 noise table for negative sampling; cumulative for binary search
std::vector<double> noise_cdf(const Graph& g) {
    std::vector<double> cdf(g.node_count());
    double acc = 0.0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        acc += std::pow(double(g.degree(v)), 0.75);
        cdf[v] = acc;
    }
    return cdf;
}

NodeId sample_noise(const std::vector<double>& cdf, std::mt19937_64& rng) {
    const double x = unit_real(rng) * cdf.back();
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), x);
    return NodeId(std::min<std::ptrdiff_t>(it - cdf.begin(), cdf.size() - 1));
}

inline double sigmoid(double x) {
    if (x > 30.0) return 1.0;
    if (x < -30.0) return 0.0;
    return 1.0 / (1.0 + std::exp(-x));
}

}  // namespace

std::vector<double> deepwalk_embeddings(const Graph& train, const DeepWalkOptions& opts) {
    if (train.edge_count() == 0) throw std::invalid_argument("deepwalk: graph has no edges");
    if (opts.walk_length < 1 || opts.walks_per_node < 1 || opts.dimensions < 1 ||
        opts.window < 1 || opts.negatives < 0 || !(opts.learning_rate > 0))
        throw std::invalid_argument("deepwalk: invalid options");

    const NodeId n = train.node_count();
    const std::size_t dim = std::size_t(opts.dimensions);
    std::mt19937_64 rng(opts.seed);

    std::vector<double> emb(std::size_t(n) * dim);
    std::vector<double> ctx(std::size_t(n) * dim, 0.0);
    for (auto& x : emb) x = (unit_real(rng) - 0.5) / double(dim);

    const auto cdf = noise_cdf(train);
    const double total_tokens =
        double(opts.walks_per_node) * double(n) * double(opts.walk_length);
    const double lr0 = opts.learning_rate;
    double processed = 0.0;

    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<NodeId> walk;
    walk.reserve(opts.walk_length);
    std::vector<double> grad(dim);

    for (int pass = 0; pass < opts.walks_per_node; ++pass) {
        for (std::size_t i = 0; i + 1 < order.size(); ++i)
            std::swap(order[i], order[i + uniform_index(rng, order.size() - i)]);
        for (NodeId start : order) {
            walk.clear();
            walk.push_back(start);
            while (int(walk.size()) < opts.walk_length) {
                const auto nb = train.neighbors(walk.back());
                if (nb.empty()) break;
                walk.push_back(nb[uniform_index(rng, nb.size())]);
            }
            for (std::size_t t = 0; t < walk.size(); ++t) {
                const double lr =
                    std::max(lr0 * (1.0 - processed / total_tokens), lr0 * 1e-4);
                processed += 1.0;
                double* v = &emb[std::size_t(walk[t]) * dim];
                const std::size_t lo = t >= std::size_t(opts.window) ? t - opts.window : 0;
                const std::size_t hi = std::min(walk.size() - 1, t + std::size_t(opts.window));
                for (std::size_t c = lo; c <= hi; ++c) {
                    if (c == t) continue;
                    std::fill(grad.begin(), grad.end(), 0.0);
                    for (int neg = -1; neg < opts.negatives; ++neg) {
                        const NodeId target = neg < 0 ? walk[c] : sample_noise(cdf, rng);
                        const double label = neg < 0 ? 1.0 : 0.0;
                        double* u = &ctx[std::size_t(target) * dim];
                        double dot = 0.0;
                        for (std::size_t d = 0; d < dim; ++d) dot += v[d] * u[d];
                        const double g = (label - sigmoid(dot)) * lr;
                        for (std::size_t d = 0; d < dim; ++d) {
                            grad[d] += g * u[d];
                            u[d] += g * v[d];
                        }
                    }
                    for (std::size_t d = 0; d < dim; ++d) v[d] += grad[d];
                }
            }
        }
    }
    return emb;
}

ScoreTable deepwalk_scores(const Graph& train, std::span<const NodePair> queries,
                           const DeepWalkOptions& opts) {
    const auto emb = deepwalk_embeddings(train, opts);
    const std::size_t dim = std::size_t(opts.dimensions);

    ScoreTable out;
    out.predictor_id = "deepwalk";
    out.config.algorithm = "deepwalk";
    out.config.params = {{"walk_length", double(opts.walk_length)},
                         {"walks_per_node", double(opts.walks_per_node)},
                         {"dimensions", double(opts.dimensions)},
                         {"window", double(opts.window)}};
    out.config.seed = opts.seed;
    for (NodeId v = 0; v < train.node_count(); ++v)
        if (train.degree(v) == 0) ++out.isolated_nodes;

    out.pairs.assign(queries.begin(), queries.end());
    out.scores.reserve(queries.size());
    for (const auto& q : queries) {
        const double* x = &emb[std::size_t(q.a) * dim];
        const double* y = &emb[std::size_t(q.b) * dim];
        double s = 0.0;
        for (std::size_t d = 0; d < dim; ++d) s += x[d] * y[d];
        out.scores.push_back(s);
    }
    out.validate();
    return out;
}

}  // namespace linkeval
