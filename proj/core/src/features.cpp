#include "linkeval/features.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

namespace linkeval {

std::vector<std::string> TopologyFeatureSet::flags() const {
    std::vector<std::string> out;
    if (distances_estimated) out.push_back("distances_estimated");
    if (degenerate_distance) out.push_back("degenerate_distance");
    if (degenerate_clustering) out.push_back("degenerate_clustering");
    return out;
}

DistanceSummary distance_stats(const Graph& g, const FeatureOptions& opts) {
    const Graph lcc = largest_connected_component(g);
    const NodeId n = lcc.node_count();
    DistanceSummary out;
    if (n <= 1) {
        out.degenerate = true;
        return out;
    }

    std::vector<NodeId> sources;
    if (n <= opts.exact_threshold || std::size_t(n) <= opts.sample_sources) {
        sources.resize(n);
        for (NodeId v = 0; v < n; ++v) sources[v] = v;
    } else {
        out.estimated = true;
        std::mt19937_64 rng(mix_seed(opts.seed, 0x6d5f7a11));
        std::vector<NodeId> all(n);
        for (NodeId v = 0; v < n; ++v) all[v] = v;
        for (std::size_t i = 0; i < opts.sample_sources; ++i)
            std::swap(all[i], all[i + uniform_index(rng, n - i)]);
        sources.assign(all.begin(), all.begin() + opts.sample_sources);
    }

    std::uint64_t total = 0;
    std::uint64_t pair_count = 0;
    std::uint32_t diameter = 0;
    for (NodeId s : sources) {
        const auto dist = shortest_path_lengths(lcc, s);
        for (NodeId v = 0; v < n; ++v) {
            if (v == s) continue;
            total += dist[v];
            ++pair_count;
            diameter = std::max(diameter, dist[v]);
        }
    }
    out.diameter = diameter;
    out.avg_distance = double(total) / double(pair_count);
    return out;
}

double degree_entropy(const Graph& g) {
    const NodeId n = g.node_count();
    if (n == 0) throw std::invalid_argument("degree_entropy: empty graph");
    std::map<NodeId, std::size_t> counts;
    for (NodeId v = 0; v < n; ++v) ++counts[g.degree(v)];
    double h = 0.0;
    for (const auto& [k, nk] : counts) {
        const double p = double(nk) / double(n);
        h -= p * std::log2(p);
    }
    return h < 0.0 ? 0.0 : h;  // -0.0 from a single degree class
}

double clustering_coefficient(const Graph& g, bool* degenerate) {
    std::uint64_t triples = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const std::uint64_t d = g.degree(v);
        triples += d * (d - 1) / 2;
    }
    if (degenerate) *degenerate = (triples == 0);
    if (triples == 0) return 0.0;

    // each triangle is counted once per edge, i.e. three times in total
    std::uint64_t closed = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const auto nv = g.neighbors(v);
        for (NodeId w : nv) {
            if (w < v) continue;
            const auto nw = g.neighbors(w);
            // sorted intersection size
            auto it1 = nv.begin();
            auto it2 = nw.begin();
            while (it1 != nv.end() && it2 != nw.end()) {
                if (*it1 < *it2) ++it1;
                else if (*it2 < *it1) ++it2;
                else {
                    ++closed;
                    ++it1;
                    ++it2;
                }
            }
        }
    }
    // closed = sum over edges of common neighbours = 3 * triangles
    return double(closed) / double(triples);
}

double modularity(const Graph& g, const Partition& partition) {
    const std::size_t m = g.edge_count();
    if (m == 0) throw std::invalid_argument("modularity: undefined for m = 0");
    if (partition.community.size() != g.node_count())
        throw std::invalid_argument("modularity: partition size mismatch");

    std::vector<double> intra(partition.count, 0.0);
    std::vector<double> deg_sum(partition.count, 0.0);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const auto c = partition.community[v];
        if (c >= partition.count) throw std::invalid_argument("modularity: community id out of range");
        deg_sum[c] += g.degree(v);
    }
    for (const auto& e : g.edges())
        if (partition.community[e.a] == partition.community[e.b])
            intra[partition.community[e.a]] += 1.0;

    double q = 0.0;
    const double mm = double(m);
    for (std::size_t c = 0; c < partition.count; ++c) {
        const double frac = deg_sum[c] / (2.0 * mm);
        q += intra[c] / mm - frac * frac;
    }
    return q;
}

TopologyFeatureSet topology_features(const Graph& g, const FeatureOptions& opts) {
    TopologyFeatureSet f;
    const auto dist = distance_stats(g, opts);
    f.diameter = dist.diameter;
    f.avg_distance = dist.avg_distance;
    f.distances_estimated = dist.estimated;
    f.degenerate_distance = dist.degenerate;
    f.degree_entropy = degree_entropy(g);
    f.clustering = clustering_coefficient(g, &f.degenerate_clustering);
    f.modularity = modularity(g, louvain_communities(g, opts.seed));
    const double n = double(g.node_count());
    f.density = n > 1 ? 2.0 * double(g.edge_count()) / (n * (n - 1.0)) : 0.0;
    return f;
}

}  // namespace linkeval
