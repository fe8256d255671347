#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <unordered_map>
#include <vector>

#include "linkeval/features.hpp"

namespace linkeval {

namespace {

// Weighted multigraph view used between aggregation levels. self_a holds the
// full symmetric A_ii contribution (twice the collapsed intra weight).
struct WGraph {
    std::size_t n = 0;
    std::vector<std::vector<std::pair<std::uint32_t, double>>> adj;
    std::vector<double> self_a;
    std::vector<double> wdeg;
    double two_m = 0.0;

    static WGraph from_graph(const Graph& g) {
        WGraph w;
        w.n = g.node_count();
        w.adj.resize(w.n);
        w.self_a.assign(w.n, 0.0);
        w.wdeg.assign(w.n, 0.0);
        for (NodeId v = 0; v < g.node_count(); ++v)
            for (NodeId u : g.neighbors(v)) w.adj[v].push_back({u, 1.0});
        for (std::size_t v = 0; v < w.n; ++v) w.wdeg[v] = double(w.adj[v].size());
        w.two_m = 2.0 * double(g.edge_count());
        return w;
    }
};

// One sweep-until-stable local-move phase. Returns true if any node moved.
bool local_phase(const WGraph& g, std::vector<std::uint32_t>& comm, std::uint64_t seed) {
    const double eps = 1e-12;
    std::vector<double> tot(g.n, 0.0);
    for (std::size_t v = 0; v < g.n; ++v) tot[comm[v]] += g.wdeg[v];

    std::vector<std::uint32_t> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    if (seed != 0) {
        std::mt19937_64 rng(seed);
        for (std::size_t i = 0; i + 1 < order.size(); ++i)
            std::swap(order[i], order[i + uniform_index(rng, order.size() - i)]);
    }

    bool any_move = false;
    std::unordered_map<std::uint32_t, double> k_to;
    for (int sweep = 0; sweep < 128; ++sweep) {
        std::size_t moves = 0;
        for (std::uint32_t u : order) {
            const std::uint32_t c_old = comm[u];
            k_to.clear();
            k_to[c_old];  // staying is always a candidate
            for (const auto& [v, w] : g.adj[u])
                if (v != u) k_to[comm[v]] += w;

            tot[c_old] -= g.wdeg[u];
            std::uint32_t best_c = c_old;
            double best_gain = k_to[c_old] - tot[c_old] * g.wdeg[u] / g.two_m;
            for (const auto& [c, k] : k_to) {
                const double gain = k - tot[c] * g.wdeg[u] / g.two_m;
                if (gain > best_gain + eps || (std::abs(gain - best_gain) <= eps && c < best_c)) {
                    best_gain = gain;
                    best_c = c;
                }
            }
            tot[best_c] += g.wdeg[u];
            if (best_c != c_old) {
                comm[u] = best_c;
                ++moves;
            }
        }
        if (moves == 0) break;
        any_move = true;
    }
    return any_move;
}

// Relabel community ids densely, ordered by smallest member id.
std::size_t densify(std::vector<std::uint32_t>& comm) {
    std::unordered_map<std::uint32_t, std::uint32_t> remap;
    std::uint32_t next = 0;
    for (std::uint32_t c : comm)
        if (!remap.count(c)) remap[c] = next++;
    for (auto& c : comm) c = remap[c];
    return next;
}

WGraph aggregate(const WGraph& g, const std::vector<std::uint32_t>& comm, std::size_t count) {
    WGraph out;
    out.n = count;
    out.adj.resize(count);
    out.self_a.assign(count, 0.0);
    out.wdeg.assign(count, 0.0);
    out.two_m = g.two_m;

    std::vector<std::unordered_map<std::uint32_t, double>> acc(count);
    for (std::size_t u = 0; u < g.n; ++u) {
        const auto cu = comm[u];
        out.self_a[cu] += g.self_a[u];
        for (const auto& [v, w] : g.adj[u]) {
            const auto cv = comm[v];
            if (cu == cv) out.self_a[cu] += w;  // both directions visited
            else acc[cu][cv] += w;
        }
    }
    for (std::size_t c = 0; c < count; ++c) {
        auto& nbrs = out.adj[c];
        nbrs.assign(acc[c].begin(), acc[c].end());
        std::sort(nbrs.begin(), nbrs.end());
        double deg = out.self_a[c];
        for (const auto& [v, w] : nbrs) deg += w;
        out.wdeg[c] = deg;
    }
    return out;
}

}  // namespace

Partition louvain_communities(const Graph& g, std::uint64_t seed) {
    const NodeId n = g.node_count();
    Partition part;
    part.community.resize(n);
    std::iota(part.community.begin(), part.community.end(), 0);
    part.count = n;
    if (g.edge_count() == 0) return part;

    WGraph level = WGraph::from_graph(g);
    std::vector<std::uint32_t> node_to_super(n);
    std::iota(node_to_super.begin(), node_to_super.end(), 0);

    for (int depth = 0; depth < 64; ++depth) {
        std::vector<std::uint32_t> comm(level.n);
        std::iota(comm.begin(), comm.end(), 0);
        if (!local_phase(level, comm, seed == 0 ? 0 : mix_seed(seed, depth))) break;
        const std::size_t count = densify(comm);
        for (NodeId v = 0; v < n; ++v) node_to_super[v] = comm[node_to_super[v]];
        if (count == level.n) break;
        level = aggregate(level, comm, count);
    }

    part.community = node_to_super;
    part.count = densify(part.community);
    return part;
}

}  // namespace linkeval
