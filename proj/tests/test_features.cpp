#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"

#include "linkeval/features.hpp"

using namespace linkeval;

namespace {

Graph parse(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

Graph path_graph(NodeId n) {
    std::vector<NodePair> edges;
    for (NodeId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, std::move(edges));
}

Graph complete_graph(NodeId n) {
    std::vector<NodePair> edges;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(n, std::move(edges));
}

Graph random_graph(NodeId n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<NodePair> edges;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j)
            if (unit_real(rng) < p) edges.emplace_back(i, j);
    return Graph::from_edges(n, std::move(edges));
}

// oracle: modularity by the literal double loop over node pairs
double modularity_oracle(const Graph& g, const Partition& part) {
    const double mm = 2.0 * double(g.edge_count());
    double q = 0.0;
    for (NodeId i = 0; i < g.node_count(); ++i)
        for (NodeId j = 0; j < g.node_count(); ++j) {
            if (part.community[i] != part.community[j]) continue;
            const double a = g.has_edge(i, j) ? 1.0 : 0.0;
            q += a - double(g.degree(i)) * double(g.degree(j)) / mm;
        }
    return q / mm;
}

// oracle: transitivity by enumerating all node triples
double clustering_oracle(const Graph& g) {
    const NodeId n = g.node_count();
    std::uint64_t triangles = 0, triples = 0;
    for (NodeId a = 0; a < n; ++a)
        for (NodeId b = a + 1; b < n; ++b)
            for (NodeId c = b + 1; c < n; ++c) {
                const int edges = int(g.has_edge(a, b)) + int(g.has_edge(b, c)) +
                                  int(g.has_edge(a, c));
                if (edges == 3) ++triangles;
                if (edges >= 2) triples += (edges == 3) ? 3 : 1;
            }
    if (triples == 0) return 0.0;
    return 3.0 * double(triangles) / double(triples);
}

}  // namespace

TEST_CASE("distance stats on P4 and K5") {
    const auto p4 = distance_stats(path_graph(4));
    CHECK(p4.diameter == 3);
    CHECK(p4.avg_distance == doctest::Approx(10.0 / 6.0));
    CHECK(!p4.estimated);

    const auto k5 = distance_stats(complete_graph(5));
    CHECK(k5.diameter == 1);
    CHECK(k5.avg_distance == doctest::Approx(1.0));
}

TEST_CASE("distance stats on a random tree match an all-pairs oracle") {
    std::mt19937_64 rng(15);
    std::vector<NodePair> edges;
    for (NodeId v = 1; v < 30; ++v) edges.emplace_back(v, NodeId(uniform_index(rng, v)));
    const Graph g = Graph::from_edges(30, std::move(edges));

    std::uint64_t total = 0;
    std::uint32_t diam = 0;
    for (NodeId s = 0; s < g.node_count(); ++s) {
        const auto d = shortest_path_lengths(g, s);
        for (NodeId v = 0; v < g.node_count(); ++v)
            if (v != s) {
                total += d[v];
                diam = std::max(diam, d[v]);
            }
    }
    const auto got = distance_stats(g);
    CHECK(got.diameter == diam);
    CHECK(got.avg_distance == doctest::Approx(double(total) / (30.0 * 29.0)));
}

TEST_CASE("estimated distances are flagged and bounded by exact values") {
    const Graph g = random_graph(120, 0.05, 3);
    FeatureOptions exact_opts;
    const auto exact = distance_stats(g, exact_opts);

    FeatureOptions approx_opts;
    approx_opts.exact_threshold = 10;
    approx_opts.sample_sources = 20;
    approx_opts.seed = 5;
    const auto approx = distance_stats(g, approx_opts);
    CHECK(approx.estimated);
    CHECK(approx.diameter <= exact.diameter);
    CHECK(approx.avg_distance <= double(approx.diameter));
}

TEST_CASE("degenerate single-node component") {
    const auto d = distance_stats(Graph::from_edges(3, {}));
    CHECK(d.degenerate);
    CHECK(d.diameter == 0);
    CHECK(d.avg_distance == 0.0);
}

TEST_CASE("degree entropy") {
    // cycle: every node degree 2 -> a single degree class
    std::vector<NodePair> cyc;
    for (NodeId v = 0; v < 6; ++v) cyc.emplace_back(v, NodeId((v + 1) % 6));
    CHECK(degree_entropy(Graph::from_edges(6, std::move(cyc))) == 0.0);

    // star S4: degrees {3,1,1,1}
    const Graph star = parse("c a\nc b\nc d");
    CHECK(degree_entropy(star) == doctest::Approx(0.8112781244591328).epsilon(1e-12));

    // bound: at most log2(#distinct degrees)
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = random_graph(30, 0.15, seed);
        std::set<NodeId> distinct;
        for (NodeId v = 0; v < g.node_count(); ++v) distinct.insert(g.degree(v));
        CHECK(degree_entropy(g) <= std::log2(double(distinct.size())) + 1e-12);
    }
}

TEST_CASE("clustering coefficient endpoints") {
    CHECK(clustering_coefficient(complete_graph(3)) == doctest::Approx(1.0));
    bool degenerate = false;
    CHECK(clustering_coefficient(parse("c a\nc b\nc d"), &degenerate) == 0.0);
    CHECK(!degenerate);  // the star has connected triples, just no triangles
    CHECK(clustering_coefficient(Graph::from_edges(2, {{0, 1}}), &degenerate) == 0.0);
    CHECK(degenerate);
}

TEST_CASE("clustering matches the triple-enumeration oracle") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const Graph g = random_graph(40, 0.2, seed);
        CHECK(clustering_coefficient(g) == doctest::Approx(clustering_oracle(g)).epsilon(1e-12));
    }
}

TEST_CASE("modularity endpoints") {
    const Graph g = random_graph(20, 0.3, 4);
    Partition whole;
    whole.community.assign(g.node_count(), 0);
    whole.count = 1;
    CHECK(modularity(g, whole) == doctest::Approx(0.0));

    // two disjoint K4s with the natural partition
    std::vector<NodePair> edges;
    for (NodeId i = 0; i < 4; ++i)
        for (NodeId j = i + 1; j < 4; ++j) {
            edges.emplace_back(i, j);
            edges.emplace_back(i + 4, j + 4);
        }
    const Graph two_k4 = Graph::from_edges(8, std::move(edges));
    Partition natural;
    natural.community = {0, 0, 0, 0, 1, 1, 1, 1};
    natural.count = 2;
    CHECK(modularity(two_k4, natural) == doctest::Approx(0.5));

    CHECK_THROWS_AS(modularity(Graph::from_edges(3, {}), whole), std::invalid_argument);
}

TEST_CASE("modularity matches the double-loop oracle on random partitions") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 5; ++trial) {
        const Graph g = random_graph(25, 0.2, 100 + trial);
        Partition part;
        part.count = 3;
        part.community.resize(g.node_count());
        for (auto& c : part.community) c = std::uint32_t(uniform_index(rng, 3));
        CHECK(modularity(g, part) == doctest::Approx(modularity_oracle(g, part)).epsilon(1e-12));
        CHECK(modularity(g, part) <= 1.0);
    }
}

TEST_CASE("louvain recovers planted disjoint cliques") {
    std::vector<NodePair> edges;
    for (NodeId block = 0; block < 3; ++block)
        for (NodeId i = 0; i < 5; ++i)
            for (NodeId j = i + 1; j < 5; ++j)
                edges.emplace_back(block * 5 + i, block * 5 + j);
    const Graph g = Graph::from_edges(15, std::move(edges));
    const auto part = louvain_communities(g);
    CHECK(part.count == 3);
    for (NodeId v = 0; v < 15; ++v) CHECK(part.community[v] == part.community[(v / 5) * 5]);
    CHECK(modularity(g, part) == doctest::Approx(2.0 / 3.0));

    // determinism
    const auto again = louvain_communities(g);
    CHECK(again.community == part.community);
}

TEST_CASE("louvain modularity is non-trivial on modular random graphs") {
    // two ER blocks with a few cross links
    std::mt19937_64 rng(8);
    std::vector<NodePair> edges;
    for (NodeId i = 0; i < 20; ++i)
        for (NodeId j = i + 1; j < 20; ++j) {
            if (unit_real(rng) < 0.4) edges.emplace_back(i, j);
            if (unit_real(rng) < 0.4) edges.emplace_back(i + 20, j + 20);
        }
    edges.emplace_back(0, 20);
    edges.emplace_back(1, 21);
    const Graph g = Graph::from_edges(40, std::move(edges));
    const auto part = louvain_communities(g);
    CHECK(modularity(g, part) > 0.3);
}

TEST_CASE("analytic features are invariant under node relabeling") {
    const Graph g = random_graph(25, 0.15, 50);
    // relabel: permute internal ids via shuffled string labels
    std::mt19937_64 rng(51);
    std::vector<NodeId> perm(g.node_count());
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = 0; i + 1 < perm.size(); ++i)
        std::swap(perm[i], perm[i + uniform_index(rng, perm.size() - i)]);
    std::vector<NodePair> edges;
    for (const auto& e : g.edges()) edges.emplace_back(perm[e.a], perm[e.b]);
    const Graph h = Graph::from_edges(g.node_count(), std::move(edges));

    CHECK(degree_entropy(g) == doctest::Approx(degree_entropy(h)).epsilon(1e-12));
    CHECK(clustering_coefficient(g) ==
          doctest::Approx(clustering_coefficient(h)).epsilon(1e-12));
    const auto dg = distance_stats(g);
    const auto dh = distance_stats(h);
    CHECK(dg.diameter == dh.diameter);
    CHECK(dg.avg_distance == doctest::Approx(dh.avg_distance).epsilon(1e-12));

    // the Q formula itself is label-invariant for a consistently relabeled partition
    const auto part = louvain_communities(g);
    Partition mapped;
    mapped.count = part.count;
    mapped.community.resize(part.community.size());
    for (NodeId v = 0; v < g.node_count(); ++v) mapped.community[perm[v]] = part.community[v];
    CHECK(modularity(g, part) == doctest::Approx(modularity(h, mapped)).epsilon(1e-12));
}

TEST_CASE("topology_features fills every field and flag tokens") {
    const Graph g = random_graph(30, 0.15, 60);
    const auto f = topology_features(g);
    CHECK(f.density == doctest::Approx(2.0 * double(g.edge_count()) / (30.0 * 29.0)));
    CHECK(f.avg_distance <= double(f.diameter));
    CHECK(f.clustering >= 0.0);
    CHECK(f.clustering <= 1.0);
    CHECK(f.modularity <= 1.0);
    CHECK(f.degree_entropy >= 0.0);
    CHECK(f.flags().empty());
}
