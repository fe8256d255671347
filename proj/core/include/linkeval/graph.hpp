#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linkeval/common.hpp"

namespace linkeval {

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Numeric-aware order on original node labels: all-digit labels compare as
/// integers, everything else lexicographically (digits sort before text).
bool label_less(const std::string& a, const std::string& b);

/// Immutable simple undirected unweighted graph.
///
/// Internal ids are 0..n-1 assigned by sorting the original labels with
/// label_less, so two edge lists describing the same labelled graph load to
/// identical objects regardless of line order.  Adjacency is sorted per node.
class Graph {
public:
    Graph() = default;

    /// Build from internal-id edges. Labels may be empty (decimal ids are
    /// synthesized) but when given must have node_count entries. Throws on
    /// self-loops, duplicates, or out-of-range endpoints.
    static Graph from_edges(NodeId node_count, std::vector<NodePair> edges,
                            std::vector<std::string> labels = {});

    NodeId node_count() const { return NodeId(offsets_.size()) - 1; }
    std::size_t edge_count() const { return adj_.size() / 2; }

    std::span<const NodeId> neighbors(NodeId v) const;
    NodeId degree(NodeId v) const;
    bool has_edge(NodeId u, NodeId v) const;

    const std::string& label(NodeId v) const;
    std::optional<NodeId> node_of_label(const std::string& lbl) const;

    /// All edges as canonical pairs, ascending.
    std::vector<NodePair> edges() const;

    /// Canonical serialization: one "label_a label_b" line per edge with
    /// a < b internally, ascending, '\n' after every line. Bit-exact cache key.
    std::string canonical_edge_list() const;
    std::uint64_t content_hash() const;

private:
    void check_node(NodeId v) const;

    std::vector<std::size_t> offsets_ = {0};  // CSR, size n+1
    std::vector<NodeId> adj_;
    std::vector<std::string> labels_;   // size n; label_less-sorted on the load paths
    bool labels_sorted_ = true;
};

struct ParseOptions {
    char comment_prefix = '#';
    /// When unset, any mix of whitespace and commas separates tokens;
    /// when set, only that character does.
    std::optional<char> separator;
    /// Canonicalize: silently drop self-loops and duplicate edges (counted in
    /// the report). When false, either one is a parse error.
    bool dedupe = true;
};

struct ParseReport {
    std::size_t dropped_self_loops = 0;
    std::size_t dropped_duplicates = 0;
    std::size_t comment_lines = 0;
    std::size_t ignored_weights = 0;  // numeric third column, dropped
};

/// Parse an edge list (two tokens per line, '#' comments). Symmetrizes
/// directed input by construction. Throws on malformed lines (with line
/// number) and on empty graphs (m = 0).
Graph parse_edge_list(std::istream& in, const ParseOptions& opts = {},
                      ParseReport* report = nullptr);
Graph load_edge_list(const std::string& path, const ParseOptions& opts = {},
                     ParseReport* report = nullptr);

/// Induced subgraph on the largest component; ties broken by the component
/// holding the smallest minimum original node id.
Graph largest_connected_component(const Graph& g);

/// BFS distances from source; kUnreachable marks disconnected nodes.
std::vector<std::uint32_t> shortest_path_lengths(const Graph& g, NodeId source);

/// The universe U of unordered node pairs over g's nodes.
class CandidateSpace {
public:
    explicit CandidateSpace(const Graph& g) : g_(&g) {}

    std::uint64_t universe_size() const {
        const std::uint64_t n = g_->node_count();
        return n * (n - 1) / 2;
    }
    std::uint64_t non_edge_count() const { return universe_size() - g_->edge_count(); }
    bool is_edge(const NodePair& p) const { return g_->has_edge(p.a, p.b); }

private:
    const Graph* g_;
};

}  // namespace linkeval
