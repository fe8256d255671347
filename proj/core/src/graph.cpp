#include "linkeval/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace linkeval {

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, ptr);
}

bool label_less(const std::string& a, const std::string& b) {
    auto all_digits = [](const std::string& s) {
        if (s.empty()) return false;
        return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
    };
    const bool da = all_digits(a), db = all_digits(b);
    if (da && db) {
        auto stripped = [](const std::string& s) {
            std::size_t i = s.find_first_not_of('0');
            return i == std::string::npos ? std::string_view("0") : std::string_view(s).substr(i);
        };
        const auto sa = stripped(a), sb = stripped(b);
        if (sa.size() != sb.size()) return sa.size() < sb.size();
        if (sa != sb) return sa < sb;
        return a < b;  // "01" vs "1"
    }
    if (da != db) return da;  // numbers before text
    return a < b;
}

Graph Graph::from_edges(NodeId node_count, std::vector<NodePair> edges,
                        std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != node_count)
        throw std::invalid_argument("graph: label count does not match node count");
    if (labels.empty()) {
        labels.reserve(node_count);
        for (NodeId v = 0; v < node_count; ++v) labels.push_back(std::to_string(v));
    }

    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        if (e.a == e.b) throw std::invalid_argument("graph: self-loop on node " + labels[e.a]);
        if (e.b >= node_count) throw std::invalid_argument("graph: edge endpoint out of range");
        if (i > 0 && edges[i] == edges[i - 1])
            throw std::invalid_argument("graph: duplicate edge " + labels[e.a] + "-" + labels[e.b]);
    }

    Graph g;
    g.labels_ = std::move(labels);
    g.labels_sorted_ =
        std::is_sorted(g.labels_.begin(), g.labels_.end(), label_less);
    std::vector<NodeId> deg(node_count, 0);
    for (const auto& e : edges) {
        ++deg[e.a];
        ++deg[e.b];
    }
    g.offsets_.assign(node_count + 1, 0);
    for (NodeId v = 0; v < node_count; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.adj_.resize(g.offsets_.back());
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& e : edges) {
        g.adj_[cursor[e.a]++] = e.b;
        g.adj_[cursor[e.b]++] = e.a;
    }
    for (NodeId v = 0; v < node_count; ++v)
        std::sort(g.adj_.begin() + g.offsets_[v], g.adj_.begin() + g.offsets_[v + 1]);
    return g;
}

void Graph::check_node(NodeId v) const {
    if (v >= node_count()) throw std::out_of_range("graph: node id " + std::to_string(v) + " out of range");
}

std::span<const NodeId> Graph::neighbors(NodeId v) const {
    check_node(v);
    return {adj_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

NodeId Graph::degree(NodeId v) const {
    check_node(v);
    return NodeId(offsets_[v + 1] - offsets_[v]);
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    check_node(u);
    check_node(v);
    if (u == v) return false;
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

const std::string& Graph::label(NodeId v) const {
    check_node(v);
    return labels_[v];
}

std::optional<NodeId> Graph::node_of_label(const std::string& lbl) const {
    if (labels_sorted_) {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), lbl, label_less);
        if (it == labels_.end() || *it != lbl) return std::nullopt;
        return NodeId(it - labels_.begin());
    }
    auto it = std::find(labels_.begin(), labels_.end(), lbl);
    if (it == labels_.end()) return std::nullopt;
    return NodeId(it - labels_.begin());
}

std::vector<NodePair> Graph::edges() const {
    std::vector<NodePair> out;
    out.reserve(edge_count());
    for (NodeId v = 0; v < node_count(); ++v)
        for (NodeId w : neighbors(v))
            if (v < w) out.emplace_back(v, w);
    return out;
}

std::string Graph::canonical_edge_list() const {
    std::string out;
    for (NodeId v = 0; v < node_count(); ++v)
        for (NodeId w : neighbors(v))
            if (v < w) {
                out += labels_[v];
                out += ' ';
                out += labels_[w];
                out += '\n';
            }
    return out;
}

std::uint64_t Graph::content_hash() const { return hash_string(canonical_edge_list()); }

namespace {

std::vector<std::string> split_tokens(const std::string& line, const ParseOptions& opts) {
    std::vector<std::string> tokens;
    std::string cur;
    auto is_sep = [&](char c) {
        if (opts.separator) return c == *opts.separator;
        return c == ' ' || c == '\t' || c == ',' || c == '\r';
    };
    for (char c : line) {
        if (is_sep(c)) {
            if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    return tokens;
}

}  // namespace

Graph parse_edge_list(std::istream& in, const ParseOptions& opts, ParseReport* report) {
    ParseReport local;
    ParseReport& rep = report ? *report : local;
    rep = {};

    std::vector<std::pair<std::string, std::string>> raw_edges;
    std::vector<std::string> label_set;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t"));
        if (trimmed.empty()) continue;
        if (trimmed.front() == opts.comment_prefix) {
            ++rep.comment_lines;
            continue;
        }
        auto tokens = split_tokens(trimmed, opts);
        if (tokens.size() == 3) {
            // weighted input: drop the weight, keep the edge
            try {
                std::size_t pos = 0;
                (void)std::stod(tokens[2], &pos);
                if (pos != tokens[2].size()) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw std::runtime_error("edge list parse error at line " +
                                         std::to_string(line_no) + ": third token '" + tokens[2] +
                                         "' is not a numeric weight");
            }
            ++rep.ignored_weights;
            tokens.pop_back();
        }
        if (tokens.size() != 2)
            throw std::runtime_error("edge list parse error at line " + std::to_string(line_no) +
                                     ": expected 2 tokens, got " + std::to_string(tokens.size()));
        if (tokens[0] == tokens[1]) {
            if (!opts.dedupe)
                throw std::runtime_error("edge list parse error at line " + std::to_string(line_no) +
                                         ": self-loop on '" + tokens[0] + "'");
            ++rep.dropped_self_loops;
            // self-loop endpoints still name a node
            label_set.push_back(tokens[0]);
            continue;
        }
        label_set.push_back(tokens[0]);
        label_set.push_back(tokens[1]);
        raw_edges.emplace_back(std::move(tokens[0]), std::move(tokens[1]));
    }

    std::sort(label_set.begin(), label_set.end(), label_less);
    label_set.erase(std::unique(label_set.begin(), label_set.end()), label_set.end());

    auto id_of = [&](const std::string& lbl) {
        auto it = std::lower_bound(label_set.begin(), label_set.end(), lbl, label_less);
        return NodeId(it - label_set.begin());
    };

    std::vector<NodePair> edges;
    edges.reserve(raw_edges.size());
    for (const auto& [ua, ub] : raw_edges) edges.emplace_back(id_of(ua), id_of(ub));
    std::sort(edges.begin(), edges.end());
    std::size_t kept = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (kept > 0 && edges[i] == edges[kept - 1]) {
            if (!opts.dedupe)
                throw std::runtime_error("edge list parse error: duplicate edge '" +
                                         label_set[edges[i].a] + " " + label_set[edges[i].b] + "'");
            ++rep.dropped_duplicates;
            continue;
        }
        edges[kept++] = edges[i];
    }
    edges.resize(kept);

    if (edges.empty()) throw std::runtime_error("edge list rejected: no edges (m = 0)");
    const NodeId n = NodeId(label_set.size());
    return Graph::from_edges(n, std::move(edges), std::move(label_set));
}

Graph load_edge_list(const std::string& path, const ParseOptions& opts, ParseReport* report) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list: " + path);
    try {
        return parse_edge_list(in, opts, report);
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

std::vector<std::uint32_t> shortest_path_lengths(const Graph& g, NodeId source) {
    if (source >= g.node_count()) throw std::out_of_range("bfs: source out of range");
    std::vector<std::uint32_t> dist(g.node_count(), kUnreachable);
    dist[source] = 0;
    std::vector<NodeId> frontier = {source};
    std::vector<NodeId> next;
    std::uint32_t d = 0;
    while (!frontier.empty()) {
        ++d;
        next.clear();
        for (NodeId u : frontier)
            for (NodeId w : g.neighbors(u))
                if (dist[w] == kUnreachable) {
                    dist[w] = d;
                    next.push_back(w);
                }
        frontier.swap(next);
    }
    return dist;
}

Graph largest_connected_component(const Graph& g) {
    const NodeId n = g.node_count();
    if (n == 0) return {};
    std::vector<NodeId> comp(n, kUnreachable);
    NodeId comp_count = 0;
    std::vector<NodeId> stack;
    for (NodeId s = 0; s < n; ++s) {
        if (comp[s] != kUnreachable) continue;
        comp[s] = comp_count;
        stack.push_back(s);
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            for (NodeId w : g.neighbors(u))
                if (comp[w] == kUnreachable) {
                    comp[w] = comp_count;
                    stack.push_back(w);
                }
        }
        ++comp_count;
    }

    std::vector<std::size_t> size(comp_count, 0);
    std::vector<NodeId> min_node(comp_count, kUnreachable);
    for (NodeId v = 0; v < n; ++v) {
        ++size[comp[v]];
        min_node[comp[v]] = std::min(min_node[comp[v]], v);
    }
    // largest; ties -> smallest minimum node id (ids are label-sorted, so this
    // is the smallest minimum original label)
    NodeId best = 0;
    for (NodeId c = 1; c < comp_count; ++c)
        if (size[c] > size[best] || (size[c] == size[best] && min_node[c] < min_node[best]))
            best = c;

    std::vector<NodeId> remap(n, kUnreachable);
    std::vector<std::string> labels;
    NodeId next_id = 0;
    for (NodeId v = 0; v < n; ++v)
        if (comp[v] == best) {
            remap[v] = next_id++;
            labels.push_back(g.label(v));
        }
    std::vector<NodePair> edges;
    for (const auto& e : g.edges())
        if (comp[e.a] == best) edges.emplace_back(remap[e.a], remap[e.b]);
    return Graph::from_edges(next_id, std::move(edges), std::move(labels));
}

}  // namespace linkeval
