#include "linkeval/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "json.hpp"

namespace fs = std::filesystem;

namespace linkeval {

namespace {

void validate_entries(const std::vector<ManifestEntry>& entries) {
    std::unordered_set<std::string> seen;
    for (const auto& e : entries) {
        if (e.network_id.empty()) throw std::runtime_error("manifest: empty network_id");
        if (!seen.insert(e.network_id).second)
            throw std::runtime_error("manifest: duplicate network_id '" + e.network_id + "'");
        if (e.domain.empty())
            throw std::runtime_error("manifest: empty domain for network '" + e.network_id + "'");
        if (e.path.empty())
            throw std::runtime_error("manifest: empty path for network '" + e.network_id + "'");
    }
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

}  // namespace

CorpusManifest CorpusManifest::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open manifest: " + path);

    std::vector<ManifestEntry> entries;
    const std::string ext = fs::path(path).extension().string();
    if (ext == ".json") {
        nlohmann::json doc;
        try {
            in >> doc;
        } catch (const std::exception& e) {
            throw std::runtime_error("manifest JSON parse error in " + path + ": " + e.what());
        }
        if (!doc.is_array()) throw std::runtime_error("manifest JSON must be an array of objects");
        for (const auto& item : doc)
            entries.push_back({item.at("network_id").get<std::string>(),
                               item.at("path").get<std::string>(),
                               item.at("domain").get<std::string>()});
    } else {
        std::string line;
        std::size_t line_no = 0;
        bool header_seen = false;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty() || line == "\r") continue;
            auto fields = split_csv_line(line);
            if (!header_seen) {
                if (fields != std::vector<std::string>{"network_id", "path", "domain"})
                    throw std::runtime_error("manifest CSV must start with header "
                                             "'network_id,path,domain' (" + path + ")");
                header_seen = true;
                continue;
            }
            if (fields.size() != 3)
                throw std::runtime_error("manifest CSV line " + std::to_string(line_no) +
                                         ": expected 3 fields");
            entries.push_back({fields[0], fields[1], fields[2]});
        }
        if (!header_seen) throw std::runtime_error("manifest CSV is empty: " + path);
    }

    auto m = from_entries(std::move(entries), fs::path(path).parent_path().string());
    for (const auto& e : m.entries())
        if (!fs::exists(m.resolved_path(e)))
            throw std::runtime_error("manifest: missing file '" + m.resolved_path(e) +
                                     "' for network '" + e.network_id + "'");
    return m;
}

CorpusManifest CorpusManifest::from_entries(std::vector<ManifestEntry> entries,
                                            std::string base_dir) {
    validate_entries(entries);
    CorpusManifest m;
    m.entries_ = std::move(entries);
    m.base_dir_ = std::move(base_dir);
    return m;
}

std::vector<std::string> CorpusManifest::domains() const {
    std::set<std::string> ds;
    for (const auto& e : entries_) ds.insert(e.domain);
    return {ds.begin(), ds.end()};
}

std::map<std::string, std::size_t> CorpusManifest::domain_counts() const {
    std::map<std::string, std::size_t> counts;
    for (const auto& e : entries_) ++counts[e.domain];
    return counts;
}

const ManifestEntry* CorpusManifest::find(const std::string& network_id) const {
    for (const auto& e : entries_)
        if (e.network_id == network_id) return &e;
    return nullptr;
}

std::string CorpusManifest::resolved_path(const ManifestEntry& e) const {
    fs::path p(e.path);
    if (p.is_absolute() || base_dir_.empty()) return e.path;
    return (fs::path(base_dir_) / p).string();
}

void CorpusManifest::save_csv(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write manifest: " + path);
    out << "network_id,path,domain\n";
    for (const auto& e : entries_) out << e.network_id << ',' << e.path << ',' << e.domain << '\n';
}

// --- generators ---

SynthFamily synth_family_from_string(const std::string& name) {
    if (name == "er") return SynthFamily::ErdosRenyi;
    if (name == "ba") return SynthFamily::BarabasiAlbert;
    if (name == "ws") return SynthFamily::WattsStrogatz;
    throw std::invalid_argument("unknown synthetic family '" + name + "' (expected er, ba, ws)");
}

Graph erdos_renyi(NodeId n, double p, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("erdos_renyi: need n >= 2");
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("erdos_renyi: p must be in (0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<NodePair> edges;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j)
            if (unit_real(rng) < p) edges.emplace_back(i, j);
    return Graph::from_edges(n, std::move(edges));
}

Graph barabasi_albert(NodeId n, NodeId attach_edges, std::uint64_t seed) {
    if (attach_edges < 1) throw std::invalid_argument("barabasi_albert: attach_edges >= 1 required");
    if (n <= attach_edges) throw std::invalid_argument("barabasi_albert: need n > attach_edges");
    std::mt19937_64 rng(seed);
    std::vector<NodePair> edges;
    std::vector<NodeId> endpoints;  // one entry per half-edge; degree-proportional draws

    // seed clique on attach_edges + 1 nodes
    const NodeId core = attach_edges + 1;
    for (NodeId i = 0; i < core; ++i)
        for (NodeId j = i + 1; j < core; ++j) {
            edges.emplace_back(i, j);
            endpoints.push_back(i);
            endpoints.push_back(j);
        }
    for (NodeId v = core; v < n; ++v) {
        std::set<NodeId> targets;
        while (targets.size() < attach_edges)
            targets.insert(endpoints[uniform_index(rng, endpoints.size())]);
        for (NodeId t : targets) {
            edges.emplace_back(v, t);
            endpoints.push_back(v);
            endpoints.push_back(t);
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph watts_strogatz(NodeId n, NodeId ring_neighbors, double rewire_prob, std::uint64_t seed) {
    if (ring_neighbors < 2 || ring_neighbors % 2 != 0)
        throw std::invalid_argument("watts_strogatz: ring_neighbors must be even and >= 2");
    if (n <= ring_neighbors) throw std::invalid_argument("watts_strogatz: need n > ring_neighbors");
    if (rewire_prob < 0.0 || rewire_prob > 1.0)
        throw std::invalid_argument("watts_strogatz: rewire_prob must be in [0, 1]");
    std::mt19937_64 rng(seed);

    std::set<NodePair> edge_set;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId k = 1; k <= ring_neighbors / 2; ++k)
            edge_set.insert(NodePair(i, NodeId((i + k) % n)));

    // rewire the far endpoint of each lattice edge with probability beta
    for (NodeId i = 0; i < n; ++i)
        for (NodeId k = 1; k <= ring_neighbors / 2; ++k) {
            const NodePair old(i, NodeId((i + k) % n));
            if (!edge_set.count(old)) continue;  // already rewired away
            if (unit_real(rng) >= rewire_prob) continue;
            // draw a fresh target; give up after a bounded number of attempts
            for (int attempt = 0; attempt < 64; ++attempt) {
                NodeId t = NodeId(uniform_index(rng, n));
                if (t == i) continue;
                NodePair cand(i, t);
                if (edge_set.count(cand)) continue;
                edge_set.erase(old);
                edge_set.insert(cand);
                break;
            }
        }
    std::vector<NodePair> edges(edge_set.begin(), edge_set.end());
    return Graph::from_edges(n, std::move(edges));
}

namespace {

Graph generate_one(const SynthDomainSpec& s, std::uint64_t seed) {
    switch (s.family) {
        case SynthFamily::ErdosRenyi: return erdos_renyi(s.nodes, s.edge_prob, seed);
        case SynthFamily::BarabasiAlbert: return barabasi_albert(s.nodes, s.attach_edges, seed);
        case SynthFamily::WattsStrogatz:
            return watts_strogatz(s.nodes, s.ring_neighbors, s.rewire_prob, seed);
    }
    throw std::logic_error("unreachable");
}

}  // namespace

CorpusManifest generate_synthetic_corpus(const std::vector<SynthDomainSpec>& spec,
                                         std::uint64_t seed, const std::string& out_dir) {
    if (spec.empty()) throw std::invalid_argument("synthetic corpus: empty spec");
    fs::create_directories(out_dir);
    std::vector<ManifestEntry> entries;
    for (std::size_t d = 0; d < spec.size(); ++d) {
        const auto& s = spec[d];
        if (s.domain.empty()) throw std::invalid_argument("synthetic corpus: empty domain label");
        for (std::size_t i = 0; i < s.count; ++i) {
            const Graph g = generate_one(s, mix_seed(seed, d, i));
            const std::string id = s.domain + "_" + std::to_string(i);
            const std::string file = id + ".edges";
            std::ofstream out(fs::path(out_dir) / file, std::ios::binary);
            if (!out) throw std::runtime_error("cannot write " + file);
            out << g.canonical_edge_list();
            entries.push_back({id, file, s.domain});
        }
    }
    auto m = CorpusManifest::from_entries(std::move(entries), out_dir);
    m.save_csv((fs::path(out_dir) / "manifest.csv").string());
    return m;
}

}  // namespace linkeval
