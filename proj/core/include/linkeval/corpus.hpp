#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "linkeval/graph.hpp"

namespace linkeval {

struct ManifestEntry {
    std::string network_id;
    std::string path;  // relative paths resolve against the manifest directory
    std::string domain;
};

/// The corpus of networks with domain labels.
class CorpusManifest {
public:
    CorpusManifest() = default;

    /// Load a CSV (`network_id,path,domain` header) or a JSON array of
    /// objects with those keys, chosen by file extension. Validates that ids
    /// are unique, domains non-empty, and every referenced file exists.
    static CorpusManifest load(const std::string& path);

    /// Validates ids/domains but not file existence (used by generators that
    /// just wrote the files).
    static CorpusManifest from_entries(std::vector<ManifestEntry> entries,
                                       std::string base_dir = {});

    const std::vector<ManifestEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    /// Distinct domain labels, sorted.
    std::vector<std::string> domains() const;
    /// u_p: number of networks per domain.
    std::map<std::string, std::size_t> domain_counts() const;

    const ManifestEntry* find(const std::string& network_id) const;
    std::string resolved_path(const ManifestEntry& e) const;

    void save_csv(const std::string& path) const;

private:
    std::vector<ManifestEntry> entries_;
    std::string base_dir_;
};

// --- synthetic corpus generation (test fixtures and demos) ---

enum class SynthFamily { ErdosRenyi, BarabasiAlbert, WattsStrogatz };

SynthFamily synth_family_from_string(const std::string& name);

struct SynthDomainSpec {
    std::string domain;
    SynthFamily family = SynthFamily::ErdosRenyi;
    std::size_t count = 1;
    NodeId nodes = 50;
    double edge_prob = 0.1;    // ER
    NodeId attach_edges = 2;   // BA: edges per new node
    NodeId ring_neighbors = 4; // WS: even lattice degree
    double rewire_prob = 0.1;  // WS
};

Graph erdos_renyi(NodeId n, double p, std::uint64_t seed);
Graph barabasi_albert(NodeId n, NodeId attach_edges, std::uint64_t seed);
Graph watts_strogatz(NodeId n, NodeId ring_neighbors, double rewire_prob, std::uint64_t seed);

/// Writes one canonical edge list per network under out_dir plus a
/// manifest.csv, deterministically for a given seed. Returns the manifest.
CorpusManifest generate_synthetic_corpus(const std::vector<SynthDomainSpec>& spec,
                                         std::uint64_t seed, const std::string& out_dir);

}  // namespace linkeval
