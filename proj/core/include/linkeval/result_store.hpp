#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace linkeval {

class CorpusManifest;

struct ResultRecord {
    std::string network;
    std::string algorithm;
    std::uint64_t seed = 0;
    std::string metric;
    double value = 0.0;
};

struct ResultFilter {
    std::optional<std::string> domain;  // requires a manifest to resolve
    std::optional<std::string> algorithm;
    std::optional<std::string> network;
};

/// Append-only JSON-lines log of metric records plus an in-memory index,
/// consolidated on demand into a canonical CSV. Appends are serialized
/// through one mutex so parallel evaluation workers share a single writer.
class ResultStore {
public:
    /// Opens (and creates) `dir`, replaying any existing results.jsonl.
    /// A truncated trailing line (crash during append) is ignored.
    explicit ResultStore(std::string dir);

    /// Idempotent: a record whose key already exists is not re-appended;
    /// a differing value for an existing key keeps the first and is counted.
    void append(const ResultRecord& rec);

    bool has(const std::string& network, const std::string& algorithm, std::uint64_t seed,
             const std::string& metric) const;
    /// True when every metric in `metrics` is present for the triple.
    bool has_all(const std::string& network, const std::string& algorithm, std::uint64_t seed,
                 std::span<const std::string> metrics) const;

    /// Records matching every provided filter field. If a provided field
    /// value never occurs in the store, `unknown_filter` (when given) is set.
    std::vector<ResultRecord> query(const ResultFilter& filter,
                                    const CorpusManifest* manifest = nullptr,
                                    bool* unknown_filter = nullptr) const;

    /// Per (network, algorithm): mean of `metric` over all stored seeds.
    std::map<std::pair<std::string, std::string>, double> mean_metric(
        const std::string& metric) const;

    std::size_t size() const;
    std::size_t conflict_count() const;
    const std::string& dir() const { return dir_; }

    /// Writes results.csv (header network,algorithm,seed,metric,value; rows
    /// sorted by all key fields) and returns its path. Byte-deterministic for
    /// a given set of records.
    std::string consolidate() const;

private:
    std::string jsonl_path() const;

    mutable std::mutex mu_;
    std::string dir_;
    std::vector<ResultRecord> records_;                 // insertion order
    std::map<std::string, std::size_t> index_;          // key -> records_ position
    std::size_t conflicts_ = 0;
};

}  // namespace linkeval
