#include "linkeval/result_store.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "json.hpp"

#include "linkeval/common.hpp"
#include "linkeval/corpus.hpp"

namespace fs = std::filesystem;

namespace linkeval {

namespace {

std::string record_key(const std::string& network, const std::string& algorithm,
                       std::uint64_t seed, const std::string& metric) {
    return network + '\x1f' + algorithm + '\x1f' + std::to_string(seed) + '\x1f' + metric;
}

}  // namespace

ResultStore::ResultStore(std::string dir) : dir_(std::move(dir)) {
    fs::create_directories(dir_);
    // a crash can leave the log without a trailing newline; terminate it so
    // the next append starts a fresh line
    if (fs::exists(jsonl_path()) && fs::file_size(jsonl_path()) > 0) {
        std::ifstream tail(jsonl_path(), std::ios::binary);
        tail.seekg(-1, std::ios::end);
        char last = '\n';
        tail.get(last);
        if (last != '\n') {
            std::ofstream fix(jsonl_path(), std::ios::app | std::ios::binary);
            fix << '\n';
        }
    }
    std::ifstream in(jsonl_path());
    if (!in) return;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        nlohmann::json doc = nlohmann::json::parse(line, nullptr, false);
        if (doc.is_discarded() || !doc.is_object()) {
            std::cerr << "result store: ignoring malformed line " << line_no << " in "
                      << jsonl_path() << "\n";
            continue;
        }
        try {
            ResultRecord rec{doc.at("network").get<std::string>(),
                             doc.at("algorithm").get<std::string>(),
                             doc.at("seed").get<std::uint64_t>(),
                             doc.at("metric").get<std::string>(),
                             doc.at("value").get<double>()};
            const auto key = record_key(rec.network, rec.algorithm, rec.seed, rec.metric);
            if (index_.emplace(key, records_.size()).second) records_.push_back(std::move(rec));
        } catch (const std::exception&) {
            std::cerr << "result store: ignoring incomplete record at line " << line_no << "\n";
        }
    }
}

std::string ResultStore::jsonl_path() const { return (fs::path(dir_) / "results.jsonl").string(); }

void ResultStore::append(const ResultRecord& rec) {
    std::lock_guard lock(mu_);
    const auto key = record_key(rec.network, rec.algorithm, rec.seed, rec.metric);
    auto it = index_.find(key);
    if (it != index_.end()) {
        if (records_[it->second].value != rec.value) ++conflicts_;
        return;  // keep first
    }
    nlohmann::ordered_json doc;
    doc["network"] = rec.network;
    doc["algorithm"] = rec.algorithm;
    doc["seed"] = rec.seed;
    doc["metric"] = rec.metric;
    doc["value"] = rec.value;
    std::ofstream out(jsonl_path(), std::ios::app);
    if (!out) throw std::runtime_error("result store: cannot append to " + jsonl_path());
    out << doc.dump() << '\n';
    out.flush();
    index_.emplace(key, records_.size());
    records_.push_back(rec);
}

bool ResultStore::has(const std::string& network, const std::string& algorithm,
                      std::uint64_t seed, const std::string& metric) const {
    std::lock_guard lock(mu_);
    return index_.count(record_key(network, algorithm, seed, metric)) > 0;
}

bool ResultStore::has_all(const std::string& network, const std::string& algorithm,
                          std::uint64_t seed, std::span<const std::string> metrics) const {
    std::lock_guard lock(mu_);
    for (const auto& m : metrics)
        if (!index_.count(record_key(network, algorithm, seed, m))) return false;
    return true;
}

std::vector<ResultRecord> ResultStore::query(const ResultFilter& filter,
                                             const CorpusManifest* manifest,
                                             bool* unknown_filter) const {
    std::lock_guard lock(mu_);
    if (filter.domain && !manifest)
        throw std::invalid_argument("result store: domain filter requires a manifest");

    bool net_seen = !filter.network.has_value();
    bool alg_seen = !filter.algorithm.has_value();
    std::vector<ResultRecord> out;
    for (const auto& rec : records_) {
        if (filter.network) {
            if (rec.network == *filter.network) net_seen = true;
            else continue;
        }
        if (filter.algorithm) {
            if (rec.algorithm == *filter.algorithm) alg_seen = true;
            else continue;
        }
        if (filter.domain) {
            const ManifestEntry* e = manifest->find(rec.network);
            if (!e || e->domain != *filter.domain) continue;
        }
        out.push_back(rec);
    }
    if (unknown_filter) *unknown_filter = !(net_seen && alg_seen);
    return out;
}

std::map<std::pair<std::string, std::string>, double> ResultStore::mean_metric(
    const std::string& metric) const {
    std::lock_guard lock(mu_);
    std::map<std::pair<std::string, std::string>, std::pair<double, std::size_t>> acc;
    for (const auto& rec : records_) {
        if (rec.metric != metric) continue;
        auto& [sum, count] = acc[{rec.network, rec.algorithm}];
        sum += rec.value;
        ++count;
    }
    std::map<std::pair<std::string, std::string>, double> out;
    for (const auto& [key, sc] : acc) out[key] = sc.first / double(sc.second);
    return out;
}

std::size_t ResultStore::size() const {
    std::lock_guard lock(mu_);
    return records_.size();
}

std::size_t ResultStore::conflict_count() const {
    std::lock_guard lock(mu_);
    return conflicts_;
}

std::string ResultStore::consolidate() const {
    std::vector<ResultRecord> sorted;
    {
        std::lock_guard lock(mu_);
        sorted = records_;
    }
    std::sort(sorted.begin(), sorted.end(), [](const ResultRecord& x, const ResultRecord& y) {
        if (x.network != y.network) return x.network < y.network;
        if (x.algorithm != y.algorithm) return x.algorithm < y.algorithm;
        if (x.seed != y.seed) return x.seed < y.seed;
        return x.metric < y.metric;
    });
    const std::string path = (fs::path(dir_) / "results.csv").string();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("result store: cannot write " + path);
    out << "network,algorithm,seed,metric,value\n";
    for (const auto& r : sorted)
        out << r.network << ',' << r.algorithm << ',' << r.seed << ',' << r.metric << ','
            << format_double(r.value) << '\n';
    return path;
}

}  // namespace linkeval
