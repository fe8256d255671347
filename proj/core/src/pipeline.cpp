#include "linkeval/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "linkeval/features.hpp"
#include "linkeval/metrics.hpp"
#include "linkeval/stats.hpp"

namespace fs = std::filesystem;

namespace linkeval {

namespace {

const std::vector<std::string> kMetricNames = {"auc", "precision", "aupr", "ndcg"};

std::string hash_hex(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string sanitize_for_filename(const std::string& s) {
    std::string out;
    for (char c : s)
        out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') ? c : '_';
    return out;
}

void write_edge_file(const std::string& path, const Graph& g,
                     std::span<const NodePair> pairs) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    std::vector<NodePair> sorted(pairs.begin(), pairs.end());
    std::sort(sorted.begin(), sorted.end());
    for (const auto& p : sorted) out << g.label(p.a) << ' ' << g.label(p.b) << '\n';
}

/// Lazily loaded, shared, immutable graphs keyed by network id.
class GraphCache {
public:
    explicit GraphCache(const CorpusManifest& manifest) : manifest_(manifest) {}

    std::shared_ptr<const Graph> get(const std::string& network_id) {
        std::lock_guard lock(mu_);
        auto it = cache_.find(network_id);
        if (it != cache_.end()) return it->second;
        const ManifestEntry* e = manifest_.find(network_id);
        if (!e) throw std::runtime_error("unknown network '" + network_id + "'");
        auto g = std::make_shared<const Graph>(load_edge_list(manifest_.resolved_path(*e)));
        cache_.emplace(network_id, g);
        return g;
    }

private:
    const CorpusManifest& manifest_;
    std::mutex mu_;
    std::map<std::string, std::shared_ptr<const Graph>> cache_;
};

struct Task {
    std::size_t net = 0;
    std::size_t alg = 0;
    int repeat = 0;
};

}  // namespace

std::string RunConfig::resolved_results_dir() const {
    return results_dir.empty() ? (fs::path(out_dir) / "results").string() : results_dir;
}

std::string RunConfig::resolved_cache_dir() const {
    return cache_dir.empty() ? (fs::path(out_dir) / "cache").string() : cache_dir;
}

AlgorithmRegistry build_registry(const RunConfig& cfg) {
    auto reg = AlgorithmRegistry::with_native_defaults();
    for (const auto& ext : cfg.external_scorers)
        reg.register_external({ext.name, ext.path_template});
    return reg;
}

std::vector<std::string> resolve_roster(const RunConfig& cfg, const AlgorithmRegistry& reg) {
    for (const auto& id : cfg.algorithms)
        if (!reg.contains(id)) throw std::runtime_error("unknown algorithm in roster: '" + id + "'");
    std::vector<std::string> roster;
    for (const auto& id : reg.ids()) {
        const bool wanted = cfg.algorithms.empty()
                                ? !std::holds_alternative<ExternalScorer>(reg.at(id))
                                : std::find(cfg.algorithms.begin(), cfg.algorithms.end(), id) !=
                                      cfg.algorithms.end();
        if (wanted) roster.push_back(id);
    }
    if (roster.empty()) throw std::runtime_error("empty algorithm roster");
    return roster;
}

IngestOutcome run_ingest(const RunConfig& cfg) {
    const auto manifest = CorpusManifest::load(cfg.manifest_path);
    const fs::path graph_cache = fs::path(cfg.resolved_cache_dir()) / "graphs";
    fs::create_directories(graph_cache);

    IngestOutcome out;
    for (const auto& e : manifest.entries()) {
        ParseReport rep;
        const Graph g = load_edge_list(manifest.resolved_path(e), {}, &rep);
        IngestOutcome::NetworkInfo info;
        info.network_id = e.network_id;
        info.domain = e.domain;
        info.nodes = g.node_count();
        info.edges = g.edge_count();
        info.dropped_self_loops = rep.dropped_self_loops;
        info.dropped_duplicates = rep.dropped_duplicates;
        info.ignored_weights = rep.ignored_weights;
        info.content_hash = hash_hex(g.content_hash());
        const fs::path canonical = graph_cache / (info.content_hash + ".edges");
        if (!fs::exists(canonical)) {
            std::ofstream f(canonical, std::ios::binary);
            f << g.canonical_edge_list();
        }
        out.networks.push_back(std::move(info));
    }
    out.domain_counts = manifest.domain_counts();
    return out;
}

std::string run_features(const RunConfig& cfg) {
    const auto manifest = CorpusManifest::load(cfg.manifest_path);
    const fs::path feature_cache = fs::path(cfg.resolved_cache_dir()) / "features";
    const fs::path lcc_cache = fs::path(cfg.resolved_cache_dir()) / "lcc";
    fs::create_directories(feature_cache);
    fs::create_directories(lcc_cache);
    fs::create_directories(cfg.out_dir);

    const std::string csv_path = (fs::path(cfg.out_dir) / "features.csv").string();
    std::ofstream csv(csv_path, std::ios::binary);
    if (!csv) throw std::runtime_error("cannot write " + csv_path);
    csv << "network_id,domain,diameter,entropy,clustering,modularity,avg_distance,density,"
           "estimated_flags\n";

    for (const auto& e : manifest.entries()) {
        const Graph g = load_edge_list(manifest.resolved_path(e));
        const std::string hash = hash_hex(g.content_hash());
        const fs::path cached = feature_cache / (hash + ".json");

        TopologyFeatureSet f;
        bool from_cache = false;
        if (fs::exists(cached)) {
            std::ifstream in(cached);
            nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
            if (doc.is_object()) {
                f.diameter = doc.value("diameter", 0u);
                f.degree_entropy = doc.value("entropy", 0.0);
                f.clustering = doc.value("clustering", 0.0);
                f.modularity = doc.value("modularity", 0.0);
                f.avg_distance = doc.value("avg_distance", 0.0);
                f.density = doc.value("density", 0.0);
                f.distances_estimated = doc.value("distances_estimated", false);
                f.degenerate_distance = doc.value("degenerate_distance", false);
                f.degenerate_clustering = doc.value("degenerate_clustering", false);
                from_cache = true;
            }
        }
        if (!from_cache) {
            FeatureOptions opts;
            opts.seed = cfg.eval.seed_base;
            f = topology_features(g, opts);
            const fs::path lcc_file = lcc_cache / (hash + ".edges");
            if (!fs::exists(lcc_file)) {
                std::ofstream lf(lcc_file, std::ios::binary);
                lf << largest_connected_component(g).canonical_edge_list();
            }
            nlohmann::ordered_json doc;
            doc["diameter"] = f.diameter;
            doc["entropy"] = f.degree_entropy;
            doc["clustering"] = f.clustering;
            doc["modularity"] = f.modularity;
            doc["avg_distance"] = f.avg_distance;
            doc["density"] = f.density;
            doc["distances_estimated"] = f.distances_estimated;
            doc["degenerate_distance"] = f.degenerate_distance;
            doc["degenerate_clustering"] = f.degenerate_clustering;
            std::ofstream fout(cached, std::ios::binary);
            fout << doc.dump(2) << '\n';
        }

        std::string flags;
        for (const auto& t : f.flags()) {
            if (!flags.empty()) flags += ';';
            flags += t;
        }
        csv << e.network_id << ',' << e.domain << ',' << f.diameter << ','
            << format_double(f.degree_entropy) << ',' << format_double(f.clustering) << ','
            << format_double(f.modularity) << ',' << format_double(f.avg_distance) << ','
            << format_double(f.density) << ',' << flags << '\n';
    }
    return csv_path;
}

namespace {

void dump_split_files(const RunConfig& cfg, const Graph& g, const std::string& network_id,
                      const SplitSample& split) {
    const fs::path dir =
        fs::path(cfg.resolved_cache_dir()) / "splits" / network_id / std::to_string(split.seed);
    fs::create_directories(dir);
    write_edge_file((dir / "train.edges").string(), g, split.train_edges);
    write_edge_file((dir / "validation.edges").string(), g, split.validation_edges);
    write_edge_file((dir / "probe.edges").string(), g, split.probe_edges);
    write_edge_file((dir / "negatives.edges").string(), g, split.negatives);
    write_edge_file((dir / "validation_negatives.edges").string(), g, split.validation_negatives);
}

/// One (network, algorithm, repeat) round: split, traverse when the grid has
/// options, retrain on E^T u E^V, score probe vs negatives, store metrics.
void run_task(const RunConfig& cfg, const AlgorithmRegistry& reg, GraphCache& graphs,
              ResultStore& store, const std::string& network_id, const std::string& algorithm,
              int repeat, bool dump_this_split) {
    const std::uint64_t split_seed = cfg.eval.seed_base + std::uint64_t(repeat);
    const auto g = graphs.get(network_id);
    const SplitSample split = make_split(*g, split_seed);
    if (dump_this_split) dump_split_files(cfg, *g, network_id, split);

    std::vector<NodePair> queries(split.probe_edges.begin(), split.probe_edges.end());
    queries.insert(queries.end(), split.negatives.begin(), split.negatives.end());

    ScoreTable table;
    const auto& entry = reg.at(algorithm);
    if (const auto* ext = std::get_if<ExternalScorer>(&entry)) {
        table = ingest_external_scores(ext->resolve(network_id, split_seed), *g, queries);
    } else {
        const auto& predictor = *std::get<std::shared_ptr<Predictor>>(entry);
        PredictorConfig chosen;
        const auto grid = predictor.grid();
        if (grid.size() > 1) {
            chosen = traverse_hyperparameters(predictor, *g, split, cfg.eval).chosen;
        } else {
            chosen = grid.at(0);
        }
        chosen.seed = mix_seed(split_seed, hash_string(algorithm));
        const Graph final_train = edge_subgraph(
            *g, [&] {
                std::vector<NodePair> merged(split.train_edges.begin(), split.train_edges.end());
                merged.insert(merged.end(), split.validation_edges.begin(),
                              split.validation_edges.end());
                return merged;
            }());
        table = predictor.score(final_train, queries, chosen);
    }

    LabeledScores ls;
    ls.positives.assign(table.scores.begin(), table.scores.begin() + split.probe_edges.size());
    ls.negatives.assign(table.scores.begin() + split.probe_edges.size(), table.scores.end());

    AucOptions auc_opts;
    auc_opts.exact_pair_limit = cfg.eval.exact_auc_pair_limit;
    auc_opts.sample_pairs = cfg.eval.auc_sample_pairs;
    auc_opts.seed = mix_seed(split_seed, hash_string(network_id), hash_string(algorithm));
    const MetricReport rep = evaluate_scores(ls, auc_opts);

    store.append({network_id, algorithm, split_seed, "auc", rep.auc});
    store.append({network_id, algorithm, split_seed, "precision", rep.precision});
    store.append({network_id, algorithm, split_seed, "aupr", rep.aupr});
    store.append({network_id, algorithm, split_seed, "ndcg", rep.ndcg});
}

}  // namespace

EvaluationOutcome run_evaluation(const RunConfig& cfg) {
    const auto manifest = CorpusManifest::load(cfg.manifest_path);
    const auto reg = build_registry(cfg);
    const auto roster = resolve_roster(cfg, reg);
    fs::create_directories(cfg.out_dir);

    ResultStore store(cfg.resolved_results_dir());
    GraphCache graphs(manifest);

    EvaluationOutcome out;
    std::vector<Task> pending;
    for (std::size_t n = 0; n < manifest.size(); ++n)
        for (std::size_t a = 0; a < roster.size(); ++a)
            for (int r = 0; r < cfg.eval.repeats; ++r) {
                ++out.tasks_total;
                const auto& network = manifest.entries()[n].network_id;
                if (store.has_all(network, roster[a], cfg.eval.seed_base + std::uint64_t(r),
                                  kMetricNames)) {
                    ++out.tasks_skipped;
                    continue;
                }
                pending.push_back({n, a, r});
            }
    if (cfg.max_tasks > 0 && pending.size() > cfg.max_tasks) pending.resize(cfg.max_tasks);

    std::atomic<std::size_t> next{0};
    std::mutex failures_mu;
    std::mutex dump_mu;
    std::set<std::pair<std::size_t, int>> dump_claimed;  // one dump per (network, seed)
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= pending.size()) return;
            const Task& t = pending[i];
            const auto& network = manifest.entries()[t.net].network_id;
            bool dump_this_split = false;
            if (cfg.dump_splits) {
                std::lock_guard lock(dump_mu);
                dump_this_split = dump_claimed.insert({t.net, t.repeat}).second;
            }
            try {
                run_task(cfg, reg, graphs, store, network, roster[t.alg], t.repeat,
                         dump_this_split);
            } catch (const std::exception& e) {
                std::lock_guard lock(failures_mu);
                out.failures.push_back(network + "/" + roster[t.alg] + "/seed " +
                                       std::to_string(cfg.eval.seed_base + t.repeat) + ": " +
                                       e.what());
            }
        }
    };
    const std::size_t n_workers = std::max<std::size_t>(1, cfg.workers);
    if (n_workers == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (std::size_t i = 0; i < n_workers; ++i) threads.emplace_back(worker);
        for (auto& th : threads) th.join();
    }

    out.tasks_failed = out.failures.size();
    out.tasks_run = pending.size() - out.tasks_failed;

    out.complete = true;
    for (const auto& e : manifest.entries())
        for (const auto& alg : roster)
            for (int r = 0; r < cfg.eval.repeats && out.complete; ++r)
                if (!store.has_all(e.network_id, alg, cfg.eval.seed_base + std::uint64_t(r),
                                   kMetricNames))
                    out.complete = false;
    for (const auto& f : out.failures) std::cerr << "task failed: " << f << "\n";
    return out;
}

namespace {

struct StatsInputs {
    CorpusManifest manifest;
    std::vector<std::string> roster;
    std::vector<std::string> domains;  // sorted, only domains with >= 1 covered network
    std::map<std::string, std::vector<std::string>> covered;  // domain -> networks (manifest order)
    std::vector<std::string> gaps;
    std::map<std::pair<std::string, std::string>, double> mean_auc;
};

StatsInputs gather_stats_inputs(const RunConfig& cfg) {
    StatsInputs in;
    in.manifest = CorpusManifest::load(cfg.manifest_path);
    const auto reg = build_registry(cfg);
    in.roster = resolve_roster(cfg, reg);

    ResultStore store(cfg.resolved_results_dir());

    for (const auto& e : in.manifest.entries()) {
        bool full = true;
        for (const auto& alg : in.roster)
            for (int r = 0; r < cfg.eval.repeats; ++r)
                if (!store.has_all(e.network_id, alg, cfg.eval.seed_base + std::uint64_t(r),
                                   kMetricNames)) {
                    in.gaps.push_back(e.network_id + "/" + alg + "/seed " +
                                      std::to_string(cfg.eval.seed_base + r));
                    full = false;
                    r = cfg.eval.repeats;  // next algorithm
                }
        if (full) in.covered[e.domain].push_back(e.network_id);
    }
    for (const auto& [domain, networks] : in.covered) in.domains.push_back(domain);

    // average over exactly the configured seed range; the store may also hold
    // rounds from other seed bases
    std::map<std::pair<std::string, std::string>, std::pair<double, std::size_t>> acc;
    for (const auto& rec : store.query({})) {
        if (rec.metric != "auc") continue;
        if (rec.seed < cfg.eval.seed_base ||
            rec.seed >= cfg.eval.seed_base + std::uint64_t(cfg.eval.repeats))
            continue;
        if (std::find(in.roster.begin(), in.roster.end(), rec.algorithm) == in.roster.end())
            continue;
        auto& [sum, count] = acc[{rec.network, rec.algorithm}];
        sum += rec.value;
        ++count;
    }
    for (const auto& [key, sc] : acc) in.mean_auc[key] = sc.first / double(sc.second);
    return in;
}

std::ofstream open_csv(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

}  // namespace

StatsOutcome run_stats(const RunConfig& cfg) {
    const auto in = gather_stats_inputs(cfg);
    fs::create_directories(cfg.out_dir);
    StatsOutcome out;
    out.gaps = in.gaps;

    std::vector<RankMatrix> matrices;
    for (const auto& domain : in.domains)
        matrices.push_back(
            build_rank_matrix(domain, in.covered.at(domain), in.roster, in.mean_auc));

    // rank correlations need at least two algorithm columns
    const bool correlatable = in.roster.size() >= 2;

    // consistency.csv (intra entries need >= 2 networks; singletons are skipped)
    std::vector<RankMatrix> usable;
    for (auto& m : matrices)
        if (m.rows() >= 2) usable.push_back(m);
    if (correlatable && !usable.empty()) {
        const auto cm = consistency_matrix(usable);
        auto csv = open_csv(fs::path(cfg.out_dir) / "consistency.csv");
        csv << "domain";
        for (const auto& d : cm.domains) csv << ',' << d;
        csv << '\n';
        for (std::size_t p = 0; p < cm.domains.size(); ++p) {
            csv << cm.domains[p];
            for (std::size_t q = 0; q < cm.domains.size(); ++q)
                csv << ',' << format_double(cm.at(p, q));
            csv << '\n';
        }
        out.files_written.push_back("consistency.csv");
    }

    // winner_scores.csv
    {
        auto csv = open_csv(fs::path(cfg.out_dir) / "winner_scores.csv");
        csv << "domain,algorithm,winner_score,normalized_winner_score\n";
        for (const auto& m : matrices) {
            const auto ws = winner_scores(m);
            for (std::size_t l = 0; l < ws.algorithms.size(); ++l)
                csv << ws.domain << ',' << ws.algorithms[l] << ',' << format_double(ws.raw[l])
                    << ',' << format_double(ws.normalized[l]) << '\n';
            out.winners[m.domain] = ws.algorithms[ws.winner_index()];
        }
        out.files_written.push_back("winner_scores.csv");
    }

    // pca_coords.csv + permutation.csv
    std::vector<double> data;
    std::vector<std::string> ids, labels;
    for (const auto& m : matrices)
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (int r : m.row(i)) data.push_back(double(r));
            ids.push_back(m.networks[i]);
            labels.push_back(m.domain);
        }
    const std::size_t cols = in.roster.size();
    const std::size_t rows = ids.size();
    const std::size_t k = std::min<std::size_t>(3, cols);
    if (correlatable && rows >= k + 1) {
        const auto emb = pca_embed(data, rows, cols, k, ids, labels);
        auto csv = open_csv(fs::path(cfg.out_dir) / "pca_coords.csv");
        csv << "network_id,domain";
        for (std::size_t j = 0; j < k; ++j) csv << ",pc" << (j + 1);
        csv << '\n';
        for (std::size_t i = 0; i < rows; ++i) {
            csv << emb.network_ids[i] << ',' << emb.labels[i];
            for (std::size_t j = 0; j < k; ++j) csv << ',' << format_double(emb.coords[i * k + j]);
            csv << '\n';
        }
        out.files_written.push_back("pca_coords.csv");

        bool perm_ok = in.domains.size() >= 2;
        for (const auto& m : matrices) perm_ok = perm_ok && m.rows() >= 2;
        if (perm_ok) {
            const auto perm = permutation_test(emb, cfg.permutations,
                                               mix_seed(cfg.eval.seed_base, 0x7065726du));
            auto pcsv = open_csv(fs::path(cfg.out_dir) / "permutation.csv");
            pcsv << "domain,observed,null_mean,p_value\n";
            for (const auto& d : perm.domains)
                pcsv << d.domain << ',' << format_double(d.observed) << ','
                     << format_double(d.null_mean) << ',' << format_double(d.p_value) << '\n';
            out.files_written.push_back("permutation.csv");
        }
    }
    return out;
}

StatsOutcome run_rsc(const RunConfig& cfg) {
    const auto in = gather_stats_inputs(cfg);
    fs::create_directories(cfg.out_dir);
    StatsOutcome out;
    out.gaps = in.gaps;
    if (in.roster.size() < 2) return out;  // tau needs >= 2 algorithms
    for (const auto& domain : in.domains) {
        const auto& networks = in.covered.at(domain);
        if (networks.size() < 2) continue;
        const auto m = build_rank_matrix(domain, networks, in.roster, in.mean_auc);
        const auto curve =
            rsc_curve(m, cfg.rsc_trials, mix_seed(cfg.eval.seed_base, hash_string(domain)));
        const std::string file = "rsc_" + sanitize_for_filename(domain) + ".csv";
        auto csv = open_csv(fs::path(cfg.out_dir) / file);
        csv << "L,tau_bar\n";
        for (std::size_t L = 1; L <= curve.tau_bar.size(); ++L)
            csv << L << ',' << format_double(curve.tau_bar[L - 1]) << '\n';
        out.files_written.push_back(file);
        out.stability[domain] = curve.stable_at(cfg.rsc_threshold);
    }
    return out;
}

ReportOutcome emit_report(const RunConfig& cfg) {
    ReportOutcome out;
    ResultStore store(cfg.resolved_results_dir());
    out.consolidated_csv = store.consolidate();

    const auto stats = run_stats(cfg);
    const auto rsc = run_rsc(cfg);
    out.gaps = stats.gaps;
    out.complete = stats.gaps.empty();

    fs::create_directories(cfg.out_dir);
    out.summary_path = (fs::path(cfg.out_dir) / "summary.txt").string();
    std::ofstream sum(out.summary_path, std::ios::binary);
    sum << "domain-informed link prediction evaluation summary\n";
    sum << "===================================================\n\n";
    sum << "records: " << store.size() << " (consolidated to results.csv)\n\n";

    sum << "per-domain winner (normalized Winner Score):\n";
    for (const auto& [domain, winner] : stats.winners)
        sum << "  " << domain << ": " << winner << "\n";

    sum << "\nper-domain stability L* (smallest sample with RSC >= "
        << format_double(cfg.rsc_threshold) << "):\n";
    for (const auto& [domain, l] : rsc.stability) {
        sum << "  " << domain << ": ";
        if (l) sum << *l;
        else sum << "not reached";
        sum << "\n";
    }

    if (!out.complete) {
        sum << "\nINCOMPLETE coverage; missing cells:\n";
        for (const auto& gap : out.gaps) sum << "  " << gap << "\n";
    }
    return out;
}

int run_pipeline(const RunConfig& cfg) {
    const auto eval = run_evaluation(cfg);
    const auto report = emit_report(cfg);
    return (eval.complete && report.complete) ? 0 : 1;
}

}  // namespace linkeval
