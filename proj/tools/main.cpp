// Command-line front end: ingest -> features -> evaluate -> stats/rsc -> report
// over a corpus manifest, plus a synthetic-corpus generator.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "linkeval/pipeline.hpp"

namespace fs = std::filesystem;
using namespace linkeval;

namespace {

ExternalScorerSpec parse_external(const std::string& arg) {
    const auto eq = arg.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == arg.size())
        throw CLI::ValidationError("--external-scorer expects name=path-template");
    return {arg.substr(0, eq), arg.substr(eq + 1)};
}

SynthDomainSpec parse_domain_spec(const std::string& arg) {
    // label=family:key=value:...  e.g. social=ws:count=6:n=80:k=6:beta=0.1
    const auto eq = arg.find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("--domain expects label=family[:k=v...]");
    SynthDomainSpec spec;
    spec.domain = arg.substr(0, eq);
    std::string rest = arg.substr(eq + 1);
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (pos <= rest.size()) {
        const auto colon = rest.find(':', pos);
        parts.push_back(rest.substr(pos, colon == std::string::npos ? colon : colon - pos));
        if (colon == std::string::npos) break;
        pos = colon + 1;
    }
    if (parts.empty() || parts[0].empty())
        throw CLI::ValidationError("--domain: missing family (er, ba, ws)");
    spec.family = synth_family_from_string(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const auto kv = parts[i].find('=');
        if (kv == std::string::npos)
            throw CLI::ValidationError("--domain: bad option '" + parts[i] + "'");
        const std::string key = parts[i].substr(0, kv);
        const double value = std::stod(parts[i].substr(kv + 1));
        if (key == "count") spec.count = std::size_t(value);
        else if (key == "n") spec.nodes = NodeId(value);
        else if (key == "p") spec.edge_prob = value;
        else if (key == "m0") spec.attach_edges = NodeId(value);
        else if (key == "k") spec.ring_neighbors = NodeId(value);
        else if (key == "beta") spec.rewire_prob = value;
        else throw CLI::ValidationError("--domain: unknown option '" + key + "'");
    }
    return spec;
}

void write_config_snapshot(const CLI::App& app, const std::string& out_dir) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) return;
    std::ofstream snap(fs::path(out_dir) / "config_snapshot.txt");
    snap << app.config_to_str(true, false);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"domain-informed link prediction evaluation"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "key=value config file; command-line flags override it");

    RunConfig cfg;
    std::vector<std::string> external_args;
    app.add_option("--manifest", cfg.manifest_path, "corpus manifest (CSV or JSON)");
    app.add_option("--out", cfg.out_dir, "output directory")->capture_default_str();
    app.add_option("--results-dir", cfg.results_dir, "result store directory (default <out>/results)");
    app.add_option("--cache-dir", cfg.cache_dir, "derived-artifact cache (default <out>/cache)");
    app.add_option("--seed", cfg.eval.seed_base, "base seed for splits and statistics")
        ->capture_default_str();
    app.add_option("--repeats", cfg.eval.repeats, "independent splits per network")
        ->capture_default_str();
    app.add_option("--workers", cfg.workers, "parallel evaluation workers")->capture_default_str();
    app.add_option("--algorithms", cfg.algorithms, "roster, comma separated (default: all native)")
        ->delimiter(',');
    app.add_option("--external-scorer", external_args,
                   "register an external scorer as name=path-template; {network} and {seed} are "
                   "substituted per task")
        ->take_all();

    auto* ingest = app.add_subcommand("ingest", "validate and canonicalize the corpus");
    auto* features = app.add_subcommand("features", "emit per-network topology features CSV");
    auto* evaluate =
        app.add_subcommand("evaluate", "run split/train/score/evaluate rounds (resumable)");
    evaluate->add_option("--max-tasks", cfg.max_tasks,
                         "stop after this many executed tasks (testing hook)");
    evaluate->add_flag("--dump-splits", cfg.dump_splits,
                       "serialize splits under the cache dir for external scorers");
    auto* stats = app.add_subcommand("stats", "consistency, winner score, PCA and permutation CSVs");
    stats->add_option("--permutations", cfg.permutations, "label permutations")
        ->capture_default_str();
    auto* rsc = app.add_subcommand("rsc", "ranking stability curves per domain");
    rsc->add_option("--trials", cfg.rsc_trials, "samples per L")->capture_default_str();
    rsc->add_option("--threshold", cfg.rsc_threshold, "stability threshold")->capture_default_str();
    auto* report = app.add_subcommand("report", "consolidate results and write all artifacts");

    auto* synth = app.add_subcommand("synth", "generate a seeded synthetic corpus");
    std::vector<std::string> domain_args;
    synth
        ->add_option("--domain", domain_args,
                     "domain spec label=family[:count=..][:n=..][:p=..][:m0=..][:k=..][:beta=..]; "
                     "families er, ba, ws")
        ->required()
        ->take_all();

    CLI11_PARSE(app, argc, argv);

    try {
        std::vector<ExternalScorerSpec> ext;
        for (const auto& a : external_args) ext.push_back(parse_external(a));
        cfg.external_scorers = ext;

        if (synth->parsed()) {
            std::vector<SynthDomainSpec> specs;
            for (const auto& a : domain_args) specs.push_back(parse_domain_spec(a));
            const auto manifest = generate_synthetic_corpus(specs, cfg.eval.seed_base, cfg.out_dir);
            std::cout << "wrote " << manifest.size() << " networks and manifest.csv under "
                      << cfg.out_dir << "\n";
            return 0;
        }

        if (cfg.manifest_path.empty()) {
            std::cerr << "error: --manifest is required\n";
            return 2;
        }
        write_config_snapshot(app, cfg.out_dir);

        if (ingest->parsed()) {
            const auto outcome = run_ingest(cfg);
            for (const auto& n : outcome.networks) {
                std::cout << n.network_id << " (" << n.domain << "): n=" << n.nodes
                          << " m=" << n.edges << " hash=" << n.content_hash;
                if (n.dropped_self_loops || n.dropped_duplicates)
                    std::cout << " dropped={" << n.dropped_duplicates << " duplicate, "
                              << n.dropped_self_loops << " self-loop}";
                if (n.ignored_weights)
                    std::cout << " warning: ignored " << n.ignored_weights << " edge weight(s)";
                std::cout << "\n";
            }
            std::cout << "domains:";
            for (const auto& [domain, count] : outcome.domain_counts)
                std::cout << ' ' << domain << '=' << count;
            std::cout << "\n";
            return 0;
        }
        if (features->parsed()) {
            std::cout << "wrote " << run_features(cfg) << "\n";
            return 0;
        }
        if (evaluate->parsed()) {
            const auto outcome = run_evaluation(cfg);
            std::cout << "tasks: " << outcome.tasks_total << " total, " << outcome.tasks_run
                      << " run, " << outcome.tasks_skipped << " already complete, "
                      << outcome.tasks_failed << " failed\n";
            return outcome.complete ? 0 : 1;
        }
        if (stats->parsed()) {
            const auto outcome = run_stats(cfg);
            const auto rsc_outcome = run_rsc(cfg);
            for (const auto* o : {&outcome, &rsc_outcome})
                for (const auto& f : o->files_written)
                    std::cout << "wrote " << (fs::path(cfg.out_dir) / f).string() << "\n";
            for (const auto& gap : outcome.gaps) std::cerr << "missing: " << gap << "\n";
            return outcome.gaps.empty() ? 0 : 1;
        }
        if (rsc->parsed()) {
            const auto outcome = run_rsc(cfg);
            for (const auto& f : outcome.files_written)
                std::cout << "wrote " << (fs::path(cfg.out_dir) / f).string() << "\n";
            return outcome.gaps.empty() ? 0 : 1;
        }
        if (report->parsed()) {
            const auto outcome = emit_report(cfg);
            std::cout << "wrote " << outcome.summary_path << "\n";
            if (!outcome.complete) {
                std::cerr << "coverage incomplete; " << outcome.gaps.size()
                          << " missing cell(s), see summary\n";
                return 1;
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
