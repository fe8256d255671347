#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linkeval/corpus.hpp"
#include "linkeval/predictors.hpp"
#include "linkeval/result_store.hpp"
#include "linkeval/split.hpp"

namespace linkeval {

struct ExternalScorerSpec {
    std::string name;
    std::string path_template;  // {network} and {seed} placeholders
};

struct RunConfig {
    std::string manifest_path;
    std::string out_dir = "out";
    std::string results_dir;  // default <out>/results
    std::string cache_dir;    // default <out>/cache

    /// Roster: subset of registry ids; empty means every registered native.
    std::vector<std::string> algorithms;
    std::vector<ExternalScorerSpec> external_scorers;

    EvalConfig eval;
    std::size_t workers = 1;
    /// Testing hook: stop after this many executed tasks (0 = no limit),
    /// simulating an interrupted run.
    std::size_t max_tasks = 0;
    bool dump_splits = false;

    std::size_t permutations = 2000;
    std::size_t rsc_trials = 100;
    double rsc_threshold = 0.9;

    std::string resolved_results_dir() const;
    std::string resolved_cache_dir() const;
};

/// Registry with natives plus the configured external scorers; the roster is
/// validated against it.
AlgorithmRegistry build_registry(const RunConfig& cfg);
/// Roster in registration order (tie-break order for ranking).
std::vector<std::string> resolve_roster(const RunConfig& cfg, const AlgorithmRegistry& reg);

struct IngestOutcome {
    struct NetworkInfo {
        std::string network_id;
        std::string domain;
        NodeId nodes = 0;
        std::size_t edges = 0;
        std::size_t dropped_self_loops = 0;
        std::size_t dropped_duplicates = 0;
        std::size_t ignored_weights = 0;
        std::string content_hash;
    };
    std::vector<NetworkInfo> networks;
    std::map<std::string, std::size_t> domain_counts;
};

/// Validates and canonicalizes every corpus network; canonical edge lists
/// land in the cache under their content hash.
IngestOutcome run_ingest(const RunConfig& cfg);

/// Writes features.csv (one row per network, cached by content hash).
std::string run_features(const RunConfig& cfg);

struct EvaluationOutcome {
    std::size_t tasks_total = 0;
    std::size_t tasks_run = 0;
    std::size_t tasks_skipped = 0;  // already complete in the store
    std::size_t tasks_failed = 0;
    std::vector<std::string> failures;
    bool complete = false;  // full roster x corpus x repeats coverage
};

/// The evaluation phase: for every (network, algorithm, repeat) runs
/// split -> traverse -> retrain -> score -> metrics and stores auc,
/// precision, aupr, ndcg. Resumes from the result store: completed triples
/// are skipped.
EvaluationOutcome run_evaluation(const RunConfig& cfg);

struct StatsOutcome {
    std::vector<std::string> files_written;
    /// (network, algorithm) cells without full repeat coverage.
    std::vector<std::string> gaps;
    /// Per sorted domain: winner algorithm id (only for covered domains).
    std::map<std::string, std::string> winners;
    /// Per sorted domain: smallest L reaching the RSC threshold.
    std::map<std::string, std::optional<std::size_t>> stability;
};

/// Consistency matrix, winner scores, PCA + permutation artifacts.
StatsOutcome run_stats(const RunConfig& cfg);

/// RSC curves per domain (rsc_<domain>.csv).
StatsOutcome run_rsc(const RunConfig& cfg);

struct ReportOutcome {
    bool complete = false;
    std::vector<std::string> gaps;
    std::string summary_path;
    std::string consolidated_csv;
};

/// Consolidates the store and writes every declared stats artifact plus a
/// human-readable summary. Incomplete coverage yields a partial report with
/// an explicit gap list.
ReportOutcome emit_report(const RunConfig& cfg);

/// evaluate + report; returns a process exit status (nonzero when any
/// domain has incomplete coverage).
int run_pipeline(const RunConfig& cfg);

}  // namespace linkeval
