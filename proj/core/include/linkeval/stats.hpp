#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace linkeval {

/// Kendall's tau: (Nc - Nd) / C(m, 2). Pairs whose products are zero (ties
/// in either vector) count toward neither Nc nor Nd; the denominator stays
/// C(m, 2), so vectors with ties cannot reach +-1.
double kendall_tau(std::span<const double> a, std::span<const double> b);
double kendall_tau(std::span<const int> a, std::span<const int> b);

/// Per-domain matrix of per-network algorithm ranks (1..m per row).
struct RankMatrix {
    std::string domain;
    std::vector<std::string> networks;    // row ids
    std::vector<std::string> algorithms;  // column ids, registration order
    std::vector<int> ranks;               // row-major

    std::size_t rows() const { return networks.size(); }
    std::size_t cols() const { return algorithms.size(); }
    std::span<const int> row(std::size_t i) const {
        return {ranks.data() + i * cols(), cols()};
    }
};

/// Ranks algorithms 1..m per network by descending mean metric value; ties
/// resolve to the earlier-registered algorithm. Throws when a
/// (network, algorithm) cell is missing from `mean_metric`.
RankMatrix build_rank_matrix(
    const std::string& domain, const std::vector<std::string>& networks,
    const std::vector<std::string>& algorithms,
    const std::map<std::pair<std::string, std::string>, double>& mean_metric);

/// Mean Kendall tau over network pairs. Distinct domains: all rows(p) x
/// rows(q) cross pairs. Same domain (intra): ordered pairs i != j with
/// denominator u_p (u_p - 1); requires u_p >= 2.
double consistency(const RankMatrix& p, const RankMatrix& q);

struct ConsistencyMatrix {
    std::vector<std::string> domains;
    std::vector<double> values;  // row-major, symmetric
    double at(std::size_t p, std::size_t q) const { return values[p * domains.size() + q]; }
};

ConsistencyMatrix consistency_matrix(std::span<const RankMatrix> matrices);

struct WinnerScoreTable {
    std::string domain;
    std::vector<std::string> algorithms;
    std::vector<double> raw;         // W_l = mean over networks of 1/rank
    std::vector<double> normalized;  // raw / sum(raw), sums to 1
    std::size_t winner_index() const;
};

WinnerScoreTable winner_scores(const RankMatrix& m);

/// PCA of the stacked rank vectors (covariance of raw ranks, top-k
/// projection). Sign convention: each component's largest-magnitude loading
/// is positive. variance_ratios covers all `cols` components.
struct PcaEmbedding {
    std::size_t dims = 3;
    std::vector<std::string> network_ids;
    std::vector<std::string> labels;  // domain per row
    std::vector<double> coords;       // rows x dims, row-major
    std::vector<double> variance_ratios;
    std::vector<double> components;  // cols x dims, row-major (loading vectors)
    std::vector<double> column_means;

    std::size_t rows() const { return network_ids.size(); }
    std::span<const double> point(std::size_t i) const { return {coords.data() + i * dims, dims}; }
};

PcaEmbedding pca_embed(const std::vector<double>& data, std::size_t rows, std::size_t cols,
                       std::size_t k, std::vector<std::string> network_ids = {},
                       std::vector<std::string> labels = {});

/// Mean Euclidean distance over ordered pairs i != k within one domain.
double intra_domain_distance(const PcaEmbedding& e, const std::string& domain);

struct PermutationDomainResult {
    std::string domain;
    double observed = 0.0;
    double null_mean = 0.0;
    double p_value = 1.0;  // (#null <= observed + 1) / (B + 1)
    std::vector<double> null_values;
};

struct PermutationTestResult {
    std::vector<PermutationDomainResult> domains;
    double grand_null_mean = 0.0;       // pooled over domains and permutations
    double global_mean_distance = 0.0;  // closed-form mean over all point pairs
    std::size_t permutations = 0;
};

/// Label-permutation test of domain clustering in the embedding: each of B
/// permutations reshuffles labels preserving per-domain counts and records
/// the mean intra-class distance per pseudo-domain.
PermutationTestResult permutation_test(const PcaEmbedding& e, std::size_t permutations = 2000,
                                       std::uint64_t seed = 0);

/// Ranking stability: tau between mean ranks of L sampled networks and the
/// full-domain reference, averaged over `trials` without-replacement samples
/// per L.
struct RscCurve {
    std::string domain;
    std::vector<double> tau_bar;    // index L-1 holds tau-bar at sample size L
    std::vector<double> reference;  // per-algorithm mean rank over the domain
    std::size_t trials = 0;

    /// Smallest L with tau_bar >= threshold.
    std::optional<std::size_t> stable_at(double threshold = 0.9) const;
};

RscCurve rsc_curve(const RankMatrix& m, std::size_t trials = 100, std::uint64_t seed = 0);

}  // namespace linkeval
