#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

#include "linkeval/common.hpp"
#include "linkeval/stats.hpp"

namespace linkeval {

PcaEmbedding pca_embed(const std::vector<double>& data, std::size_t rows, std::size_t cols,
                       std::size_t k, std::vector<std::string> network_ids,
                       std::vector<std::string> labels) {
    if (data.size() != rows * cols) throw std::invalid_argument("pca: data size mismatch");
    if (k < 1 || k > cols) throw std::invalid_argument("pca: k must be in [1, cols]");
    if (rows < k + 1) throw std::invalid_argument("pca: need at least k + 1 rows");
    if (!network_ids.empty() && network_ids.size() != rows)
        throw std::invalid_argument("pca: network id count mismatch");
    if (!labels.empty() && labels.size() != rows)
        throw std::invalid_argument("pca: label count mismatch");

    Eigen::MatrixXd x(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) x(i, j) = data[i * cols + j];

    const Eigen::RowVectorXd mean = x.colwise().mean();
    x.rowwise() -= mean;
    const Eigen::MatrixXd cov = x.transpose() * x / double(rows - 1);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
    if (solver.info() != Eigen::Success) throw std::runtime_error("pca: eigensolver failed");

    // Eigen returns eigenvalues ascending; we want descending
    const auto& evals = solver.eigenvalues();
    const auto& evecs = solver.eigenvectors();

    PcaEmbedding out;
    out.dims = k;
    if (network_ids.empty()) {
        for (std::size_t i = 0; i < rows; ++i) out.network_ids.push_back(std::to_string(i));
    } else {
        out.network_ids = std::move(network_ids);
    }
    out.labels = labels.empty() ? std::vector<std::string>(rows) : std::move(labels);
    out.column_means.assign(mean.data(), mean.data() + cols);

    double total = 0.0;
    for (Eigen::Index j = 0; j < evals.size(); ++j) total += std::max(0.0, evals[j]);
    out.variance_ratios.resize(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        const double ev = std::max(0.0, evals[Eigen::Index(cols - 1 - j)]);
        out.variance_ratios[j] = total > 0.0 ? ev / total : 0.0;
    }

    Eigen::MatrixXd comps(cols, k);
    for (std::size_t j = 0; j < k; ++j) {
        Eigen::VectorXd v = evecs.col(Eigen::Index(cols - 1 - j));
        // sign convention: largest-magnitude loading positive
        Eigen::Index arg = 0;
        v.cwiseAbs().maxCoeff(&arg);
        if (v[arg] < 0) v = -v;
        comps.col(Eigen::Index(j)) = v;
    }

    const Eigen::MatrixXd projected = x * comps;
    out.coords.resize(rows * k);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < k; ++j) out.coords[i * k + j] = projected(i, j);
    out.components.resize(cols * k);
    for (std::size_t c = 0; c < cols; ++c)
        for (std::size_t j = 0; j < k; ++j) out.components[c * k + j] = comps(c, j);
    return out;
}

namespace {

std::vector<double> pairwise_distances(const PcaEmbedding& e) {
    const std::size_t n = e.rows();
    std::vector<double> dist(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto a = e.point(i);
            const auto b = e.point(j);
            double d2 = 0.0;
            for (std::size_t d = 0; d < e.dims; ++d) d2 += (a[d] - b[d]) * (a[d] - b[d]);
            const double d1 = std::sqrt(d2);
            dist[i * n + j] = d1;
            dist[j * n + i] = d1;
        }
    return dist;
}

double group_mean_distance(const std::vector<double>& dist, std::size_t n,
                           std::span<const std::size_t> members) {
    double sum = 0.0;
    for (std::size_t x = 0; x < members.size(); ++x)
        for (std::size_t y = x + 1; y < members.size(); ++y)
            sum += 2.0 * dist[members[x] * n + members[y]];
    return sum / (double(members.size()) * double(members.size() - 1));
}

}  // namespace

PermutationTestResult permutation_test(const PcaEmbedding& e, std::size_t permutations,
                                       std::uint64_t seed) {
    if (permutations < 1) throw std::invalid_argument("permutation test: need >= 1 permutation");
    const std::size_t n = e.rows();

    // domains in sorted order, each with its member rows
    std::map<std::string, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < n; ++i) groups[e.labels[i]].push_back(i);
    if (groups.size() < 2)
        throw std::invalid_argument("permutation test: need >= 2 domains");
    for (const auto& [domain, members] : groups)
        if (members.size() < 2)
            throw std::invalid_argument("permutation test: domain '" + domain +
                                        "' has fewer than 2 networks");

    const auto dist = pairwise_distances(e);

    PermutationTestResult out;
    out.permutations = permutations;
    out.global_mean_distance = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            out.global_mean_distance += 2.0 * dist[i * n + j];
    out.global_mean_distance /= double(n) * double(n - 1);

    for (const auto& [domain, members] : groups) {
        PermutationDomainResult r;
        r.domain = domain;
        r.observed = group_mean_distance(dist, n, members);
        r.null_values.reserve(permutations);
        out.domains.push_back(std::move(r));
    }

    std::mt19937_64 rng(seed);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::size_t> scratch;
    for (std::size_t b = 0; b < permutations; ++b) {
        for (std::size_t i = 0; i + 1 < n; ++i)
            std::swap(perm[i], perm[i + uniform_index(rng, n - i)]);
        std::size_t offset = 0;
        std::size_t gi = 0;
        for (const auto& [domain, members] : groups) {
            scratch.assign(perm.begin() + offset, perm.begin() + offset + members.size());
            offset += members.size();
            out.domains[gi].null_values.push_back(group_mean_distance(dist, n, scratch));
            ++gi;
        }
    }

    double grand = 0.0;
    std::size_t grand_count = 0;
    for (auto& dr : out.domains) {
        std::size_t not_above = 0;
        double mean = 0.0;
        for (double v : dr.null_values) {
            if (v <= dr.observed) ++not_above;
            mean += v;
        }
        dr.null_mean = mean / double(dr.null_values.size());
        dr.p_value = double(not_above + 1) / double(permutations + 1);
        grand += mean;
        grand_count += dr.null_values.size();
    }
    out.grand_null_mean = grand / double(grand_count);
    return out;
}

}  // namespace linkeval
