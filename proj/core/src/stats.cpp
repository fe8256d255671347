#include "linkeval/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "linkeval/common.hpp"

namespace linkeval {

double kendall_tau(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("kendall_tau: length mismatch");
    const std::size_t m = a.size();
    if (m < 2) throw std::invalid_argument("kendall_tau: need length >= 2");
    std::int64_t concordant = 0, discordant = 0;
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = j + 1; k < m; ++k) {
            const double prod = (a[j] - a[k]) * (b[j] - b[k]);
            if (prod > 0) ++concordant;
            else if (prod < 0) ++discordant;
        }
    const double pairs = double(m) * double(m - 1) / 2.0;
    return double(concordant - discordant) / pairs;
}

double kendall_tau(std::span<const int> a, std::span<const int> b) {
    std::vector<double> da(a.begin(), a.end()), db(b.begin(), b.end());
    return kendall_tau(std::span<const double>(da), std::span<const double>(db));
}

RankMatrix build_rank_matrix(
    const std::string& domain, const std::vector<std::string>& networks,
    const std::vector<std::string>& algorithms,
    const std::map<std::pair<std::string, std::string>, double>& mean_metric) {
    if (algorithms.empty()) throw std::invalid_argument("rank matrix: no algorithms");
    RankMatrix out;
    out.domain = domain;
    out.networks = networks;
    out.algorithms = algorithms;
    out.ranks.resize(networks.size() * algorithms.size());

    const std::size_t m = algorithms.size();
    std::vector<std::size_t> order(m);
    std::vector<double> values(m);
    for (std::size_t i = 0; i < networks.size(); ++i) {
        for (std::size_t l = 0; l < m; ++l) {
            auto it = mean_metric.find({networks[i], algorithms[l]});
            if (it == mean_metric.end())
                throw std::runtime_error("rank matrix: missing value for (" + networks[i] + ", " +
                                         algorithms[l] + ")");
            values[l] = it->second;
        }
        std::iota(order.begin(), order.end(), 0);
        // descending value; ties keep registration order
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t x, std::size_t y) { return values[x] > values[y]; });
        for (std::size_t r = 0; r < m; ++r) out.ranks[i * m + order[r]] = int(r + 1);
    }
    return out;
}

double consistency(const RankMatrix& p, const RankMatrix& q) {
    if (p.cols() != q.cols() || p.algorithms != q.algorithms)
        throw std::invalid_argument("consistency: algorithm columns differ");
    const bool intra = p.domain == q.domain;
    if (intra) {
        const std::size_t u = p.rows();
        if (u < 2) throw std::invalid_argument("consistency: intra-domain needs >= 2 networks");
        double sum = 0.0;
        for (std::size_t i = 0; i < u; ++i)
            for (std::size_t j = 0; j < u; ++j)
                if (i != j) sum += kendall_tau(p.row(i), p.row(j));
        return sum / (double(u) * double(u - 1));
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < q.rows(); ++j) sum += kendall_tau(p.row(i), q.row(j));
    return sum / (double(p.rows()) * double(q.rows()));
}

ConsistencyMatrix consistency_matrix(std::span<const RankMatrix> matrices) {
    ConsistencyMatrix out;
    for (const auto& m : matrices) out.domains.push_back(m.domain);
    const std::size_t d = matrices.size();
    out.values.assign(d * d, 0.0);
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = p; q < d; ++q) {
            const double r = consistency(matrices[p], matrices[q]);
            out.values[p * d + q] = r;
            out.values[q * d + p] = r;
        }
    return out;
}

WinnerScoreTable winner_scores(const RankMatrix& m) {
    if (m.rows() == 0) throw std::invalid_argument("winner score: empty rank matrix");
    WinnerScoreTable out;
    out.domain = m.domain;
    out.algorithms = m.algorithms;
    out.raw.assign(m.cols(), 0.0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const auto row = m.row(i);
        for (std::size_t l = 0; l < m.cols(); ++l) out.raw[l] += 1.0 / double(row[l]);
    }
    for (auto& w : out.raw) w /= double(m.rows());
    const double total = std::accumulate(out.raw.begin(), out.raw.end(), 0.0);
    out.normalized.resize(m.cols());
    for (std::size_t l = 0; l < m.cols(); ++l) out.normalized[l] = out.raw[l] / total;
    return out;
}

std::size_t WinnerScoreTable::winner_index() const {
    return std::size_t(std::max_element(normalized.begin(), normalized.end()) -
                       normalized.begin());
}

double intra_domain_distance(const PcaEmbedding& e, const std::string& domain) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < e.rows(); ++i)
        if (e.labels[i] == domain) members.push_back(i);
    if (members.size() < 2)
        throw std::invalid_argument("intra_domain_distance: need >= 2 networks in " + domain);
    double sum = 0.0;
    for (std::size_t x = 0; x < members.size(); ++x)
        for (std::size_t y = x + 1; y < members.size(); ++y) {
            const auto a = e.point(members[x]);
            const auto b = e.point(members[y]);
            double d2 = 0.0;
            for (std::size_t d = 0; d < e.dims; ++d) d2 += (a[d] - b[d]) * (a[d] - b[d]);
            sum += 2.0 * std::sqrt(d2);  // ordered pairs
        }
    return sum / (double(members.size()) * double(members.size() - 1));
}

std::optional<std::size_t> RscCurve::stable_at(double threshold) const {
    for (std::size_t i = 0; i < tau_bar.size(); ++i)
        if (tau_bar[i] >= threshold) return i + 1;
    return std::nullopt;
}

RscCurve rsc_curve(const RankMatrix& m, std::size_t trials, std::uint64_t seed) {
    const std::size_t u = m.rows();
    if (u < 2) throw std::invalid_argument("rsc: need >= 2 networks in domain");
    if (trials < 1) throw std::invalid_argument("rsc: need >= 1 trial");

    RscCurve out;
    out.domain = m.domain;
    out.trials = trials;

    const std::size_t cols = m.cols();
    out.reference.assign(cols, 0.0);
    for (std::size_t i = 0; i < u; ++i) {
        const auto row = m.row(i);
        for (std::size_t l = 0; l < cols; ++l) out.reference[l] += double(row[l]);
    }
    for (auto& r : out.reference) r /= double(u);

    out.tau_bar.resize(u);
    std::vector<std::size_t> indices(u);
    std::vector<double> mean_rank(cols);
    for (std::size_t L = 1; L <= u; ++L) {
        double acc = 0.0;
        for (std::size_t t = 0; t < trials; ++t) {
            // independent per-(L, trial) stream: result cannot depend on
            // evaluation order
            std::mt19937_64 rng(mix_seed(seed, L, t));
            std::iota(indices.begin(), indices.end(), 0);
            for (std::size_t i = 0; i < L; ++i)
                std::swap(indices[i], indices[i + uniform_index(rng, u - i)]);
            std::fill(mean_rank.begin(), mean_rank.end(), 0.0);
            for (std::size_t i = 0; i < L; ++i) {
                const auto row = m.row(indices[i]);
                for (std::size_t l = 0; l < cols; ++l) mean_rank[l] += double(row[l]);
            }
            for (auto& r : mean_rank) r /= double(L);
            acc += kendall_tau(std::span<const double>(mean_rank),
                               std::span<const double>(out.reference));
        }
        out.tau_bar[L - 1] = acc / double(trials);
    }
    return out;
}

}  // namespace linkeval
