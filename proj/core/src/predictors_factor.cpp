#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/IterativeLinearSolvers>

#include "linkeval/predictors.hpp"

namespace linkeval {

namespace {

Eigen::SparseMatrix<double> adjacency_matrix(const Graph& g) {
    const NodeId n = g.node_count();
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(2 * g.edge_count());
    for (NodeId v = 0; v < n; ++v)
        for (NodeId u : g.neighbors(v)) trip.emplace_back(int(v), int(u), 1.0);
    Eigen::SparseMatrix<double> a(n, n);
    a.setFromTriplets(trip.begin(), trip.end());
    return a;
}

// I + alpha * (D - A)
Eigen::SparseMatrix<double> regularized_laplacian(const Graph& g, double alpha) {
    const NodeId n = g.node_count();
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(2 * g.edge_count() + n);
    for (NodeId v = 0; v < n; ++v) {
        trip.emplace_back(int(v), int(v), 1.0 + alpha * double(g.degree(v)));
        for (NodeId u : g.neighbors(v)) trip.emplace_back(int(v), int(u), -alpha);
    }
    Eigen::SparseMatrix<double> m(n, n);
    m.setFromTriplets(trip.begin(), trip.end());
    return m;
}

}  // namespace

ScoreTable mfi_scores(const Graph& train, std::span<const NodePair> queries, double alpha,
                      NodeId dense_limit) {
    if (!(alpha > 0)) throw std::invalid_argument("mfi: alpha must be positive");
    const NodeId n = train.node_count();
    if (n == 0) throw std::invalid_argument("mfi: empty graph");

    ScoreTable out;
    out.predictor_id = "mfi";
    out.config.algorithm = "mfi";
    out.config.params = {{"alpha", alpha}};
    out.pairs.assign(queries.begin(), queries.end());
    out.scores.resize(queries.size());

    // group queries by column so each column is solved once
    std::unordered_map<NodeId, std::vector<std::size_t>> by_col;
    for (std::size_t i = 0; i < queries.size(); ++i) by_col[queries[i].b].push_back(i);

    if (n <= dense_limit) {
        Eigen::MatrixXd m = Eigen::MatrixXd(regularized_laplacian(train, alpha));
        Eigen::LLT<Eigen::MatrixXd> llt(m);
        if (llt.info() != Eigen::Success)
            throw std::runtime_error("mfi: Cholesky factorization failed");
        if (by_col.size() * 4 >= std::size_t(n)) {
            const Eigen::MatrixXd inv = llt.solve(Eigen::MatrixXd::Identity(n, n));
            for (std::size_t i = 0; i < queries.size(); ++i)
                out.scores[i] = inv(queries[i].a, queries[i].b);
        } else {
            Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
            for (const auto& [col, idxs] : by_col) {
                e[col] = 1.0;
                const Eigen::VectorXd x = llt.solve(e);
                e[col] = 0.0;
                for (std::size_t i : idxs) out.scores[i] = x[queries[i].a];
            }
        }
    } else {
        const auto m = regularized_laplacian(train, alpha);
        Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper> cg;
        cg.setTolerance(1e-12);
        cg.compute(m);
        Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
        for (const auto& [col, idxs] : by_col) {
            e[col] = 1.0;
            const Eigen::VectorXd x = cg.solve(e);
            if (cg.info() != Eigen::Success)
                throw std::runtime_error("mfi: conjugate-gradient solve failed");
            e[col] = 0.0;
            for (std::size_t i : idxs) out.scores[i] = x[queries[i].a];
        }
    }
    out.validate();
    return out;
}

namespace {

constexpr double kNmfEps = 1e-12;

template <class MatA>
NmfFactors nmf_core(const MatA& a, std::size_t rows, std::size_t cols, std::size_t rank,
                    int iterations, std::uint64_t seed) {
    if (rank == 0) throw std::invalid_argument("nmf: rank must be positive");
    if (iterations < 1) throw std::invalid_argument("nmf: need at least one iteration");

    std::mt19937_64 rng(seed);
    Eigen::MatrixXd w(rows, rank), h(rank, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < rank; ++k) w(i, k) = unit_real(rng) + kNmfEps;
    for (std::size_t k = 0; k < rank; ++k)
        for (std::size_t j = 0; j < cols; ++j) h(k, j) = unit_real(rng) + kNmfEps;

    const double a_sq = a.squaredNorm();
    NmfFactors out;
    out.rows = rows;
    out.cols = cols;
    out.rank = rank;
    out.errors.reserve(iterations);

    for (int it = 0; it < iterations; ++it) {
        // H <- H .* (W'A) ./ (W'W H + eps)
        const Eigen::MatrixXd wta = (a.transpose() * w).transpose();
        const Eigen::MatrixXd wtw = w.transpose() * w;
        h.array() *= wta.array() / ((wtw * h).array() + kNmfEps);
        // W <- W .* (A H') ./ (W H H' + eps)
        const Eigen::MatrixXd aht = a * h.transpose();
        const Eigen::MatrixXd hht = h * h.transpose();
        w.array() *= aht.array() / ((w * hht).array() + kNmfEps);

        const double inner = ((a.transpose() * w).cwiseProduct(h.transpose())).sum();
        const double wh_sq = ((w.transpose() * w).cwiseProduct(h * h.transpose())).sum();
        out.errors.push_back(std::max(0.0, a_sq - 2.0 * inner + wh_sq));
    }

    if (!w.allFinite() || !h.allFinite())
        throw std::runtime_error("nmf: factors diverged to non-finite values");

    out.w.assign(rows * rank, 0.0);
    out.h.assign(rank * cols, 0.0);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < rank; ++k) out.w[i * rank + k] = w(i, k);
    for (std::size_t k = 0; k < rank; ++k)
        for (std::size_t j = 0; j < cols; ++j) out.h[k * cols + j] = h(k, j);
    return out;
}

}  // namespace

NmfFactors nmf_factorize(const std::vector<double>& a, std::size_t rows, std::size_t cols,
                         std::size_t rank, int iterations, std::uint64_t seed) {
    if (a.size() != rows * cols) throw std::invalid_argument("nmf: matrix size mismatch");
    Eigen::MatrixXd m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            const double v = a[i * cols + j];
            if (v < 0.0) throw std::invalid_argument("nmf: negative entry");
            m(i, j) = v;
        }
    return nmf_core(m, rows, cols, rank, iterations, seed);
}

ScoreTable nmf_scores(const Graph& train, std::span<const NodePair> queries,
                      const NmfOptions& opts) {
    const NodeId n = train.node_count();
    if (opts.rank < 1 || NodeId(opts.rank) > n)
        throw std::invalid_argument("nmf: rank must be in [1, n]");
    const auto factors =
        nmf_core(adjacency_matrix(train), n, n, std::size_t(opts.rank), opts.iterations, opts.seed);

    ScoreTable out;
    out.predictor_id = "nmf";
    out.config.algorithm = "nmf";
    out.config.params = {{"dimensions", double(opts.rank)}, {"iterations", double(opts.iterations)}};
    out.config.seed = opts.seed;
    out.pairs.assign(queries.begin(), queries.end());
    out.scores.reserve(queries.size());
    const std::size_t k = factors.rank;
    for (const auto& q : queries) {
        double s = 0.0;
        for (std::size_t r = 0; r < k; ++r)
            s += factors.w[std::size_t(q.a) * k + r] * factors.h[r * n + q.b];
        out.scores.push_back(s);
    }
    out.validate();
    return out;
}

}  // namespace linkeval
