#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "linkeval/predictors.hpp"

namespace linkeval {

double PredictorConfig::param(const std::string& name, double fallback) const {
    for (const auto& [k, v] : params)
        if (k == name) return v;
    return fallback;
}

std::string PredictorConfig::to_string() const {
    std::ostringstream out;
    out << algorithm;
    for (const auto& [k, v] : params) {
        out << ' ' << k << '=' << v;
    }
    return out.str();
}

void ScoreTable::validate() const {
    if (pairs.size() != scores.size())
        throw std::runtime_error("score table: pair/score size mismatch");
    for (std::size_t i = 0; i < scores.size(); ++i)
        if (!std::isfinite(scores[i]))
            throw std::runtime_error("score table: non-finite score for pair index " +
                                     std::to_string(i));
}

ScoreTable ra_scores(const Graph& train, std::span<const NodePair> queries) {
    ScoreTable out;
    out.predictor_id = "ra";
    out.config.algorithm = "ra";
    out.pairs.assign(queries.begin(), queries.end());
    out.scores.reserve(queries.size());
    for (const auto& q : queries) {
        const auto na = train.neighbors(q.a);
        const auto nb = train.neighbors(q.b);
        double s = 0.0;
        auto it1 = na.begin();
        auto it2 = nb.begin();
        while (it1 != na.end() && it2 != nb.end()) {
            if (*it1 < *it2) ++it1;
            else if (*it2 < *it1) ++it2;
            else {
                s += 1.0 / double(train.degree(*it1));
                ++it1;
                ++it2;
            }
        }
        out.scores.push_back(s);
    }
    out.validate();
    return out;
}

ScoreTable ra3_scores(const Graph& train, std::span<const NodePair> queries) {
    ScoreTable out;
    out.predictor_id = "ra3";
    out.config.algorithm = "ra3";
    out.pairs.assign(queries.begin(), queries.end());
    out.scores.reserve(queries.size());

    const NodeId n = train.node_count();
    std::vector<double> inv_sqrt_deg(n, 0.0);
    for (NodeId v = 0; v < n; ++v) {
        const auto d = train.degree(v);
        if (d > 0) inv_sqrt_deg[v] = 1.0 / std::sqrt(double(d));
    }

    std::vector<char> near_b(n, 0);
    for (const auto& q : queries) {
        for (NodeId v : train.neighbors(q.b)) near_b[v] = 1;
        double s = 0.0;
        // walks q.a -> u -> v -> q.b
        for (NodeId u : train.neighbors(q.a)) {
            const double wu = inv_sqrt_deg[u];
            for (NodeId v : train.neighbors(u))
                if (near_b[v]) s += wu * inv_sqrt_deg[v];
        }
        for (NodeId v : train.neighbors(q.b)) near_b[v] = 0;
        out.scores.push_back(s);
    }
    out.validate();
    return out;
}

}  // namespace linkeval
