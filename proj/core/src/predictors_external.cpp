#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "linkeval/predictors.hpp"

namespace linkeval {

std::string ExternalScorer::resolve(const std::string& network_id, std::uint64_t seed) const {
    std::string out = path_template;
    auto replace_all = [&out](const std::string& from, const std::string& to) {
        std::size_t pos = 0;
        while ((pos = out.find(from, pos)) != std::string::npos) {
            out.replace(pos, from.size(), to);
            pos += to.size();
        }
    };
    replace_all("{network}", network_id);
    replace_all("{seed}", std::to_string(seed));
    return out;
}

ScoreTable ingest_external_scores(const std::string& path, const Graph& g,
                                  std::span<const NodePair> expected) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("external scores: cannot open " + path);

    std::unordered_map<NodePair, double, NodePairHash> table;
    table.reserve(expected.size());

    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!header_seen) {  // exactly one header line
            header_seen = true;
            continue;
        }
        std::string fields[3];
        std::size_t field = 0;
        for (char c : line) {
            if (c == ',') {
                if (++field > 2)
                    throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                             ": expected 3 fields");
            } else {
                fields[field] += c;
            }
        }
        if (field != 2)
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": expected 3 fields");

        const auto ia = g.node_of_label(fields[0]);
        const auto ib = g.node_of_label(fields[1]);
        if (!ia || !ib)
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": unknown node id '" +
                                     (!ia ? fields[0] : fields[1]) + "'");
        double value = 0.0;
        try {
            std::size_t pos = 0;
            value = std::stod(fields[2], &pos);
            if (pos != fields[2].size()) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": bad score '" +
                                     fields[2] + "'");
        }
        if (!std::isfinite(value))
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": non-finite score");
        const NodePair p(*ia, *ib);
        if (!table.emplace(p, value).second)
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": duplicate pair '" +
                                     fields[0] + "," + fields[1] + "'");
    }

    ScoreTable out;
    out.predictor_id = "external";
    out.config.algorithm = "external";
    out.pairs.assign(expected.begin(), expected.end());
    out.scores.reserve(expected.size());
    std::vector<std::string> missing;
    for (const auto& p : expected) {
        auto it = table.find(p);
        if (it == table.end()) {
            if (missing.size() < 10)
                missing.push_back(g.label(p.a) + "," + g.label(p.b));
            continue;
        }
        out.scores.push_back(it->second);
    }
    if (!missing.empty()) {
        std::ostringstream msg;
        msg << path << ": missing scores for " << (expected.size() - out.scores.size())
            << " expected pair(s); first:";
        for (const auto& m : missing) msg << ' ' << m;
        throw std::runtime_error(msg.str());
    }
    out.validate();
    return out;
}

}  // namespace linkeval
