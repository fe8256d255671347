#include <stdexcept>

#include "linkeval/predictors.hpp"

namespace linkeval {

namespace {

class RaPredictor final : public Predictor {
public:
    const std::string& id() const override {
        static const std::string name = "ra";
        return name;
    }
    std::vector<PredictorConfig> grid() const override { return {PredictorConfig{"ra", {}, 0}}; }
    ScoreTable score(const Graph& train, std::span<const NodePair> queries,
                     const PredictorConfig&) const override {
        return ra_scores(train, queries);
    }
};

class Ra3Predictor final : public Predictor {
public:
    const std::string& id() const override {
        static const std::string name = "ra3";
        return name;
    }
    std::vector<PredictorConfig> grid() const override { return {PredictorConfig{"ra3", {}, 0}}; }
    ScoreTable score(const Graph& train, std::span<const NodePair> queries,
                     const PredictorConfig&) const override {
        return ra3_scores(train, queries);
    }
};

class MfiPredictor final : public Predictor {
public:
    const std::string& id() const override {
        static const std::string name = "mfi";
        return name;
    }
    std::vector<PredictorConfig> grid() const override {
        return {PredictorConfig{"mfi", {{"alpha", 0.1}}, 0}};
    }
    ScoreTable score(const Graph& train, std::span<const NodePair> queries,
                     const PredictorConfig& cfg) const override {
        return mfi_scores(train, queries, cfg.param("alpha", 0.1));
    }
};

class NmfPredictor final : public Predictor {
public:
    const std::string& id() const override {
        static const std::string name = "nmf";
        return name;
    }
    std::vector<PredictorConfig> grid() const override {
        std::vector<PredictorConfig> g;
        for (double dim : {32.0, 64.0, 128.0})
            g.push_back(PredictorConfig{"nmf", {{"dimensions", dim}}, 0});
        return g;
    }
    ScoreTable score(const Graph& train, std::span<const NodePair> queries,
                     const PredictorConfig& cfg) const override {
        NmfOptions opts;
        opts.rank = int(cfg.param("dimensions", 64));
        opts.iterations = int(cfg.param("iterations", 200));
        opts.seed = cfg.seed;
        return nmf_scores(train, queries, opts);
    }
};

class DeepWalkPredictor final : public Predictor {
public:
    const std::string& id() const override {
        static const std::string name = "deepwalk";
        return name;
    }
    std::vector<PredictorConfig> grid() const override {
        std::vector<PredictorConfig> g;
        for (double wl : {40.0, 80.0})
            for (double wn : {10.0, 80.0})
                for (double dim : {32.0, 64.0, 128.0})
                    for (double win : {5.0, 10.0})
                        g.push_back(PredictorConfig{"deepwalk",
                                                    {{"walk_length", wl},
                                                     {"walks_per_node", wn},
                                                     {"dimensions", dim},
                                                     {"window", win}},
                                                    0});
        return g;
    }
    ScoreTable score(const Graph& train, std::span<const NodePair> queries,
                     const PredictorConfig& cfg) const override {
        DeepWalkOptions opts;
        opts.walk_length = int(cfg.param("walk_length", 40));
        opts.walks_per_node = int(cfg.param("walks_per_node", 10));
        opts.dimensions = int(cfg.param("dimensions", 32));
        opts.window = int(cfg.param("window", 5));
        opts.seed = cfg.seed;
        return deepwalk_scores(train, queries, opts);
    }
};

}  // namespace

AlgorithmRegistry AlgorithmRegistry::with_native_defaults() {
    AlgorithmRegistry reg;
    reg.register_predictor(std::make_shared<RaPredictor>());
    reg.register_predictor(std::make_shared<Ra3Predictor>());
    reg.register_predictor(std::make_shared<MfiPredictor>());
    reg.register_predictor(std::make_shared<NmfPredictor>());
    reg.register_predictor(std::make_shared<DeepWalkPredictor>());
    return reg;
}

void AlgorithmRegistry::register_predictor(std::shared_ptr<Predictor> p) {
    if (!p) throw std::invalid_argument("registry: null predictor");
    if (contains(p->id())) throw std::invalid_argument("registry: duplicate id '" + p->id() + "'");
    const std::string name = p->id();
    entries_.emplace_back(name, Entry(std::move(p)));
}

void AlgorithmRegistry::register_external(ExternalScorer scorer) {
    if (scorer.name.empty()) throw std::invalid_argument("registry: empty external scorer name");
    if (contains(scorer.name))
        throw std::invalid_argument("registry: duplicate id '" + scorer.name + "'");
    const std::string name = scorer.name;
    entries_.emplace_back(name, Entry(std::move(scorer)));
}

bool AlgorithmRegistry::contains(const std::string& id) const {
    for (const auto& [name, entry] : entries_)
        if (name == id) return true;
    return false;
}

const AlgorithmRegistry::Entry& AlgorithmRegistry::at(const std::string& id) const {
    for (const auto& [name, entry] : entries_)
        if (name == id) return entry;
    throw std::out_of_range("registry: unknown algorithm '" + id + "'");
}

std::vector<std::string> AlgorithmRegistry::ids() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& [name, entry] : entries_) out.push_back(name);
    return out;
}

}  // namespace linkeval
