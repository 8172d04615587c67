// Maximum-likelihood CRF training with elastic-net regularization:
// L2 inside the smooth objective, L1 via the orthant-wise optimizer.

#ifndef COALAS_TRAIN_HPP
#define COALAS_TRAIN_HPP

#include <stdexcept>
#include <vector>

#include "coalas/crf.hpp"
#include "coalas/lbfgs.hpp"
#include "coalas/types.hpp"

namespace coalas {

struct TrainConfig {
    double c1 = 0.05;          // L1 coefficient
    double c2 = 0.01;          // L2 coefficient
    int max_iterations = 200;
    double tolerance = 1e-5;
    int lbfgs_memory = 6;
    unsigned seed = 0;  // reserved for data shuffling; weights start at 0
};

struct TrainReport {
    int iterations = 0;
    std::vector<double> objective_trace;
    bool converged = false;
    std::size_t active_features = 0;  // nonzero weights after L1
};

inline std::pair<CrfModel, TrainReport> train(
    const Dataset& ds, const FeatureConfig& feature_config,
    const TrainConfig& tc, const EmbeddingTable* embeddings = nullptr) {
    if (ds.sentences.empty())
        throw std::invalid_argument("cannot train on an empty dataset");

    CrfModel model;
    model.config = feature_config;
    model.vocabulary = build_vocabulary(ds, feature_config, embeddings);
    model.weights.assign(model.weight_count(), 0.0);
    if (embeddings) {
        // Cheap content fingerprint so a mismatched table is detectable.
        std::uint64_t h = 1469598103934665603ull;
        auto mix = [&h](std::uint64_t v) {
            h ^= v;
            h *= 1099511628211ull;
        };
        mix(embeddings->dimension);
        mix(embeddings->vectors.size());
        model.embedding_fingerprint = h;
    }

    std::vector<SentenceFeats> feats;
    std::vector<std::vector<Tag>> tags;
    feats.reserve(ds.sentences.size());
    tags.reserve(ds.sentences.size());
    for (const auto& sent : ds.sentences) {
        if (sent.tokens.empty()) continue;
        feats.push_back(model.featurize(sent, embeddings));
        tags.push_back(sent.tags);
    }
    if (feats.empty())
        throw std::invalid_argument("dataset contains no non-empty sentences");

    auto objective = [&](const std::vector<double>& w,
                         std::vector<double>& grad) {
        model.weights = w;
        return objective_and_gradient(model, feats, tags, tc.c2, grad);
    };

    OptimizerOptions opt;
    opt.memory = tc.lbfgs_memory;
    opt.max_iterations = tc.max_iterations;
    opt.tolerance = tc.tolerance;
    opt.l1 = tc.c1;

    std::vector<double> w(model.weight_count(), 0.0);
    OptimizerResult ores = minimize(w, objective, opt);
    model.weights = w;

    TrainReport report;
    report.iterations = ores.iterations;
    report.objective_trace = std::move(ores.objective_trace);
    report.converged = ores.converged;
    for (double v : model.weights)
        if (v != 0.0) ++report.active_features;
    return {std::move(model), std::move(report)};
}

}  // namespace coalas

#endif
