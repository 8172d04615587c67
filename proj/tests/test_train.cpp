#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace coalas;

namespace {

// Token string fully determines the tag: disjoint vocab per tag.
Dataset separable_dataset() {
    Dataset ds;
    const char* o_words[] = {"el", "la", "de", "casa", "que"};
    const char* eng_words[] = {"crush", "look", "running", "smartphone", "hype"};
    for (int s = 0; s < 10; ++s) {
        LabeledSentence sent;
        for (int i = 0; i < 4; ++i) {
            sent.tokens.push_back({o_words[(s + i) % 5], {}});
            sent.tags.push_back(Tag::O);
        }
        sent.tokens.push_back({eng_words[s % 5], {}});
        sent.tags.push_back(Tag::B_ENG);
        ds.sentences.push_back(std::move(sent));
    }
    return ds;
}

FeatureConfig small_config() {
    FeatureConfig cfg;
    cfg.window = 1;
    cfg.char_trigram = false;
    cfg.word_embedding = false;
    return cfg;
}

double token_accuracy(const CrfModel& m, const Dataset& ds) {
    std::size_t correct = 0, total = 0;
    for (const auto& sent : ds.sentences) {
        auto got = viterbi(m, m.featurize(sent)).tags;
        for (std::size_t i = 0; i < sent.size(); ++i) {
            ++total;
            if (got[i] == sent.tags[i]) ++correct;
        }
    }
    return static_cast<double>(correct) / static_cast<double>(total);
}

}  // namespace

TEST_CASE("separable data trains to 100% token accuracy") {
    Dataset ds = separable_dataset();
    TrainConfig tc;
    auto [model, report] = train(ds, small_config(), tc);
    CHECK(token_accuracy(model, ds) == doctest::Approx(1.0));
    CHECK(report.iterations <= 200);
}

TEST_CASE("unregularized single sequence overfits toward zero nll") {
    Dataset ds;
    ds.sentences.push_back({{{"uno", {}}, {"crush", {}}},
                            {Tag::O, Tag::B_ENG}});
    TrainConfig tc;
    tc.c1 = 0;
    tc.c2 = 0;
    tc.tolerance = 1e-9;
    auto [model, report] = train(ds, small_config(), tc);
    REQUIRE(!report.objective_trace.empty());
    CHECK(report.objective_trace.back() < 0.01);
}

TEST_CASE("extreme L1 zeroes every weight") {
    Dataset ds = separable_dataset();
    TrainConfig tc;
    tc.c1 = 1000;
    auto [model, report] = train(ds, small_config(), tc);
    CHECK(report.active_features == 0);
    // prediction falls back to the tie-break: all O
    auto tags = viterbi(model, model.featurize(ds.sentences[0])).tags;
    CHECK(tags == std::vector<Tag>(ds.sentences[0].size(), Tag::O));
}

TEST_CASE("objective trace is non-increasing") {
    Dataset ds = separable_dataset();
    auto [model, report] = train(ds, small_config(), TrainConfig{});
    for (std::size_t i = 1; i < report.objective_trace.size(); ++i)
        CHECK(report.objective_trace[i] <=
              report.objective_trace[i - 1] + 1e-9);
}

TEST_CASE("training is deterministic") {
    Dataset ds = separable_dataset();
    auto [m1, r1] = train(ds, small_config(), TrainConfig{});
    auto [m2, r2] = train(ds, small_config(), TrainConfig{});
    CHECK(m1.weights == m2.weights);  // bit-identical
    CHECK(r1.iterations == r2.iterations);
}

TEST_CASE("L1 produces sparser models than pure L2") {
    Dataset ds = separable_dataset();
    TrainConfig dense;
    dense.c1 = 0;
    TrainConfig sparse;
    sparse.c1 = 0.5;
    auto [m1, r1] = train(ds, small_config(), dense);
    auto [m2, r2] = train(ds, small_config(), sparse);
    CHECK(r2.active_features < r1.active_features);
}

TEST_CASE("empty dataset rejected") {
    CHECK_THROWS(train(Dataset{}, small_config(), TrainConfig{}));
}

TEST_CASE("trained model reproduces gold tags on its own tokens") {
    Dataset ds = separable_dataset();
    auto [model, report] = train(ds, small_config(), TrainConfig{});
    std::vector<std::vector<Token>> sentences;
    for (const auto& s : ds.sentences) sentences.push_back(s.tokens);
    auto tagged = tag_sentences(model, sentences);
    for (std::size_t s = 0; s < ds.sentences.size(); ++s)
        CHECK(tagged[s] == ds.sentences[s].tags);
}
