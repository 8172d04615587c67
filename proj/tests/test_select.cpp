#include <doctest.h>

#include <sstream>

#include "helpers.hpp"

using namespace coalas;

namespace {

std::vector<Token> toks(std::initializer_list<const char*> ws) {
    std::vector<Token> out;
    for (const char* w : ws) out.push_back({w, {}});
    return out;
}

SelectionResources basic_resources() {
    SelectionResources res;
    res.english_wordlist = {"crush", "look"};
    res.training_vocabulary = {"el", "de", "la", "casa", "un"};
    return res;
}

}  // namespace

TEST_CASE("detect_candidates reasons") {
    auto res = basic_resources();
    auto rep = detect_candidates(toks({"el", "crush"}), res);
    CHECK(rep.reasons[0].empty());  // in vocab, not in wordlist
    CHECK(rep.reasons[1].count(CandidateReason::Wordlist) == 1);
    CHECK(rep.reasons[1].count(CandidateReason::Oov) == 1);
    CHECK(rep.candidate_count == 1);

    // punctuation and numbers never flagged
    auto punct = detect_candidates(toks({",", "2021", "?"}), res);
    CHECK(punct.candidate_count == 0);

    // case-folded membership
    auto folded = detect_candidates(toks({"CRUSH"}), res);
    CHECK(folded.reasons[0].count(CandidateReason::Wordlist) == 1);
}

TEST_CASE("model reason flags tokens inside predicted spans") {
    // Train a tiny model that tags "crush" as B-ENG.
    Dataset ds;
    for (int i = 0; i < 5; ++i) {
        ds.sentences.push_back({toks({"el", "crush"}), {Tag::O, Tag::B_ENG}});
        ds.sentences.push_back({toks({"la", "casa"}), {Tag::O, Tag::O}});
    }
    FeatureConfig cfg;
    cfg.window = 1;
    cfg.word_embedding = false;
    auto [model, report] = train(ds, cfg, TrainConfig{});

    SelectionResources res;
    res.training_vocabulary = {"el", "crush", "la", "casa"};
    res.model = &model;
    auto rep = detect_candidates(toks({"el", "crush"}), res);
    CHECK(rep.reasons[1].count(CandidateReason::Model) == 1);
    CHECK(rep.reasons[0].empty());
}

TEST_CASE("article threshold is strict") {
    auto res = basic_resources();
    res.english_wordlist = {"w1", "w2", "w3", "w4", "w5", "w6"};
    Article five{"five", {toks({"w1", "w2", "w3", "w4", "w5"})}};
    Article six{"six", {toks({"w1", "w2", "w3"}), toks({"w4", "w5", "w6"})}};
    Article empty{"empty", {}};
    auto selected = select_articles({five, six, empty}, res);
    CHECK(selected == std::vector<std::string>{"six"});

    // threshold 0 selects every article with at least one candidate
    auto all = select_articles({five, six, empty}, res, 0);
    CHECK(all == std::vector<std::string>{"five", "six"});
}

TEST_CASE("sentence selection: any flagged token selects") {
    auto res = basic_resources();
    std::vector<std::vector<Token>> sents{
        toks({"el", "crush"}),        // wordlist hit
        toks({"el", "de", "la"}),     // all in vocab
        toks({"el", "novedad"}),      // OOV hit
        {},                           // empty
    };
    CHECK(select_sentences(sents, res) == std::vector<std::size_t>{0, 2});
}

TEST_CASE("nothing selected with empty resources") {
    SelectionResources res;
    // empty training vocabulary means everything alphabetic is OOV, so give
    // the no-resource case a vocabulary covering the text
    res.training_vocabulary = {"el", "la"};
    CHECK(select_sentences({toks({"el", "la"})}, res).empty());
}

TEST_CASE("monotonicity: growing the wordlist never deselects") {
    auto res = basic_resources();
    std::vector<std::vector<Token>> sents{toks({"el", "crush"}),
                                          toks({"la", "casa"})};
    auto before = select_sentences(sents, res);
    res.english_wordlist.insert("casa");
    auto after = select_sentences(sents, res);
    for (auto idx : before)
        CHECK(std::find(after.begin(), after.end(), idx) != after.end());
}

TEST_CASE("load_wordlist folds case") {
    std::istringstream in("Crush\nLOOK\n\nnube\n");
    auto words = load_wordlist(in);
    CHECK(words == std::set<std::string>{"crush", "look", "nube"});
}
