// Shared test utilities: RNG-driven generators for tags, spans, sentences
// and small random CRF models.

#ifndef COALAS_TEST_HELPERS_HPP
#define COALAS_TEST_HELPERS_HPP

#include <functional>
#include <random>
#include <string>
#include <vector>

#include <coalas/coalas.hpp>

namespace testutil {

using namespace coalas;

inline std::vector<Tag> random_tags(std::mt19937& rng, std::size_t len) {
    std::uniform_int_distribution<int> d(0, 4);
    std::vector<Tag> tags(len);
    for (auto& t : tags) t = static_cast<Tag>(d(rng));
    return tags;
}

// Random non-overlapping sorted span set over [0, len).
inline std::vector<Span> random_spans(std::mt19937& rng, std::size_t len) {
    std::vector<Span> spans;
    std::size_t i = 0;
    std::uniform_int_distribution<int> gap(0, 2), width(1, 3), type(0, 1);
    while (i < len) {
        i += static_cast<std::size_t>(gap(rng));
        if (i >= len) break;
        std::size_t w = std::min<std::size_t>(static_cast<std::size_t>(width(rng)),
                                              len - i);
        spans.push_back({i, i + w,
                         type(rng) ? BorrowingType::OTHER : BorrowingType::ENG});
        i += w;
    }
    return spans;
}

inline std::string random_word(std::mt19937& rng) {
    static const char* pool[] = {"el",    "la",     "crush",  "de",   "un",
                                 "hola",  "running", "smartphone", "casa", "hacer",
                                 "Big",   "Data",   "web",    "2021", ",",
                                 "y",     "que",    "look",   "chic", "atelier"};
    std::uniform_int_distribution<std::size_t> d(0, std::size(pool) - 1);
    return pool[d(rng)];
}

inline LabeledSentence random_sentence(std::mt19937& rng, std::size_t len) {
    LabeledSentence s;
    for (std::size_t i = 0; i < len; ++i) s.tokens.push_back({random_word(rng), {}});
    s.tags = random_tags(rng, len);
    return s;
}

inline Dataset random_dataset(std::mt19937& rng, std::size_t n_sentences,
                              std::size_t max_len = 8) {
    Dataset ds;
    std::uniform_int_distribution<std::size_t> len(1, max_len);
    for (std::size_t i = 0; i < n_sentences; ++i)
        ds.sentences.push_back(random_sentence(rng, len(rng)));
    return ds;
}

// A model over `n_attrs` synthetic attributes with weights in [-2, 2].
// featurize() is bypassed; tests build SentenceFeats directly.
inline CrfModel random_model(std::mt19937& rng, std::size_t n_attrs) {
    CrfModel m;
    for (std::size_t a = 0; a < n_attrs; ++a)
        m.vocabulary.index_of("synth" + std::to_string(a));
    m.vocabulary.freeze();
    std::uniform_real_distribution<double> w(-2.0, 2.0);
    m.weights.resize(m.weight_count());
    for (auto& v : m.weights) v = w(rng);
    return m;
}

// Random sparse features: each position activates 1..3 attributes.
inline SentenceFeats random_feats(std::mt19937& rng, std::size_t len,
                                  std::size_t n_attrs) {
    SentenceFeats fs(len);
    std::uniform_int_distribution<std::size_t> na(1, 3), attr(0, n_attrs - 1);
    std::uniform_real_distribution<double> val(-1.0, 1.0);
    for (auto& pos : fs) {
        std::size_t k = na(rng);
        for (std::size_t j = 0; j < k; ++j) pos.push_back({attr(rng), val(rng)});
    }
    return fs;
}

// Enumerates all 5^L tag sequences.
inline void for_each_sequence(std::size_t len,
                              const std::function<void(const std::vector<Tag>&)>& f) {
    std::vector<Tag> seq(len, Tag::O);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == len) {
            f(seq);
            return;
        }
        for (std::size_t y = 0; y < kNumLabels; ++y) {
            seq[i] = static_cast<Tag>(y);
            rec(i + 1);
        }
    };
    rec(0);
}

}  // namespace testutil

#endif
