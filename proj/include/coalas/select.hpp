// Data-selection pipeline: flag borrowing candidates per token (model hit,
// English-wordlist hit, or OOV relative to the training vocabulary) and
// select articles/sentences dense in candidates.

#ifndef COALAS_SELECT_HPP
#define COALAS_SELECT_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coalas/bio.hpp"
#include "coalas/crf.hpp"
#include "coalas/types.hpp"
#include "coalas/unicode.hpp"

namespace coalas {

enum class CandidateReason { Model, Wordlist, Oov };

struct SelectionResources {
    std::set<std::string> english_wordlist;     // case-folded at load time
    std::set<std::string> training_vocabulary;  // case-folded at load time
    const CrfModel* model = nullptr;
    const EmbeddingTable* embeddings = nullptr;
};

struct CandidateReport {
    std::vector<std::set<CandidateReason>> reasons;  // per token
    std::size_t candidate_count = 0;  // tokens with a nonempty reason set
};

// Pure punctuation/digit tokens are never flagged; everything else is
// tested case-folded.
inline CandidateReport detect_candidates(const std::vector<Token>& sentence,
                                         const SelectionResources& res) {
    CandidateReport report;
    report.reasons.resize(sentence.size());

    std::vector<bool> in_model_span(sentence.size(), false);
    if (res.model && !sentence.empty()) {
        LabeledSentence s{sentence, std::vector<Tag>(sentence.size(), Tag::O)};
        auto tags = viterbi(*res.model, res.model->featurize(s, res.embeddings)).tags;
        for (const Span& sp : decode_tags(tags))
            for (std::size_t i = sp.start; i < sp.end; ++i) in_model_span[i] = true;
    }

    for (std::size_t i = 0; i < sentence.size(); ++i) {
        const std::string& text = sentence[i].text;
        if (!uni::has_alpha(text)) continue;
        std::string folded = uni::fold_case(text);
        auto& rs = report.reasons[i];
        if (in_model_span[i]) rs.insert(CandidateReason::Model);
        if (res.english_wordlist.count(folded)) rs.insert(CandidateReason::Wordlist);
        if (!res.training_vocabulary.count(folded)) rs.insert(CandidateReason::Oov);
        if (!rs.empty()) ++report.candidate_count;
    }
    return report;
}

struct Article {
    std::string id;
    std::vector<std::vector<Token>> sentences;
};

// Selected iff candidate count is strictly greater than the threshold.
inline std::vector<std::string> select_articles(
    const std::vector<Article>& articles, const SelectionResources& res,
    std::size_t threshold = 5) {
    std::vector<std::string> selected;
    for (const Article& art : articles) {
        std::size_t count = 0;
        for (const auto& sent : art.sentences)
            count += detect_candidates(sent, res).candidate_count;
        if (count > threshold) selected.push_back(art.id);
    }
    return selected;
}

inline std::vector<std::size_t> select_sentences(
    const std::vector<std::vector<Token>>& sentences,
    const SelectionResources& res) {
    std::vector<std::size_t> selected;
    for (std::size_t i = 0; i < sentences.size(); ++i)
        if (detect_candidates(sentences[i], res).candidate_count > 0)
            selected.push_back(i);
    return selected;
}

// One word per line, UTF-8; folded on load.
inline std::set<std::string> load_wordlist(std::istream& in) {
    std::set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        words.insert(uni::fold_case(line));
    }
    return words;
}

inline std::set<std::string> dataset_vocabulary(const Dataset& ds) {
    std::set<std::string> vocab;
    for (const auto& sent : ds.sentences)
        for (const Token& t : sent.tokens) vocab.insert(uni::fold_case(t.text));
    return vocab;
}

}  // namespace coalas

#endif
