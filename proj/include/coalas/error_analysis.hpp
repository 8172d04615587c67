// Cross-model error analysis: align several prediction files against gold,
// find errors shared by every model and answers unique to one model, and
// bucket missed spans into casing/homograph categories.

#ifndef COALAS_ERROR_ANALYSIS_HPP
#define COALAS_ERROR_ANALYSIS_HPP

#include <set>
#include <string>
#include <vector>

#include "coalas/bio.hpp"
#include "coalas/eval.hpp"
#include "coalas/types.hpp"
#include "coalas/unicode.hpp"

namespace coalas {

enum class SpanOutcome { Tp, Fn, Fp, TypeConfusion };

struct SpanRef {
    std::size_t sentence;
    Span span;

    bool operator==(const SpanRef&) const = default;
    auto operator<=>(const SpanRef&) const = default;
};

struct OutcomeMatrix {
    const Dataset* gold = nullptr;
    std::size_t model_count = 0;
    // Repaired predicted spans, [model][sentence].
    std::vector<std::vector<std::vector<Span>>> pred_spans;
    // Gold spans per sentence (repaired).
    std::vector<std::vector<Span>> gold_spans;
    // Per gold span, per model: Tp, Fn or TypeConfusion.
    std::vector<std::vector<SpanOutcome>> gold_outcomes;  // [gold span][model]
    std::vector<SpanRef> gold_refs;
    // Per model: predicted spans with no exact gold match.
    std::vector<std::vector<SpanRef>> false_positives;  // [model]
};

inline OutcomeMatrix align_outputs(const Dataset& gold,
                                   const std::vector<Dataset>& predictions) {
    OutcomeMatrix m;
    m.gold = &gold;
    m.model_count = predictions.size();
    for (std::size_t k = 0; k < predictions.size(); ++k) {
        try {
            check_aligned(gold, predictions[k]);
        } catch (const AlignmentError& e) {
            throw AlignmentError(e.sentence, "prediction set " +
                                                 std::to_string(k) + ": " +
                                                 e.what());
        }
    }
    const std::size_t S = gold.sentences.size();
    m.gold_spans.resize(S);
    m.pred_spans.assign(predictions.size(), std::vector<std::vector<Span>>(S));
    m.false_positives.resize(predictions.size());
    for (std::size_t s = 0; s < S; ++s) {
        m.gold_spans[s] = decode_tags(gold.sentences[s].tags);
        for (const Span& sp : m.gold_spans[s]) m.gold_refs.push_back({s, sp});
        for (std::size_t k = 0; k < predictions.size(); ++k)
            m.pred_spans[k][s] = decode_tags(predictions[k].sentences[s].tags);
    }
    m.gold_outcomes.assign(m.gold_refs.size(),
                           std::vector<SpanOutcome>(m.model_count));
    std::size_t gi = 0;
    for (std::size_t s = 0; s < S; ++s) {
        std::set<Span> gold_here(m.gold_spans[s].begin(), m.gold_spans[s].end());
        for (const Span& g : m.gold_spans[s]) {
            for (std::size_t k = 0; k < m.model_count; ++k) {
                const auto& ps = m.pred_spans[k][s];
                SpanOutcome out = SpanOutcome::Fn;
                for (const Span& p : ps) {
                    if (p == g) {
                        out = SpanOutcome::Tp;
                        break;
                    }
                    if (p.start == g.start && p.end == g.end && p.type != g.type)
                        out = SpanOutcome::TypeConfusion;
                }
                m.gold_outcomes[gi][k] = out;
            }
            ++gi;
        }
        for (std::size_t k = 0; k < m.model_count; ++k)
            for (const Span& p : m.pred_spans[k][s])
                if (!gold_here.count(p)) m.false_positives[k].push_back({s, p});
    }
    return m;
}

namespace detail {

// Token-level view: true where model k predicts the token inside a span.
inline std::vector<std::vector<bool>> predicted_mask(const OutcomeMatrix& m,
                                                     std::size_t model) {
    std::vector<std::vector<bool>> mask(m.gold->sentences.size());
    for (std::size_t s = 0; s < mask.size(); ++s) {
        mask[s].assign(m.gold->sentences[s].size(), false);
        for (const Span& p : m.pred_spans[model][s])
            for (std::size_t i = p.start; i < p.end; ++i) mask[s][i] = true;
    }
    return mask;
}

inline std::vector<std::vector<bool>> gold_mask(const OutcomeMatrix& m) {
    std::vector<std::vector<bool>> mask(m.gold->sentences.size());
    for (std::size_t s = 0; s < mask.size(); ++s) {
        mask[s].assign(m.gold->sentences[s].size(), false);
        for (const Span& g : m.gold_spans[s])
            for (std::size_t i = g.start; i < g.end; ++i) mask[s][i] = true;
    }
    return mask;
}

}  // namespace detail

struct CommonErrors {
    std::vector<SpanRef> missed_by_all;  // gold spans every model tagged fully O
    std::size_t missed_token_count = 0;
    // Maximal token runs predicted inside spans by every model, gold O.
    std::vector<SpanRef> false_positive_by_all;  // span type = ENG placeholder
    std::size_t false_positive_token_count = 0;
};

inline CommonErrors common_errors(const OutcomeMatrix& m) {
    CommonErrors ce;
    std::vector<std::vector<std::vector<bool>>> pred;
    for (std::size_t k = 0; k < m.model_count; ++k)
        pred.push_back(detail::predicted_mask(m, k));
    auto gmask = detail::gold_mask(m);

    for (const SpanRef& ref : m.gold_refs) {
        bool all_o = true;
        for (std::size_t k = 0; k < m.model_count && all_o; ++k)
            for (std::size_t i = ref.span.start; i < ref.span.end; ++i)
                if (pred[k][ref.sentence][i]) {
                    all_o = false;
                    break;
                }
        if (all_o) {
            ce.missed_by_all.push_back(ref);
            ce.missed_token_count += ref.span.end - ref.span.start;
        }
    }

    for (std::size_t s = 0; s < gmask.size(); ++s) {
        std::size_t n = gmask[s].size();
        std::size_t i = 0;
        while (i < n) {
            bool fp_here = !gmask[s][i];
            for (std::size_t k = 0; k < m.model_count && fp_here; ++k)
                fp_here = pred[k][s][i];
            if (!fp_here) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < n && !gmask[s][j]) {
                bool all = true;
                for (std::size_t k = 0; k < m.model_count; ++k)
                    if (!pred[k][s][j]) {
                        all = false;
                        break;
                    }
                if (!all) break;
                ++j;
            }
            ce.false_positive_by_all.push_back(
                {s, Span{i, j, BorrowingType::ENG}});
            ce.false_positive_token_count += j - i;
            i = j;
        }
    }
    return ce;
}

struct TokenRef {
    std::size_t sentence;
    std::size_t position;

    bool operator==(const TokenRef&) const = default;
    auto operator<=>(const TokenRef&) const = default;
};

struct UniqueAnswers {
    std::vector<TokenRef> unique_correct;       // gold-span tokens only this model got
    std::vector<TokenRef> unique_incorrect_fp;  // tokens only this model falsely flagged
    std::vector<TokenRef> unique_correct_o;     // gold-O tokens only this model kept O
};

inline UniqueAnswers unique_answers(const OutcomeMatrix& m,
                                    std::size_t model_index) {
    if (model_index >= m.model_count)
        throw std::out_of_range("model index out of range");
    UniqueAnswers ua;
    std::vector<std::vector<std::vector<bool>>> pred;
    for (std::size_t k = 0; k < m.model_count; ++k)
        pred.push_back(detail::predicted_mask(m, k));
    auto gmask = detail::gold_mask(m);

    for (std::size_t s = 0; s < gmask.size(); ++s) {
        for (std::size_t i = 0; i < gmask[s].size(); ++i) {
            bool mine = pred[model_index][s][i];
            bool others_any_correct = false, others_any_pred = false,
                 others_all_pred = true;
            for (std::size_t k = 0; k < m.model_count; ++k) {
                if (k == model_index) continue;
                if (pred[k][s][i]) others_any_pred = true;
                else others_all_pred = false;
                if (pred[k][s][i] == gmask[s][i]) others_any_correct = true;
            }
            if (gmask[s][i]) {
                if (mine && !others_any_pred) ua.unique_correct.push_back({s, i});
            } else {
                if (mine && !others_any_pred)
                    ua.unique_incorrect_fp.push_back({s, i});
                if (!mine && others_all_pred && m.model_count > 1)
                    ua.unique_correct_o.push_back({s, i});
            }
            (void)others_any_correct;
        }
    }
    return ua;
}

enum class ErrorCategory {
    AllUppercase,
    SentenceInitialTitlecase,
    SpanishHomograph,
    Other,
};

// First matching rule wins; the order is part of the contract.
inline ErrorCategory categorize_error(
    const std::vector<Token>& span_tokens, std::size_t sentence_position,
    const std::set<std::string>& spanish_lexicon) {
    if (span_tokens.empty())
        throw std::invalid_argument("empty span");

    bool any_cased = false, all_upper = true;
    for (const Token& t : span_tokens) {
        for (char32_t cp : uni::decode_all(t.text)) {
            if (uni::is_cased(cp)) {
                any_cased = true;
                if (!uni::is_upper(cp)) all_upper = false;
            }
        }
    }
    if (any_cased && all_upper) return ErrorCategory::AllUppercase;

    if (sentence_position == 0) {
        auto cps = uni::decode_all(span_tokens.front().text);
        if (!cps.empty() && uni::is_upper(cps[0])) {
            bool rest_lower = true;
            for (std::size_t i = 1; i < cps.size(); ++i)
                if (uni::is_upper(cps[i])) {
                    rest_lower = false;
                    break;
                }
            if (rest_lower) return ErrorCategory::SentenceInitialTitlecase;
        }
    }

    bool all_in_lexicon = true;
    for (const Token& t : span_tokens)
        if (!spanish_lexicon.count(uni::fold_case(t.text))) {
            all_in_lexicon = false;
            break;
        }
    if (all_in_lexicon) return ErrorCategory::SpanishHomograph;

    return ErrorCategory::Other;
}

}  // namespace coalas

#endif
