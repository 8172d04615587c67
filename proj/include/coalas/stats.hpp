// Corpus-level statistics: token/span counts, unique borrowings, borrowing
// density, and OOV rates relative to a reference split.

#ifndef COALAS_STATS_HPP
#define COALAS_STATS_HPP

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "coalas/bio.hpp"
#include "coalas/types.hpp"
#include "coalas/unicode.hpp"

namespace coalas {

struct CorpusStats {
    std::size_t token_count = 0;
    std::map<BorrowingType, std::size_t> span_count_per_type;
    std::size_t unique_borrowing_count = 0;
    double density_per_1000 = 0.0;
    std::optional<double> oov_unique_rate;  // unique borrowings absent from ref
    std::optional<double> oov_span_rate;    // span instances absent from ref

    std::size_t span_count() const {
        std::size_t n = 0;
        for (auto& [t, c] : span_count_per_type) n += c;
        return n;
    }
};

namespace detail {

// Case-folded surface string of a span, multi-token spans joined with a
// single space.
inline std::string span_surface(const LabeledSentence& sent, const Span& s) {
    std::string out;
    for (std::size_t i = s.start; i < s.end; ++i) {
        if (i > s.start) out += ' ';
        out += sent.tokens[i].text;
    }
    return uni::fold_case(out);
}

inline std::set<std::string> borrowing_inventory(const Dataset& ds) {
    std::set<std::string> inv;
    for (const auto& sent : ds.sentences)
        for (const Span& s : decode_tags(sent.tags))
            inv.insert(span_surface(sent, s));
    return inv;
}

}  // namespace detail

// Span counts are computed after conlleval repair so invalid gold sequences
// still yield spans, mirroring the evaluation protocol.
inline CorpusStats corpus_stats(const Dataset& ds,
                                const Dataset* reference = nullptr) {
    CorpusStats st;
    st.span_count_per_type[BorrowingType::ENG] = 0;
    st.span_count_per_type[BorrowingType::OTHER] = 0;
    std::set<std::string> uniques;
    std::size_t oov_spans = 0, total_spans = 0;
    std::set<std::string> ref_inv;
    if (reference) ref_inv = detail::borrowing_inventory(*reference);

    for (const auto& sent : ds.sentences) {
        st.token_count += sent.tokens.size();
        for (const Span& s : decode_tags(sent.tags)) {
            ++st.span_count_per_type[s.type];
            ++total_spans;
            std::string surface = detail::span_surface(sent, s);
            if (reference && !ref_inv.count(surface)) ++oov_spans;
            uniques.insert(std::move(surface));
        }
    }
    st.unique_borrowing_count = uniques.size();
    if (st.token_count == 0)
        throw std::domain_error("empty corpus: density undefined");
    st.density_per_1000 =
        1000.0 * static_cast<double>(total_spans) / static_cast<double>(st.token_count);
    if (reference) {
        std::size_t oov_unique = 0;
        for (const auto& u : uniques)
            if (!ref_inv.count(u)) ++oov_unique;
        st.oov_unique_rate = uniques.empty()
                                 ? 0.0
                                 : static_cast<double>(oov_unique) / uniques.size();
        st.oov_span_rate = total_spans == 0
                               ? 0.0
                               : static_cast<double>(oov_spans) / total_spans;
    }
    return st;
}

}  // namespace coalas

#endif
