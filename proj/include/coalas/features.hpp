// Handcrafted feature templates with a +/-2 token window: token string,
// casing flags, character trigrams, suffix, quotation, POS, word shape,
// URL/email/Twitter patterns, and optional word-embedding features.

#ifndef COALAS_FEATURES_HPP
#define COALAS_FEATURES_HPP

#include <algorithm>
#include <cstdint>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "coalas/types.hpp"
#include "coalas/unicode.hpp"

namespace coalas {

struct FeatureConfig {
    int window = 2;
    bool bias = true;
    bool token = true;
    bool uppercase = true;
    bool titlecase = true;
    bool char_trigram = true;
    bool quotation = true;
    bool suffix = true;
    bool pos_tag = true;
    bool word_shape = true;
    bool word_embedding = true;
    bool url = true;
    bool email = true;
    bool twitter = true;
    int trigram_min_len = 3;
    int suffix_len = 3;

    bool operator==(const FeatureConfig&) const = default;
};

struct EmbeddingTable {
    std::size_t dimension = 0;
    std::unordered_map<std::string, std::vector<double>> vectors;

    const std::vector<double>* lookup(const std::string& word) const {
        auto it = vectors.find(word);
        return it == vectors.end() ? nullptr : &it->second;
    }
};

// A named feature with a real value. Binary features carry 1.0; embedding
// dimensions carry the dimension's value.
struct Attribute {
    std::string name;
    double value = 1.0;

    bool operator==(const Attribute&) const = default;
};

// Dense attribute-name -> weight-index map. Frozen vocabularies never grow;
// unknown attributes at inference are ignored.
class AttributeVocabulary {
public:
    std::size_t size() const { return names_.size(); }
    bool frozen() const { return frozen_; }
    void freeze() { frozen_ = true; }

    // Returns the index, adding the attribute when unfrozen; -1 when a
    // frozen vocabulary does not contain it.
    std::ptrdiff_t index_of(const std::string& name) {
        auto it = index_.find(name);
        if (it != index_.end()) return static_cast<std::ptrdiff_t>(it->second);
        if (frozen_) return -1;
        std::size_t idx = names_.size();
        names_.push_back(name);
        index_.emplace(name, idx);
        return static_cast<std::ptrdiff_t>(idx);
    }

    std::ptrdiff_t find(const std::string& name) const {
        auto it = index_.find(name);
        return it == index_.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
    }

    const std::vector<std::string>& names() const { return names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
    bool frozen_ = false;
};

enum class TokenFlag { Uppercase, Titlecase, Quote, Url, Email, Twitter };

// Shape: X for uppercase, x for lowercase, d for digit, the character
// itself otherwise; runs of the same class longer than 4 truncate to 4.
inline std::string word_shape(const std::string& text) {
    std::string out;
    char32_t prev = 0;
    int run = 0;
    std::size_t i = 0;
    while (i < text.size()) {
        char32_t cp = uni::decode(text, i);
        char32_t mapped;
        if (uni::is_upper(cp)) mapped = U'X';
        else if (uni::is_lower(cp)) mapped = U'x';
        else if (uni::is_digit(cp)) mapped = U'd';
        else mapped = cp;
        if (mapped == prev) {
            if (++run > 4) continue;
        } else {
            prev = mapped;
            run = 1;
        }
        uni::append_utf8(out, mapped);
    }
    return out;
}

// All contiguous 3-character (code point) substrings; empty when shorter.
inline std::set<std::string> char_trigrams(const std::string& text) {
    std::set<std::string> out;
    auto cps = uni::decode_all(text);
    if (cps.size() < 3) return out;
    for (std::size_t i = 0; i + 3 <= cps.size(); ++i) {
        std::string tri;
        for (std::size_t k = 0; k < 3; ++k) uni::append_utf8(tri, cps[i + k]);
        out.insert(std::move(tri));
    }
    return out;
}

namespace detail {

inline bool is_quote_token(const std::string& t) {
    static const std::set<std::string> kQuotes = {
        "`", "'", "\"", "“", "”", "«", "»", "‘",
        "’"};
    return kQuotes.count(t) > 0;
}

inline bool ascii_ieq(char a, char b) {
    auto lo = [](char c) { return c >= 'A' && c <= 'Z' ? char(c + 32) : c; };
    return lo(a) == lo(b);
}

inline bool istarts_with(const std::string& s, const char* prefix) {
    std::size_t n = std::char_traits<char>::length(prefix);
    if (s.size() < n) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (!ascii_ieq(s[i], prefix[i])) return false;
    return true;
}

// URL: ^(https?://|www\.)\S+\.\S+ (case-insensitive scheme/prefix)
inline bool is_url_token(const std::string& t) {
    std::size_t body_start;
    if (istarts_with(t, "http://")) body_start = 7;
    else if (istarts_with(t, "https://")) body_start = 8;
    else if (istarts_with(t, "www.")) body_start = 4;
    else return false;
    std::string_view body(t.data() + body_start, t.size() - body_start);
    if (body.empty()) return false;
    for (char c : body)
        if (c == ' ' || c == '\t') return false;
    std::size_t dot = body.find('.');
    return dot != std::string_view::npos && dot > 0 && dot + 1 < body.size();
}

// EMAIL: ^[^@\s]+@[^@\s]+\.[^@\s]+$
inline bool is_email_token(const std::string& t) {
    std::size_t at = t.find('@');
    if (at == std::string::npos || at == 0) return false;
    if (t.find('@', at + 1) != std::string::npos) return false;
    for (char c : t)
        if (c == ' ' || c == '\t') return false;
    std::size_t dot = t.rfind('.');
    return dot != std::string::npos && dot > at + 1 && dot + 1 < t.size();
}

// TWITTER: ^[@#][A-Za-z0-9_]+$
inline bool is_twitter_token(const std::string& t) {
    if (t.size() < 2 || (t[0] != '@' && t[0] != '#')) return false;
    for (std::size_t i = 1; i < t.size(); ++i) {
        char c = t[i];
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                  (c >= '0' && c <= '9') || c == '_';
        if (!ok) return false;
    }
    return true;
}

inline std::string offset_str(int o) {
    return o > 0 ? "+" + std::to_string(o) : std::to_string(o);
}

}  // namespace detail

inline std::set<TokenFlag> classify_token_flags(const std::string& text) {
    std::set<TokenFlag> flags;
    auto cps = uni::decode_all(text);
    std::size_t cased = 0, upper = 0;
    for (char32_t cp : cps) {
        if (uni::is_cased(cp)) {
            ++cased;
            if (uni::is_upper(cp)) ++upper;
        }
    }
    if (cased > 0 && upper == cased) flags.insert(TokenFlag::Uppercase);
    if (!cps.empty() && uni::is_upper(cps[0])) {
        bool rest_lower = true;
        bool seen_first_cased = false;
        for (char32_t cp : cps) {
            if (!seen_first_cased) {
                seen_first_cased = true;  // the initial uppercase char
                continue;
            }
            if (uni::is_upper(cp)) { rest_lower = false; break; }
        }
        if (rest_lower) flags.insert(TokenFlag::Titlecase);
    }
    if (detail::is_quote_token(text)) flags.insert(TokenFlag::Quote);
    if (detail::is_url_token(text)) flags.insert(TokenFlag::Url);
    if (detail::is_email_token(text)) flags.insert(TokenFlag::Email);
    if (detail::is_twitter_token(text)) flags.insert(TokenFlag::Twitter);
    return flags;
}

// Attributes for position i. Positions past the sentence edge contribute
// BOS[o]/EOS[o] boundary attributes. Embedding features are emitted for
// offset 0 only.
inline std::vector<Attribute> extract_token_attributes(
    const LabeledSentence& sent, std::size_t i, const FeatureConfig& cfg,
    const EmbeddingTable* embeddings = nullptr) {
    std::vector<Attribute> out;
    if (cfg.bias) out.push_back({"bias", 1.0});
    const auto len = static_cast<std::ptrdiff_t>(sent.size());
    for (int o = -cfg.window; o <= cfg.window; ++o) {
        std::ptrdiff_t p = static_cast<std::ptrdiff_t>(i) + o;
        std::string os = detail::offset_str(o);
        if (p < 0) {
            out.push_back({"BOS[" + os + "]", 1.0});
            continue;
        }
        if (p >= len) {
            out.push_back({"EOS[" + os + "]", 1.0});
            continue;
        }
        const Token& tok = sent.tokens[static_cast<std::size_t>(p)];
        const std::string& w = tok.text;
        if (cfg.token) out.push_back({"w[" + os + "]=" + w, 1.0});
        auto flags = classify_token_flags(w);
        if (cfg.uppercase && flags.count(TokenFlag::Uppercase))
            out.push_back({"upper[" + os + "]", 1.0});
        if (cfg.titlecase && flags.count(TokenFlag::Titlecase))
            out.push_back({"title[" + os + "]", 1.0});
        if (cfg.quotation && flags.count(TokenFlag::Quote))
            out.push_back({"quote[" + os + "]", 1.0});
        if (cfg.url && flags.count(TokenFlag::Url))
            out.push_back({"url[" + os + "]", 1.0});
        if (cfg.email && flags.count(TokenFlag::Email))
            out.push_back({"email[" + os + "]", 1.0});
        if (cfg.twitter && flags.count(TokenFlag::Twitter))
            out.push_back({"twitter[" + os + "]", 1.0});
        if (cfg.char_trigram &&
            static_cast<int>(uni::decode_all(w).size()) >= cfg.trigram_min_len)
            for (const auto& tri : char_trigrams(w))
                out.push_back({"tri[" + os + "]=" + tri, 1.0});
        if (cfg.suffix) {
            auto cps = uni::decode_all(w);
            std::size_t n = std::min<std::size_t>(cps.size(),
                                                  static_cast<std::size_t>(cfg.suffix_len));
            std::string suf;
            for (std::size_t k = cps.size() - n; k < cps.size(); ++k)
                uni::append_utf8(suf, cps[k]);
            out.push_back({"suffix" + std::to_string(cfg.suffix_len) + "[" + os +
                               "]=" + suf,
                           1.0});
        }
        if (cfg.pos_tag && tok.pos)
            out.push_back({"pos[" + os + "]=" + *tok.pos, 1.0});
        if (cfg.word_shape)
            out.push_back({"shape[" + os + "]=" + word_shape(w), 1.0});
        if (cfg.word_embedding && o == 0 && embeddings) {
            if (const auto* vec = embeddings->lookup(w))
                for (std::size_t d = 0; d < vec->size(); ++d)
                    out.push_back({"emb[0]=d" + std::to_string(d), (*vec)[d]});
        }
    }
    return out;
}

// First-occurrence order over sentences then positions; deterministic.
inline AttributeVocabulary build_vocabulary(
    const Dataset& ds, const FeatureConfig& cfg,
    const EmbeddingTable* embeddings = nullptr) {
    if (ds.sentences.empty())
        throw std::invalid_argument("cannot build vocabulary from empty dataset");
    AttributeVocabulary vocab;
    for (const auto& sent : ds.sentences)
        for (std::size_t i = 0; i < sent.size(); ++i)
            for (const auto& a : extract_token_attributes(sent, i, cfg, embeddings))
                vocab.index_of(a.name);
    vocab.freeze();
    return vocab;
}

// Text embedding format: optional "count dim" header, then one line per
// word: the word followed by `dim` reals.
inline EmbeddingTable load_embeddings(std::istream& in) {
    EmbeddingTable table;
    std::string line;
    std::size_t lineno = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream ss(line);
        if (first) {
            first = false;
            // Header line: exactly two integer fields.
            std::size_t cnt, dim;
            char trailing;
            std::istringstream probe(line);
            if (probe >> cnt >> dim && !(probe >> trailing)) {
                table.dimension = dim;
                continue;
            }
        }
        std::string word;
        ss >> word;
        std::vector<double> vec;
        double v;
        while (ss >> v) vec.push_back(v);
        if (!ss.eof())
            throw std::runtime_error("non-numeric embedding value at line " +
                                     std::to_string(lineno));
        if (table.dimension == 0 && table.vectors.empty())
            table.dimension = vec.size();
        if (vec.size() != table.dimension)
            throw std::runtime_error(
                "embedding dimension mismatch at line " + std::to_string(lineno) +
                ": expected " + std::to_string(table.dimension) + ", got " +
                std::to_string(vec.size()));
        table.vectors.emplace(std::move(word), std::move(vec));
    }
    return table;
}

}  // namespace coalas

#endif
