// CoNLL-style corpus reader/writer: one token per line, delimiter-separated
// columns, blank line between sentences. UTF-8, LF or CRLF accepted, LF
// emitted.

#ifndef COALAS_CONLL_HPP
#define COALAS_CONLL_HPP

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "coalas/bio.hpp"
#include "coalas/types.hpp"

namespace coalas {

struct ParseError : std::runtime_error {
    std::size_t line;
    ParseError(std::size_t line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
          line(line_) {}
};

struct ColumnSchema {
    bool tab_delimited = true;  // tab, with fallback to any-whitespace split
    bool has_pos = false;       // optional third column between token and tag

    std::size_t column_count() const { return has_pos ? 3 : 2; }
};

namespace detail {

inline std::vector<std::string> split_fields(const std::string& line,
                                             const ColumnSchema& schema) {
    std::vector<std::string> fields;
    if (schema.tab_delimited && line.find('\t') != std::string::npos) {
        std::size_t pos = 0;
        while (true) {
            std::size_t tab = line.find('\t', pos);
            if (tab == std::string::npos) {
                fields.push_back(line.substr(pos));
                break;
            }
            fields.push_back(line.substr(pos, tab - pos));
            pos = tab + 1;
        }
    } else {
        std::istringstream ss(line);
        std::string f;
        while (ss >> f) fields.push_back(std::move(f));
    }
    return fields;
}

}  // namespace detail

inline Dataset read_conll(std::istream& in, const ColumnSchema& schema = {},
                          std::string name = "") {
    Dataset ds;
    ds.name = std::move(name);
    LabeledSentence cur;
    std::string line;
    std::size_t lineno = 0;
    auto flush = [&] {
        if (!cur.tokens.empty()) {
            ds.sentences.push_back(std::move(cur));
            cur = {};
        }
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        // A line of pure whitespace counts as blank.
        if (line.find_first_not_of(" \t") == std::string::npos) {
            flush();
            continue;
        }
        auto fields = detail::split_fields(line, schema);
        if (fields.size() < schema.column_count())
            throw ParseError(lineno, "expected " +
                                         std::to_string(schema.column_count()) +
                                         " fields, got " +
                                         std::to_string(fields.size()));
        Token tok;
        tok.text = fields[0];
        if (schema.has_pos) tok.pos = fields[1];
        const std::string& tag_str = fields[schema.has_pos ? 2 : 1];
        auto tag = parse_tag(tag_str);
        if (!tag) throw ParseError(lineno, "unknown tag " + tag_str);
        cur.tokens.push_back(std::move(tok));
        cur.tags.push_back(*tag);
    }
    flush();
    return ds;
}

inline void write_conll(const Dataset& ds, std::ostream& out,
                        const ColumnSchema& schema = {}) {
    for (const LabeledSentence& sent : ds.sentences) {
        for (std::size_t i = 0; i < sent.size(); ++i) {
            out << sent.tokens[i].text;
            if (schema.has_pos)
                out << '\t' << (sent.tokens[i].pos ? *sent.tokens[i].pos : "_");
            out << '\t' << to_string(sent.tags[i]) << '\n';
        }
        out << '\n';
    }
}

struct Violation {
    std::size_t sentence;  // 0-based sentence index
    std::size_t position;  // token index, where applicable
    bool warning;          // invalid BIO is a warning, not an error
    std::string message;
};

// Structural checks. Invalid BIO transitions are reported as warnings since
// decode-time repair handles them.
inline std::vector<Violation> validate(const Dataset& ds) {
    std::vector<Violation> out;
    for (std::size_t s = 0; s < ds.sentences.size(); ++s) {
        const LabeledSentence& sent = ds.sentences[s];
        if (sent.tokens.size() != sent.tags.size()) {
            out.push_back({s, 0, false, "token/tag length mismatch"});
            continue;
        }
        if (sent.tokens.empty()) {
            out.push_back({s, 0, false, "empty sentence"});
            continue;
        }
        for (std::size_t i = 0; i < sent.tags.size(); ++i) {
            Tag t = sent.tags[i];
            if (!is_i(t)) continue;
            Tag prev = i > 0 ? sent.tags[i - 1] : Tag::O;
            bool ok = (is_b(prev) || is_i(prev)) && tag_type(prev) == tag_type(t);
            if (!ok)
                out.push_back({s, i, true,
                               "invalid " + std::string(to_string(t)) +
                                   " at position " + std::to_string(i)});
        }
    }
    return out;
}

}  // namespace coalas

#endif
