// Minimal UTF-8 handling and Unicode-aware case classification.
//
// Full Unicode tables are overkill for Spanish newswire: coverage here is
// ASCII, Latin-1 Supplement and Latin Extended-A, which includes every
// accented character in Spanish plus the usual Western European extras.

#ifndef COALAS_UNICODE_HPP
#define COALAS_UNICODE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace coalas::uni {

// Decodes one UTF-8 code point starting at s[i]; advances i.
// Malformed bytes decode as U+FFFD and advance one byte.
inline char32_t decode(std::string_view s, std::size_t& i) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 0x80) { ++i; return c; }
    int extra;
    char32_t cp;
    if ((c & 0xE0) == 0xC0) { extra = 1; cp = c & 0x1F; }
    else if ((c & 0xF0) == 0xE0) { extra = 2; cp = c & 0x0F; }
    else if ((c & 0xF8) == 0xF0) { extra = 3; cp = c & 0x07; }
    else { ++i; return 0xFFFD; }
    if (i + static_cast<std::size_t>(extra) >= s.size()) { ++i; return 0xFFFD; }
    for (int k = 1; k <= extra; ++k) {
        unsigned char cc = static_cast<unsigned char>(s[i + k]);
        if ((cc & 0xC0) != 0x80) { ++i; return 0xFFFD; }
        cp = (cp << 6) | (cc & 0x3F);
    }
    i += 1 + extra;
    return cp;
}

inline std::vector<char32_t> decode_all(std::string_view s) {
    std::vector<char32_t> out;
    std::size_t i = 0;
    while (i < s.size()) out.push_back(decode(s, i));
    return out;
}

inline void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) { out.push_back(static_cast<char>(cp)); }
    else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

inline bool is_upper(char32_t cp) {
    if (cp >= U'A' && cp <= U'Z') return true;
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return true;  // À..Þ minus ×
    if (cp >= 0x100 && cp <= 0x177) return (cp % 2) == 0;     // Ā..Ŷ pairs
    if (cp == 0x178 || cp == 0x179 || cp == 0x17B || cp == 0x17D) return true;
    return false;
}

inline bool is_lower(char32_t cp) {
    if (cp >= U'a' && cp <= U'z') return true;
    if (cp == 0xDF) return true;                              // ß
    if (cp >= 0xE0 && cp <= 0xFF && cp != 0xF7) return true;  // à..ÿ minus ÷
    if (cp >= 0x100 && cp <= 0x177) return (cp % 2) == 1;
    if (cp == 0x17A || cp == 0x17C || cp == 0x17E || cp == 0x17F) return true;
    return false;
}

inline bool is_cased(char32_t cp) { return is_upper(cp) || is_lower(cp); }

inline bool is_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }

inline bool is_alpha(char32_t cp) { return is_cased(cp); }

inline char32_t to_lower(char32_t cp) {
    if (cp >= U'A' && cp <= U'Z') return cp + 32;
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 32;
    if (cp >= 0x100 && cp <= 0x177 && (cp % 2) == 0) return cp + 1;
    if (cp == 0x178) return 0xFF;
    if (cp == 0x179 || cp == 0x17B || cp == 0x17D) return cp + 1;
    return cp;
}

// Case-folds a UTF-8 string (simple one-to-one fold, Latin coverage).
inline std::string fold_case(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) append_utf8(out, to_lower(decode(s, i)));
    return out;
}

// True if the string contains at least one alphabetic code point.
inline bool has_alpha(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size())
        if (is_alpha(decode(s, i))) return true;
    return false;
}

}  // namespace coalas::uni

#endif
