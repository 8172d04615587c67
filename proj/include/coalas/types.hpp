// Core data model: borrowing types, BIO tags, tokens, sentences, datasets.

#ifndef COALAS_TYPES_HPP
#define COALAS_TYPES_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace coalas {

enum class BorrowingType { ENG, OTHER };

constexpr std::array<BorrowingType, 2> kBorrowingTypes{BorrowingType::ENG,
                                                       BorrowingType::OTHER};

inline std::string_view to_string(BorrowingType t) {
    return t == BorrowingType::ENG ? "ENG" : "OTHER";
}

// The five concrete tags, in fixed label order. The order is part of the
// model contract (Viterbi tie-break goes to the lower index).
enum class Tag : std::uint8_t { O = 0, B_ENG, I_ENG, B_OTHER, I_OTHER };

constexpr std::size_t kNumLabels = 5;

constexpr std::array<std::string_view, kNumLabels> kTagStrings{
    "O", "B-ENG", "I-ENG", "B-OTHER", "I-OTHER"};

inline std::string_view to_string(Tag t) {
    return kTagStrings[static_cast<std::size_t>(t)];
}

inline std::optional<Tag> parse_tag(std::string_view s) {
    for (std::size_t i = 0; i < kNumLabels; ++i)
        if (kTagStrings[i] == s) return static_cast<Tag>(i);
    return std::nullopt;
}

inline bool is_b(Tag t) { return t == Tag::B_ENG || t == Tag::B_OTHER; }
inline bool is_i(Tag t) { return t == Tag::I_ENG || t == Tag::I_OTHER; }

// Borrowing type of a non-O tag.
inline BorrowingType tag_type(Tag t) {
    if (t == Tag::B_ENG || t == Tag::I_ENG) return BorrowingType::ENG;
    if (t == Tag::B_OTHER || t == Tag::I_OTHER) return BorrowingType::OTHER;
    throw std::invalid_argument("tag O has no borrowing type");
}

inline Tag b_tag(BorrowingType t) {
    return t == BorrowingType::ENG ? Tag::B_ENG : Tag::B_OTHER;
}
inline Tag i_tag(BorrowingType t) {
    return t == BorrowingType::ENG ? Tag::I_ENG : Tag::I_OTHER;
}

struct Token {
    std::string text;
    std::optional<std::string> pos;

    bool operator==(const Token&) const = default;
};

// One tokenized sentence with per-token tags. Tags are stored as read:
// they need not form a valid BIO sequence, repair happens at decode time.
struct LabeledSentence {
    std::vector<Token> tokens;
    std::vector<Tag> tags;

    std::size_t size() const { return tokens.size(); }
    bool operator==(const LabeledSentence&) const = default;
};

struct Dataset {
    std::vector<LabeledSentence> sentences;
    std::string name;

    bool operator==(const Dataset& o) const { return sentences == o.sentences; }
};

}  // namespace coalas

#endif
