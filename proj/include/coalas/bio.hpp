// Span <-> BIO tag conversion with conlleval-style repair.

#ifndef COALAS_BIO_HPP
#define COALAS_BIO_HPP

#include <stdexcept>
#include <vector>

#include "coalas/types.hpp"

namespace coalas {

// Half-open token interval with a borrowing type.
struct Span {
    std::size_t start;  // inclusive
    std::size_t end;    // exclusive
    BorrowingType type;

    bool operator==(const Span&) const = default;
    auto operator<=>(const Span&) const = default;
};

enum class RepairMode {
    Conlleval,  // I without a matching predecessor starts a new chunk
    Discard,    // such I tokens are dropped from spans entirely
};

inline std::vector<Tag> encode_spans(std::size_t length,
                                     const std::vector<Span>& spans) {
    std::vector<Tag> tags(length, Tag::O);
    std::size_t prev_end = 0;
    for (const Span& s : spans) {
        if (s.start >= s.end || s.end > length)
            throw std::invalid_argument("invalid span bounds");
        if (s.start < prev_end)
            throw std::invalid_argument("overlapping or unsorted spans");
        prev_end = s.end;
        tags[s.start] = b_tag(s.type);
        for (std::size_t i = s.start + 1; i < s.end; ++i) tags[i] = i_tag(s.type);
    }
    return tags;
}

inline std::vector<Span> decode_tags(const std::vector<Tag>& tags,
                                     RepairMode mode = RepairMode::Conlleval) {
    std::vector<Span> spans;
    bool open = false;
    Span cur{};
    auto close = [&](std::size_t end) {
        if (open) {
            cur.end = end;
            spans.push_back(cur);
            open = false;
        }
    };
    for (std::size_t i = 0; i < tags.size(); ++i) {
        Tag t = tags[i];
        if (t == Tag::O) {
            close(i);
        } else if (is_b(t)) {
            close(i);
            cur = Span{i, i, tag_type(t)};
            open = true;
        } else {  // I tag
            if (open && cur.type == tag_type(t)) continue;
            close(i);
            if (mode == RepairMode::Conlleval) {
                cur = Span{i, i, tag_type(t)};
                open = true;
            }
            // Discard mode: dangling I contributes no span.
        }
    }
    close(tags.size());
    return spans;
}

// Canonicalizes a tag sequence to valid BIO. Equivalent to re-encoding the
// conlleval decode; idempotent.
inline std::vector<Tag> repair(const std::vector<Tag>& tags) {
    return encode_spans(tags.size(), decode_tags(tags, RepairMode::Conlleval));
}

}  // namespace coalas

#endif
