// Independent chunk extractor following the conlleval script's
// startOfChunk/endOfChunk rules, written directly from that definition and
// kept separate from the library's decoder on purpose.

#ifndef COALAS_TEST_CONLLEVAL_ORACLE_HPP
#define COALAS_TEST_CONLLEVAL_ORACLE_HPP

#include <string>
#include <tuple>
#include <vector>

namespace conlleval_oracle {

struct Chunk {
    std::size_t start, end;  // half-open
    std::string type;

    bool operator==(const Chunk&) const = default;
};

inline void split_tag(const std::string& full, std::string& tag,
                      std::string& type) {
    auto dash = full.find('-');
    if (dash == std::string::npos) {
        tag = full;
        type.clear();
    } else {
        tag = full.substr(0, dash);
        type = full.substr(dash + 1);
    }
}

inline bool end_of_chunk(const std::string& prev_tag, const std::string& tag,
                         const std::string& prev_type,
                         const std::string& type) {
    bool e = false;
    if (prev_tag == "B" && tag == "B") e = true;
    if (prev_tag == "B" && tag == "O") e = true;
    if (prev_tag == "I" && tag == "B") e = true;
    if (prev_tag == "I" && tag == "O") e = true;
    if (prev_tag != "O" && prev_type != type) e = true;
    return e;
}

inline bool start_of_chunk(const std::string& prev_tag, const std::string& tag,
                           const std::string& prev_type,
                           const std::string& type) {
    bool s = false;
    if (prev_tag == "B" && tag == "B") s = true;
    if (prev_tag == "I" && tag == "B") s = true;
    if (prev_tag == "O" && tag == "B") s = true;
    if (prev_tag == "O" && tag == "I") s = true;
    if (tag != "O" && prev_type != type) s = true;
    return s;
}

// Extracts chunks from a sequence of full tag strings ("O", "B-ENG", ...).
inline std::vector<Chunk> chunks(const std::vector<std::string>& tags) {
    std::vector<Chunk> out;
    std::string prev_tag = "O", prev_type;
    bool in_chunk = false;
    Chunk cur{};
    for (std::size_t i = 0; i < tags.size(); ++i) {
        std::string tag, type;
        split_tag(tags[i], tag, type);
        if (in_chunk && end_of_chunk(prev_tag, tag, prev_type, type)) {
            cur.end = i;
            out.push_back(cur);
            in_chunk = false;
        }
        if (start_of_chunk(prev_tag, tag, prev_type, type)) {
            cur = Chunk{i, i, type};
            in_chunk = true;
        }
        prev_tag = tag;
        prev_type = type;
    }
    if (in_chunk) {
        cur.end = tags.size();
        out.push_back(cur);
    }
    return out;
}

}  // namespace conlleval_oracle

#endif
