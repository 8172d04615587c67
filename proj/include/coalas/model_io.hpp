// Model persistence. Container layout:
//   bytes  0..10  magic "COALAS-CRF\n"
//   uint32 LE     format version (currently 1)
//   uint64 LE     payload length
//   payload       MessagePack document: config, label set, vocabulary,
//                 nonzero weights as (index, value) pairs
//   uint64 LE     FNV-1a checksum of the payload

#ifndef COALAS_MODEL_IO_HPP
#define COALAS_MODEL_IO_HPP

#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "coalas/crf.hpp"

namespace coalas {

struct ModelIoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

constexpr char kMagic[] = "COALAS-CRF\n";
constexpr std::size_t kMagicLen = 11;
constexpr std::uint32_t kFormatVersion = 1;

inline std::uint64_t fnv1a(const std::uint8_t* data, std::size_t n) {
    std::uint64_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < n; ++i) {
        h ^= data[i];
        h *= 1099511628211ull;
    }
    return h;
}

template <typename T>
void write_le(std::ostream& out, T v) {
    for (std::size_t i = 0; i < sizeof(T); ++i)
        out.put(static_cast<char>((v >> (8 * i)) & 0xFF));
}

template <typename T>
T read_le(std::istream& in) {
    T v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) {
        int c = in.get();
        if (c == EOF) throw ModelIoError("truncated model file");
        v |= static_cast<T>(static_cast<unsigned char>(c)) << (8 * i);
    }
    return v;
}

inline nlohmann::json config_to_json(const FeatureConfig& c) {
    return {{"window", c.window},
            {"bias", c.bias},
            {"token", c.token},
            {"uppercase", c.uppercase},
            {"titlecase", c.titlecase},
            {"char_trigram", c.char_trigram},
            {"quotation", c.quotation},
            {"suffix", c.suffix},
            {"pos_tag", c.pos_tag},
            {"word_shape", c.word_shape},
            {"word_embedding", c.word_embedding},
            {"url", c.url},
            {"email", c.email},
            {"twitter", c.twitter},
            {"trigram_min_len", c.trigram_min_len},
            {"suffix_len", c.suffix_len}};
}

inline FeatureConfig config_from_json(const nlohmann::json& j) {
    FeatureConfig c;
    c.window = j.at("window");
    c.bias = j.at("bias");
    c.token = j.at("token");
    c.uppercase = j.at("uppercase");
    c.titlecase = j.at("titlecase");
    c.char_trigram = j.at("char_trigram");
    c.quotation = j.at("quotation");
    c.suffix = j.at("suffix");
    c.pos_tag = j.at("pos_tag");
    c.word_shape = j.at("word_shape");
    c.word_embedding = j.at("word_embedding");
    c.url = j.at("url");
    c.email = j.at("email");
    c.twitter = j.at("twitter");
    c.trigram_min_len = j.at("trigram_min_len");
    c.suffix_len = j.at("suffix_len");
    return c;
}

}  // namespace detail

inline void save_model(const CrfModel& model, std::ostream& out) {
    for (double v : model.weights)
        if (!std::isfinite(v)) throw ModelIoError("non-finite weight");

    nlohmann::json j;
    j["config"] = detail::config_to_json(model.config);
    j["labels"] = nlohmann::json::array();
    for (auto s : kTagStrings) j["labels"].push_back(std::string(s));
    j["attributes"] = model.vocabulary.names();
    j["embedding_fingerprint"] = model.embedding_fingerprint;
    nlohmann::json sparse = nlohmann::json::array();
    for (std::size_t i = 0; i < model.weights.size(); ++i)
        if (model.weights[i] != 0.0) {
            sparse.push_back(i);
            sparse.push_back(model.weights[i]);
        }
    j["weights"] = std::move(sparse);
    j["weight_count"] = model.weights.size();

    std::vector<std::uint8_t> payload = nlohmann::json::to_msgpack(j);
    out.write(detail::kMagic, detail::kMagicLen);
    detail::write_le<std::uint32_t>(out, detail::kFormatVersion);
    detail::write_le<std::uint64_t>(out, payload.size());
    out.write(reinterpret_cast<const char*>(payload.data()),
              static_cast<std::streamsize>(payload.size()));
    detail::write_le<std::uint64_t>(out,
                                    detail::fnv1a(payload.data(), payload.size()));
}

inline CrfModel load_model(std::istream& in) {
    char magic[detail::kMagicLen];
    in.read(magic, detail::kMagicLen);
    if (in.gcount() != static_cast<std::streamsize>(detail::kMagicLen) ||
        std::string(magic, detail::kMagicLen) != detail::kMagic)
        throw ModelIoError("not a COALAS-CRF model file");
    auto version = detail::read_le<std::uint32_t>(in);
    if (version != detail::kFormatVersion)
        throw ModelIoError("unsupported version " + std::to_string(version));
    auto payload_len = detail::read_le<std::uint64_t>(in);
    std::vector<std::uint8_t> payload(payload_len);
    in.read(reinterpret_cast<char*>(payload.data()),
            static_cast<std::streamsize>(payload_len));
    if (in.gcount() != static_cast<std::streamsize>(payload_len))
        throw ModelIoError("truncated model file");
    auto checksum = detail::read_le<std::uint64_t>(in);
    if (checksum != detail::fnv1a(payload.data(), payload.size()))
        throw ModelIoError("checksum mismatch");

    nlohmann::json j;
    try {
        j = nlohmann::json::from_msgpack(payload);
    } catch (const nlohmann::json::exception& e) {
        throw ModelIoError(std::string("corrupt payload: ") + e.what());
    }

    CrfModel model;
    model.config = detail::config_from_json(j.at("config"));
    const auto& labels = j.at("labels");
    if (labels.size() != kNumLabels)
        throw ModelIoError("unexpected label set");
    for (std::size_t i = 0; i < kNumLabels; ++i)
        if (labels[i].get<std::string>() != kTagStrings[i])
            throw ModelIoError("unexpected label set");
    for (const auto& name : j.at("attributes"))
        model.vocabulary.index_of(name.get<std::string>());
    model.vocabulary.freeze();
    model.embedding_fingerprint = j.at("embedding_fingerprint");
    std::size_t count = j.at("weight_count");
    if (count != model.weight_count())
        throw ModelIoError("weight count does not match vocabulary");
    model.weights.assign(count, 0.0);
    const auto& sparse = j.at("weights");
    if (sparse.size() % 2 != 0) throw ModelIoError("malformed weight list");
    for (std::size_t k = 0; k < sparse.size(); k += 2) {
        std::size_t idx = sparse[k];
        if (idx >= count) throw ModelIoError("weight index out of range");
        model.weights[idx] = sparse[k + 1];
    }
    return model;
}

}  // namespace coalas

#endif
