// Linear-chain CRF: scoring, log-space forward-backward, Viterbi decoding
// and the regularized negative log-likelihood objective.

#ifndef COALAS_CRF_HPP
#define COALAS_CRF_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "coalas/features.hpp"
#include "coalas/types.hpp"

namespace coalas {

// One active feature at one position.
struct Feat {
    std::size_t attr;  // vocabulary index
    double value;
};

using PositionFeats = std::vector<Feat>;
using SentenceFeats = std::vector<PositionFeats>;

struct CrfModel {
    // Weight layout: emission [attr * kNumLabels + label] followed by
    // transition [kNumLabels * kNumLabels], one flat vector.
    std::vector<double> weights;
    AttributeVocabulary vocabulary;
    FeatureConfig config;
    std::uint64_t embedding_fingerprint = 0;

    std::size_t emission_size() const { return vocabulary.size() * kNumLabels; }
    std::size_t weight_count() const {
        return emission_size() + kNumLabels * kNumLabels;
    }

    double emission(std::size_t attr, std::size_t label) const {
        return weights[attr * kNumLabels + label];
    }
    double transition(std::size_t from, std::size_t to) const {
        return weights[emission_size() + from * kNumLabels + to];
    }

    // Feature extraction against the frozen vocabulary; unknown attributes
    // are dropped.
    SentenceFeats featurize(const LabeledSentence& sent,
                            const EmbeddingTable* embeddings = nullptr) const {
        SentenceFeats fs(sent.size());
        for (std::size_t i = 0; i < sent.size(); ++i) {
            for (const auto& a :
                 extract_token_attributes(sent, i, config, embeddings)) {
                std::ptrdiff_t idx = vocabulary.find(a.name);
                if (idx >= 0)
                    fs[i].push_back({static_cast<std::size_t>(idx), a.value});
            }
        }
        return fs;
    }
};

namespace detail {

inline double logsumexp(const double* v, std::size_t n) {
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, v[i]);
    if (!std::isfinite(m)) return m;
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) s += std::exp(v[i] - m);
    return m + std::log(s);
}

// Emission scores for every position/label, [pos][label].
inline std::vector<std::array<double, kNumLabels>> emission_scores(
    const CrfModel& m, const SentenceFeats& feats) {
    std::vector<std::array<double, kNumLabels>> es(feats.size());
    for (std::size_t i = 0; i < feats.size(); ++i) {
        es[i].fill(0.0);
        for (const Feat& f : feats[i])
            for (std::size_t y = 0; y < kNumLabels; ++y)
                es[i][y] += m.emission(f.attr, y) * f.value;
    }
    return es;
}

}  // namespace detail

inline double sequence_score(const CrfModel& m, const SentenceFeats& feats,
                             const std::vector<Tag>& tags) {
    if (feats.size() != tags.size())
        throw std::invalid_argument("feature/tag length mismatch");
    double score = 0;
    for (std::size_t i = 0; i < tags.size(); ++i) {
        auto y = static_cast<std::size_t>(tags[i]);
        for (const Feat& f : feats[i]) score += m.emission(f.attr, y) * f.value;
        if (i > 0)
            score += m.transition(static_cast<std::size_t>(tags[i - 1]), y);
    }
    return score;
}

struct ForwardBackwardResult {
    double log_partition;
    // marginals[i][y] = P(y_i = y | x)
    std::vector<std::array<double, kNumLabels>> marginals;
    // pairwise[i][a][b] = P(y_i = a, y_{i+1} = b | x), size len-1
    std::vector<std::array<std::array<double, kNumLabels>, kNumLabels>> pairwise;
};

inline ForwardBackwardResult forward_backward(const CrfModel& m,
                                              const SentenceFeats& feats) {
    const std::size_t L = feats.size();
    if (L == 0) throw std::invalid_argument("empty sequence");
    auto es = detail::emission_scores(m, feats);

    // log alpha / log beta
    std::vector<std::array<double, kNumLabels>> alpha(L), beta(L);
    alpha[0] = es[0];
    double buf[kNumLabels];
    for (std::size_t i = 1; i < L; ++i) {
        for (std::size_t y = 0; y < kNumLabels; ++y) {
            for (std::size_t p = 0; p < kNumLabels; ++p)
                buf[p] = alpha[i - 1][p] + m.transition(p, y);
            alpha[i][y] = detail::logsumexp(buf, kNumLabels) + es[i][y];
        }
    }
    beta[L - 1].fill(0.0);
    for (std::size_t i = L - 1; i-- > 0;) {
        for (std::size_t y = 0; y < kNumLabels; ++y) {
            for (std::size_t n = 0; n < kNumLabels; ++n)
                buf[n] = m.transition(y, n) + es[i + 1][n] + beta[i + 1][n];
            beta[i][y] = detail::logsumexp(buf, kNumLabels);
        }
    }

    ForwardBackwardResult r;
    r.log_partition = detail::logsumexp(alpha[L - 1].data(), kNumLabels);
    r.marginals.resize(L);
    for (std::size_t i = 0; i < L; ++i)
        for (std::size_t y = 0; y < kNumLabels; ++y)
            r.marginals[i][y] = std::exp(alpha[i][y] + beta[i][y] - r.log_partition);
    r.pairwise.resize(L > 0 ? L - 1 : 0);
    for (std::size_t i = 0; i + 1 < L; ++i)
        for (std::size_t a = 0; a < kNumLabels; ++a)
            for (std::size_t b = 0; b < kNumLabels; ++b)
                r.pairwise[i][a][b] =
                    std::exp(alpha[i][a] + m.transition(a, b) + es[i + 1][b] +
                             beta[i + 1][b] - r.log_partition);
    return r;
}

struct ViterbiResult {
    std::vector<Tag> tags;
    double score;
};

// Ties break toward the lower label index at each backpointer decision.
inline ViterbiResult viterbi(const CrfModel& m, const SentenceFeats& feats) {
    const std::size_t L = feats.size();
    if (L == 0) throw std::invalid_argument("empty sequence");
    auto es = detail::emission_scores(m, feats);

    std::vector<std::array<double, kNumLabels>> delta(L);
    std::vector<std::array<std::uint8_t, kNumLabels>> back(L);
    delta[0] = es[0];
    for (std::size_t i = 1; i < L; ++i) {
        for (std::size_t y = 0; y < kNumLabels; ++y) {
            double best = -std::numeric_limits<double>::infinity();
            std::uint8_t arg = 0;
            for (std::size_t p = 0; p < kNumLabels; ++p) {
                double s = delta[i - 1][p] + m.transition(p, y);
                if (s > best) {
                    best = s;
                    arg = static_cast<std::uint8_t>(p);
                }
            }
            delta[i][y] = best + es[i][y];
            back[i][y] = arg;
        }
    }
    std::size_t last = 0;
    for (std::size_t y = 1; y < kNumLabels; ++y)
        if (delta[L - 1][y] > delta[L - 1][last]) last = y;

    ViterbiResult r;
    r.score = delta[L - 1][last];
    r.tags.resize(L);
    for (std::size_t i = L; i-- > 0;) {
        r.tags[i] = static_cast<Tag>(last);
        if (i > 0) last = back[i][last];
    }
    return r;
}

// Negative log-likelihood + c2*||w||^2 over a dataset, with its gradient
// (model expectations minus empirical counts plus 2*c2*w). The L1 term is
// the optimizer's business, not the smooth objective's.
inline double objective_and_gradient(
    const CrfModel& m, const std::vector<SentenceFeats>& feats,
    const std::vector<std::vector<Tag>>& tags, double c2,
    std::vector<double>& grad) {
    if (feats.empty()) throw std::invalid_argument("empty training data");
    grad.assign(m.weight_count(), 0.0);
    double nll = 0;
    const std::size_t em = m.emission_size();
    for (std::size_t s = 0; s < feats.size(); ++s) {
        const auto& fs = feats[s];
        const auto& ys = tags[s];
        if (fs.empty()) continue;
        auto fb = forward_backward(m, fs);
        nll += fb.log_partition - sequence_score(m, fs, ys);
        for (std::size_t i = 0; i < fs.size(); ++i) {
            auto gold = static_cast<std::size_t>(ys[i]);
            for (const Feat& f : fs[i]) {
                for (std::size_t y = 0; y < kNumLabels; ++y)
                    grad[f.attr * kNumLabels + y] +=
                        fb.marginals[i][y] * f.value;
                grad[f.attr * kNumLabels + gold] -= f.value;
            }
            if (i > 0) {
                auto pg = static_cast<std::size_t>(ys[i - 1]);
                for (std::size_t a = 0; a < kNumLabels; ++a)
                    for (std::size_t b = 0; b < kNumLabels; ++b)
                        grad[em + a * kNumLabels + b] += fb.pairwise[i - 1][a][b];
                grad[em + pg * kNumLabels + gold] -= 1.0;
            }
        }
    }
    double l2 = 0;
    for (std::size_t k = 0; k < m.weights.size(); ++k) {
        l2 += m.weights[k] * m.weights[k];
        grad[k] += 2.0 * c2 * m.weights[k];
    }
    return nll + c2 * l2;
}

// Tags raw sentences with a trained model. Empty sentences yield empty tag
// lists.
inline std::vector<std::vector<Tag>> tag_sentences(
    const CrfModel& m, const std::vector<std::vector<Token>>& sentences,
    const EmbeddingTable* embeddings = nullptr) {
    std::vector<std::vector<Tag>> out;
    out.reserve(sentences.size());
    for (const auto& toks : sentences) {
        if (toks.empty()) {
            out.emplace_back();
            continue;
        }
        LabeledSentence sent{toks, std::vector<Tag>(toks.size(), Tag::O)};
        out.push_back(viterbi(m, m.featurize(sent, embeddings)).tags);
    }
    return out;
}

}  // namespace coalas

#endif
