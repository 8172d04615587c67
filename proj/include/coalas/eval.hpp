// Span-exact evaluation: a predicted span counts only when start, end and
// type all match a gold span. Metrics are percentages.

#ifndef COALAS_EVAL_HPP
#define COALAS_EVAL_HPP

#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "coalas/bio.hpp"
#include "coalas/types.hpp"

namespace coalas {

struct Counts {
    std::size_t tp = 0, fp = 0, fn = 0;

    Counts& operator+=(const Counts& o) {
        tp += o.tp;
        fp += o.fp;
        fn += o.fn;
        return *this;
    }
};

struct MatchCounts {
    std::map<BorrowingType, Counts> per_type;

    Counts all() const {
        Counts c;
        for (auto& [t, v] : per_type) c += v;
        return c;
    }
    MatchCounts& operator+=(const MatchCounts& o) {
        for (auto& [t, v] : o.per_type) per_type[t] += v;
        return *this;
    }
};

struct Prf {
    double precision = 0, recall = 0, f1 = 0;  // percent
};

inline Prf prf(const Counts& c) {
    Prf r;
    if (c.tp + c.fp > 0) r.precision = 100.0 * c.tp / (c.tp + c.fp);
    if (c.tp + c.fn > 0) r.recall = 100.0 * c.tp / (c.tp + c.fn);
    if (r.precision + r.recall > 0)
        r.f1 = 2 * r.precision * r.recall / (r.precision + r.recall);
    return r;
}

inline double f1_from_pr(double p, double r) {
    return p + r > 0 ? 2 * p * r / (p + r) : 0.0;
}

inline MatchCounts match_spans(const std::vector<Span>& gold,
                               const std::vector<Span>& pred) {
    MatchCounts mc;
    mc.per_type[BorrowingType::ENG];
    mc.per_type[BorrowingType::OTHER];
    std::set<Span> gold_set(gold.begin(), gold.end());
    std::set<Span> pred_set(pred.begin(), pred.end());
    for (const Span& s : gold)
        if (pred_set.count(s)) ++mc.per_type[s.type].tp;
        else ++mc.per_type[s.type].fn;
    for (const Span& s : pred)
        if (!gold_set.count(s)) ++mc.per_type[s.type].fp;
    return mc;
}

struct EvalReport {
    MatchCounts counts;
    RepairMode mode = RepairMode::Conlleval;

    Prf for_type(BorrowingType t) const {
        auto it = counts.per_type.find(t);
        return prf(it == counts.per_type.end() ? Counts{} : it->second);
    }
    Prf overall() const { return prf(counts.all()); }
};

struct AlignmentError : std::runtime_error {
    std::size_t sentence;
    AlignmentError(std::size_t sent, const std::string& msg)
        : std::runtime_error("sentence " + std::to_string(sent) + ": " + msg),
          sentence(sent) {}
};

inline void check_aligned(const Dataset& gold, const Dataset& pred) {
    if (gold.sentences.size() != pred.sentences.size())
        throw AlignmentError(
            std::min(gold.sentences.size(), pred.sentences.size()),
            "sentence count mismatch (" + std::to_string(gold.sentences.size()) +
                " vs " + std::to_string(pred.sentences.size()) + ")");
    for (std::size_t s = 0; s < gold.sentences.size(); ++s) {
        const auto& g = gold.sentences[s];
        const auto& p = pred.sentences[s];
        if (g.size() != p.size())
            throw AlignmentError(s, "token count mismatch");
        for (std::size_t i = 0; i < g.size(); ++i)
            if (g.tokens[i].text != p.tokens[i].text)
                throw AlignmentError(s, "token text mismatch at position " +
                                            std::to_string(i));
    }
}

inline EvalReport evaluate(const Dataset& gold, const Dataset& pred,
                           RepairMode mode = RepairMode::Conlleval) {
    check_aligned(gold, pred);
    EvalReport report;
    report.mode = mode;
    report.counts.per_type[BorrowingType::ENG];
    report.counts.per_type[BorrowingType::OTHER];
    for (std::size_t s = 0; s < gold.sentences.size(); ++s)
        report.counts += match_spans(decode_tags(gold.sentences[s].tags, mode),
                                     decode_tags(pred.sentences[s].tags, mode));
    return report;
}

// Mean and sample standard deviation (n-1 denominator) per metric over
// repeated runs.
struct MeanStd {
    double mean = 0, std = 0;
};

inline MeanStd mean_std(const std::vector<double>& xs) {
    MeanStd r;
    if (xs.empty()) throw std::invalid_argument("empty sample");
    for (double v : xs) r.mean += v;
    r.mean /= static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double ss = 0;
        for (double v : xs) ss += (v - r.mean) * (v - r.mean);
        r.std = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    }
    return r;
}

struct RunAggregate {
    // Keyed by "<label>/<metric>", e.g. "ALL/f1".
    std::map<std::string, MeanStd> metrics;
};

inline RunAggregate aggregate_runs(const std::vector<EvalReport>& reports) {
    if (reports.empty()) throw std::invalid_argument("no reports to aggregate");
    RunAggregate agg;
    auto collect = [&](const std::string& label,
                       const std::vector<Prf>& values) {
        std::vector<double> p, r, f;
        for (const Prf& v : values) {
            p.push_back(v.precision);
            r.push_back(v.recall);
            f.push_back(v.f1);
        }
        agg.metrics[label + "/precision"] = mean_std(p);
        agg.metrics[label + "/recall"] = mean_std(r);
        agg.metrics[label + "/f1"] = mean_std(f);
    };
    std::vector<Prf> all, eng, other;
    for (const EvalReport& rep : reports) {
        all.push_back(rep.overall());
        eng.push_back(rep.for_type(BorrowingType::ENG));
        other.push_back(rep.for_type(BorrowingType::OTHER));
    }
    collect("ALL", all);
    collect("ENG", eng);
    collect("OTHER", other);
    return agg;
}

}  // namespace coalas

#endif
