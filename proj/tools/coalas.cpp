// coalas: span-labeling toolkit for unassimilated lexical borrowings.
//
// Subcommands: train, tag, evaluate, stats, select, compare, kappa,
// significance. Exit codes: 0 success, 1 usage error, 2 data error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <coalas/coalas.hpp>

using namespace coalas;
using nlohmann::json;

namespace {

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open " + path);
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path);
    return out;
}

Dataset read_corpus(const std::string& path, bool has_pos = false) {
    auto in = open_input(path);
    ColumnSchema schema;
    schema.has_pos = has_pos;
    try {
        return read_conll(in, schema, path);
    } catch (const ParseError& e) {
        throw DataError(path + ": " + e.what());
    }
}

std::string fmt2(double v) {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(2) << v;
    return ss.str();
}

std::string with_commas(std::size_t n) {
    std::string s = std::to_string(n);
    for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(s.size()) - 3; i > 0;
         i -= 3)
        s.insert(static_cast<std::size_t>(i), ",");
    return s;
}

RepairMode parse_mode(const std::string& s) {
    if (s == "conlleval") return RepairMode::Conlleval;
    if (s == "discard") return RepairMode::Discard;
    throw CLI::ValidationError("--mode must be conlleval or discard");
}

json prf_json(const Prf& p, const Counts& c) {
    return {{"precision", p.precision}, {"recall", p.recall}, {"f1", p.f1},
            {"tp", c.tp},               {"fp", c.fp},         {"fn", c.fn}};
}

json report_json(const EvalReport& rep) {
    json j;
    j["ALL"] = prf_json(rep.overall(), rep.counts.all());
    j["ENG"] = prf_json(rep.for_type(BorrowingType::ENG),
                        rep.counts.per_type.at(BorrowingType::ENG));
    j["OTHER"] = prf_json(rep.for_type(BorrowingType::OTHER),
                          rep.counts.per_type.at(BorrowingType::OTHER));
    return j;
}

void print_report_table(const EvalReport& rep, std::ostream& out) {
    out << std::left << std::setw(8) << "Label" << std::right << std::setw(10)
        << "Precision" << std::setw(10) << "Recall" << std::setw(10) << "F1"
        << std::setw(8) << "TP" << std::setw(8) << "FP" << std::setw(8) << "FN"
        << "\n";
    auto row = [&](const std::string& label, const Prf& p, const Counts& c) {
        out << std::left << std::setw(8) << label << std::right << std::setw(10)
            << fmt2(p.precision) << std::setw(10) << fmt2(p.recall)
            << std::setw(10) << fmt2(p.f1) << std::setw(8) << c.tp
            << std::setw(8) << c.fp << std::setw(8) << c.fn << "\n";
    };
    row("ALL", rep.overall(), rep.counts.all());
    row("ENG", rep.for_type(BorrowingType::ENG),
        rep.counts.per_type.at(BorrowingType::ENG));
    row("OTHER", rep.for_type(BorrowingType::OTHER),
        rep.counts.per_type.at(BorrowingType::OTHER));
}

// ---------------------------------------------------------------- train --

int cmd_train(const std::string& corpus_path, const std::string& model_path,
              const std::string& embeddings_path, bool has_pos, TrainConfig tc,
              int window, bool json_out) {
    Dataset ds = read_corpus(corpus_path, has_pos);
    FeatureConfig cfg;
    cfg.window = window;
    EmbeddingTable emb;
    const EmbeddingTable* emb_ptr = nullptr;
    if (!embeddings_path.empty()) {
        auto in = open_input(embeddings_path);
        emb = load_embeddings(in);
        emb_ptr = &emb;
    } else {
        cfg.word_embedding = false;
    }
    auto [model, report] = train(ds, cfg, tc, emb_ptr);
    {
        auto out = open_output(model_path);
        save_model(model, out);
    }
    if (json_out) {
        json j{{"iterations", report.iterations},
               {"converged", report.converged},
               {"active_features", report.active_features},
               {"final_objective", report.objective_trace.back()},
               {"attributes", model.vocabulary.size()}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "trained on " << ds.sentences.size() << " sentences\n"
                  << "attributes: " << model.vocabulary.size() << "\n"
                  << "iterations: " << report.iterations
                  << (report.converged ? " (converged)" : " (max reached)")
                  << "\n"
                  << "active features: " << report.active_features << "\n"
                  << "final objective: " << report.objective_trace.back()
                  << "\n"
                  << "model written to " << model_path << "\n";
    }
    return 0;
}

// ------------------------------------------------------------------ tag --

int cmd_tag(const std::string& model_path, const std::string& input_path,
            const std::string& output_path, const std::string& embeddings_path) {
    CrfModel model;
    {
        auto in = open_input(model_path);
        try {
            model = load_model(in);
        } catch (const ModelIoError& e) {
            throw DataError(model_path + ": " + e.what());
        }
    }
    EmbeddingTable emb;
    const EmbeddingTable* emb_ptr = nullptr;
    if (!embeddings_path.empty()) {
        auto in = open_input(embeddings_path);
        emb = load_embeddings(in);
        emb_ptr = &emb;
    }

    // Input: one token per line, first column used; blank line separates
    // sentences. Tag columns, when present, are ignored.
    auto in = open_input(input_path);
    std::vector<std::vector<Token>> sentences;
    std::vector<Token> cur;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) {
            if (!cur.empty()) sentences.push_back(std::move(cur));
            cur = {};
            continue;
        }
        std::istringstream ss(line);
        std::string tok;
        ss >> tok;
        cur.push_back({tok, {}});
    }
    if (!cur.empty()) sentences.push_back(std::move(cur));

    auto tag_lists = tag_sentences(model, sentences, emb_ptr);
    Dataset out_ds;
    for (std::size_t s = 0; s < sentences.size(); ++s)
        out_ds.sentences.push_back({sentences[s], tag_lists[s]});
    auto out = open_output(output_path);
    write_conll(out_ds, out);
    std::cout << "tagged " << sentences.size() << " sentences -> "
              << output_path << "\n";
    return 0;
}

// ------------------------------------------------------------- evaluate --

int cmd_evaluate(const std::string& gold_path,
                 const std::vector<std::string>& pred_paths, RepairMode mode,
                 bool json_out) {
    Dataset gold = read_corpus(gold_path);
    std::vector<EvalReport> reports;
    for (const auto& p : pred_paths) {
        Dataset pred = read_corpus(p);
        try {
            reports.push_back(evaluate(gold, pred, mode));
        } catch (const AlignmentError& e) {
            throw DataError(p + ": " + e.what());
        }
    }
    if (reports.size() == 1) {
        if (json_out)
            std::cout << report_json(reports[0]).dump(2) << "\n";
        else
            print_report_table(reports[0], std::cout);
        return 0;
    }
    auto agg = aggregate_runs(reports);
    if (json_out) {
        json j;
        j["runs"] = reports.size();
        for (auto& [k, v] : agg.metrics)
            j["aggregate"][k] = {{"mean", v.mean}, {"std", v.std}};
        j["per_run"] = json::array();
        for (auto& rep : reports) j["per_run"].push_back(report_json(rep));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << reports.size() << " runs, mean +/- std\n";
        for (const char* label : {"ALL", "ENG", "OTHER"}) {
            std::cout << std::left << std::setw(8) << label;
            for (const char* metric : {"precision", "recall", "f1"}) {
                auto& ms = agg.metrics.at(std::string(label) + "/" + metric);
                std::cout << "  " << metric << " " << fmt2(ms.mean) << " +/- "
                          << fmt2(ms.std);
            }
            std::cout << "\n";
        }
    }
    return 0;
}

// ---------------------------------------------------------------- stats --

int cmd_stats(const std::string& corpus_path, const std::string& ref_path,
              bool json_out) {
    Dataset ds = read_corpus(corpus_path);
    Dataset ref;
    const Dataset* ref_ptr = nullptr;
    if (!ref_path.empty()) {
        ref = read_corpus(ref_path);
        ref_ptr = &ref;
    }
    CorpusStats st;
    try {
        st = corpus_stats(ds, ref_ptr);
    } catch (const std::domain_error& e) {
        throw DataError(e.what());
    }
    if (json_out) {
        json j{{"tokens", st.token_count},
               {"eng_spans", st.span_count_per_type.at(BorrowingType::ENG)},
               {"other_spans", st.span_count_per_type.at(BorrowingType::OTHER)},
               {"unique_borrowings", st.unique_borrowing_count},
               {"density_per_1000", st.density_per_1000}};
        if (st.oov_unique_rate) j["oov_unique_rate"] = *st.oov_unique_rate;
        if (st.oov_span_rate) j["oov_span_rate"] = *st.oov_span_rate;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "Tokens  " << with_commas(st.token_count) << "\n"
                  << "ENG     "
                  << with_commas(st.span_count_per_type.at(BorrowingType::ENG))
                  << "\n"
                  << "OTHER   "
                  << with_commas(st.span_count_per_type.at(BorrowingType::OTHER))
                  << "\n"
                  << "Unique  " << with_commas(st.unique_borrowing_count) << "\n"
                  << "Density " << fmt2(st.density_per_1000)
                  << " per 1,000 tokens\n";
        if (st.oov_unique_rate)
            std::cout << "OOV unique borrowings "
                      << fmt2(100 * *st.oov_unique_rate) << "%\n";
        if (st.oov_span_rate)
            std::cout << "OOV borrowing spans   "
                      << fmt2(100 * *st.oov_span_rate) << "%\n";
    }
    return 0;
}

// --------------------------------------------------------------- select --

// Article mode input: lines "# id <article-id>" start a new article;
// everything else is token-per-line CoNLL without tags required.
int cmd_select(const std::string& input_path, const std::string& wordlist_path,
               const std::string& training_path, const std::string& model_path,
               bool articles_mode, std::size_t threshold, bool json_out) {
    SelectionResources res;
    if (!wordlist_path.empty()) {
        auto in = open_input(wordlist_path);
        res.english_wordlist = load_wordlist(in);
    }
    Dataset training = read_corpus(training_path);
    res.training_vocabulary = dataset_vocabulary(training);
    CrfModel model;
    if (!model_path.empty()) {
        auto in = open_input(model_path);
        try {
            model = load_model(in);
        } catch (const ModelIoError& e) {
            throw DataError(model_path + ": " + e.what());
        }
        res.model = &model;
    }

    auto in = open_input(input_path);
    std::vector<Article> articles;
    articles.push_back({"0", {}});
    std::vector<Token> cur;
    std::string line;
    auto flush = [&] {
        if (!cur.empty()) articles.back().sentences.push_back(std::move(cur));
        cur = {};
    };
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind("# id ", 0) == 0) {
            flush();
            articles.push_back({line.substr(5), {}});
            continue;
        }
        if (line.find_first_not_of(" \t") == std::string::npos) {
            flush();
            continue;
        }
        std::istringstream ss(line);
        std::string tok;
        ss >> tok;
        cur.push_back({tok, {}});
    }
    flush();
    if (articles.size() > 1 && articles.front().sentences.empty())
        articles.erase(articles.begin());

    if (articles_mode) {
        auto ids = select_articles(articles, res, threshold);
        if (json_out) {
            json j{{"selected", ids}, {"total", articles.size()}};
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& id : ids) std::cout << id << "\n";
            std::cerr << "selected " << ids.size() << " of " << articles.size()
                      << " articles\n";
        }
    } else {
        std::vector<std::vector<Token>> sentences;
        for (const auto& art : articles)
            for (const auto& s : art.sentences) sentences.push_back(s);
        auto idx = select_sentences(sentences, res);
        if (json_out) {
            json j{{"selected", idx}, {"total", sentences.size()}};
            std::cout << j.dump(2) << "\n";
        } else {
            for (auto i : idx) std::cout << i << "\n";
            std::cerr << "selected " << idx.size() << " of " << sentences.size()
                      << " sentences\n";
        }
    }
    return 0;
}

// -------------------------------------------------------------- compare --

int cmd_compare(const std::string& gold_path,
                const std::vector<std::string>& pred_paths,
                const std::string& lexicon_path, bool json_out) {
    Dataset gold = read_corpus(gold_path);
    std::vector<Dataset> preds;
    for (const auto& p : pred_paths) preds.push_back(read_corpus(p));
    OutcomeMatrix matrix;
    try {
        matrix = align_outputs(gold, preds);
    } catch (const AlignmentError& e) {
        throw DataError(e.what());
    }
    auto ce = common_errors(matrix);

    std::set<std::string> lexicon;
    if (!lexicon_path.empty()) {
        auto in = open_input(lexicon_path);
        lexicon = load_wordlist(in);
    }
    std::map<std::string, std::size_t> category_hist;
    auto category_name = [](ErrorCategory c) {
        switch (c) {
            case ErrorCategory::AllUppercase: return "all_uppercase";
            case ErrorCategory::SentenceInitialTitlecase:
                return "sentence_initial_titlecase";
            case ErrorCategory::SpanishHomograph: return "spanish_homograph";
            default: return "other";
        }
    };
    json missed = json::array();
    for (const SpanRef& ref : ce.missed_by_all) {
        const auto& sent = gold.sentences[ref.sentence];
        std::vector<Token> span_toks(sent.tokens.begin() + ref.span.start,
                                     sent.tokens.begin() + ref.span.end);
        auto cat = categorize_error(span_toks, ref.span.start, lexicon);
        ++category_hist[category_name(cat)];
        std::string surface;
        for (std::size_t i = ref.span.start; i < ref.span.end; ++i) {
            if (i > ref.span.start) surface += ' ';
            surface += sent.tokens[i].text;
        }
        std::string context;
        for (std::size_t i = 0; i < sent.size(); ++i) {
            if (i) context += ' ';
            context += sent.tokens[i].text;
        }
        missed.push_back({{"sentence", ref.sentence},
                          {"start", ref.span.start},
                          {"end", ref.span.end},
                          {"type", std::string(to_string(ref.span.type))},
                          {"surface", surface},
                          {"category", category_name(cat)},
                          {"context", context}});
    }

    json j;
    j["models"] = pred_paths;
    j["gold_spans"] = matrix.gold_refs.size();
    j["missed_by_all"] = {{"spans", ce.missed_by_all.size()},
                          {"tokens", ce.missed_token_count},
                          {"listing", missed}};
    j["false_positive_by_all"] = {{"runs", ce.false_positive_by_all.size()},
                                  {"tokens", ce.false_positive_token_count}};
    j["category_histogram"] = category_hist;
    for (std::size_t k = 0; k < preds.size(); ++k) {
        json jm;
        jm["file"] = pred_paths[k];
        std::size_t tp = 0, fn = 0, confusion = 0;
        for (const auto& outcomes : matrix.gold_outcomes) {
            if (outcomes[k] == SpanOutcome::Tp) ++tp;
            if (outcomes[k] == SpanOutcome::Fn) ++fn;
            if (outcomes[k] == SpanOutcome::TypeConfusion) ++confusion;
        }
        jm["tp"] = tp;
        jm["fn"] = fn;
        jm["type_confusion"] = confusion;
        jm["fp"] = matrix.false_positives[k].size();
        if (preds.size() > 1) {
            auto ua = unique_answers(matrix, k);
            jm["unique_correct_tokens"] = ua.unique_correct.size();
            jm["unique_false_positive_tokens"] = ua.unique_incorrect_fp.size();
            jm["unique_correct_o_tokens"] = ua.unique_correct_o.size();
        }
        j["per_model"].push_back(jm);
    }

    if (json_out) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "gold spans: " << matrix.gold_refs.size() << "\n"
                  << "missed by all models: " << ce.missed_by_all.size()
                  << " spans / " << ce.missed_token_count << " tokens\n"
                  << "false positives shared by all models: "
                  << ce.false_positive_by_all.size() << " runs / "
                  << ce.false_positive_token_count << " tokens\n";
        std::cout << "missed-span categories:\n";
        for (auto& [name, count] : category_hist)
            std::cout << "  " << std::left << std::setw(28) << name << count
                      << "\n";
        for (const auto& jm : j["per_model"]) {
            std::cout << jm["file"].get<std::string>()
                      << ": tp " << jm["tp"] << ", fn " << jm["fn"]
                      << ", fp " << jm["fp"] << ", type confusion "
                      << jm["type_confusion"];
            if (jm.contains("unique_correct_tokens"))
                std::cout << ", unique correct " << jm["unique_correct_tokens"]
                          << ", unique fp "
                          << jm["unique_false_positive_tokens"];
            std::cout << "\n";
        }
        std::cout << "missed spans:\n";
        for (const auto& item : missed)
            std::cout << "  [" << item["category"].get<std::string>() << "] "
                      << item["surface"].get<std::string>() << " ("
                      << item["type"].get<std::string>() << ") in: "
                      << item["context"].get<std::string>() << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- kappa --

int cmd_kappa(const std::string& a_path, const std::string& b_path,
              bool json_out) {
    Dataset a = read_corpus(a_path);
    Dataset b = read_corpus(b_path);
    try {
        check_aligned(a, b);
    } catch (const AlignmentError& e) {
        throw DataError(e.what());
    }
    std::vector<Tag> ta, tb;
    for (const auto& s : a.sentences)
        ta.insert(ta.end(), s.tags.begin(), s.tags.end());
    for (const auto& s : b.sentences)
        tb.insert(tb.end(), s.tags.begin(), s.tags.end());
    double k = cohens_kappa(ta, tb);
    if (json_out)
        std::cout << json{{"kappa", k}, {"tokens", ta.size()}}.dump(2) << "\n";
    else
        std::cout << "kappa " << std::fixed << std::setprecision(4) << k
                  << " over " << ta.size() << " tokens\n";
    return 0;
}

// --------------------------------------------------------- significance --

std::vector<double> read_scores(const std::string& path) {
    auto in = open_input(path);
    std::vector<double> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            std::size_t pos;
            double v = std::stod(line, &pos);
            if (pos != line.size()) throw std::invalid_argument(line);
            out.push_back(v);
        } catch (const std::exception&) {
            throw DataError(path + ": line " + std::to_string(lineno) +
                            ": not a number: " + line);
        }
    }
    if (out.empty()) throw DataError(path + ": no scores");
    return out;
}

int cmd_significance(const std::string& a_path, const std::string& b_path,
                     bool json_out) {
    auto a = read_scores(a_path);
    auto b = read_scores(b_path);
    auto res = wilcoxon_rank_sum(a, b);
    if (json_out)
        std::cout << json{{"statistic", res.statistic},
                          {"p_two_sided", res.p_two_sided},
                          {"exact", res.exact}}
                         .dump(2)
                  << "\n";
    else
        std::cout << "rank sum W = " << res.statistic << "\n"
                  << "two-sided p = " << std::setprecision(6) << res.p_two_sided
                  << (res.exact ? " (exact)" : " (normal approximation)")
                  << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coalas: lexical borrowing span-labeling toolkit"};
    app.require_subcommand(1);
    bool json_out = false;
    app.add_flag("--json", json_out, "machine-readable output");

    // train
    auto* train_cmd = app.add_subcommand("train", "train a CRF model");
    std::string corpus, model_out, embeddings;
    bool has_pos = false;
    TrainConfig tc;
    int window = 2;
    train_cmd->add_option("--corpus", corpus, "training corpus (CoNLL)")
        ->required();
    train_cmd->add_option("--model", model_out, "output model file")->required();
    train_cmd->add_option("--embeddings", embeddings, "embedding table file");
    train_cmd->add_flag("--pos", has_pos, "corpus has a POS column");
    train_cmd->add_option("--c1", tc.c1, "L1 coefficient");
    train_cmd->add_option("--c2", tc.c2, "L2 coefficient");
    train_cmd->add_option("--max-iter", tc.max_iterations, "max iterations");
    train_cmd->add_option("--tolerance", tc.tolerance, "stop threshold");
    train_cmd->add_option("--window", window, "feature window");

    // tag
    auto* tag_cmd = app.add_subcommand("tag", "tag sentences with a model");
    std::string tag_model, tag_input, tag_output, tag_embeddings;
    tag_cmd->add_option("--model", tag_model, "model file")->required();
    tag_cmd->add_option("--input", tag_input, "token-per-line input")->required();
    tag_cmd->add_option("--output", tag_output, "predictions file")->required();
    tag_cmd->add_option("--embeddings", tag_embeddings, "embedding table file");

    // evaluate
    auto* eval_cmd = app.add_subcommand("evaluate", "span-exact evaluation");
    std::string gold;
    std::vector<std::string> preds;
    std::string mode_str = "conlleval";
    eval_cmd->add_option("--gold", gold, "gold corpus")->required();
    eval_cmd->add_option("--pred", preds, "prediction file(s)")->required();
    eval_cmd->add_option("--mode", mode_str, "conlleval|discard");

    // stats
    auto* stats_cmd = app.add_subcommand("stats", "corpus statistics");
    std::string stats_corpus, stats_ref;
    stats_cmd->add_option("--corpus", stats_corpus, "corpus file")->required();
    stats_cmd->add_option("--reference", stats_ref,
                          "training corpus for OOV rates");

    // select
    auto* select_cmd = app.add_subcommand("select", "data selection pipeline");
    std::string sel_input, sel_wordlist, sel_training, sel_model;
    bool sel_articles = false;
    std::size_t sel_threshold = 5;
    select_cmd->add_option("--input", sel_input, "candidate text")->required();
    select_cmd->add_option("--wordlist", sel_wordlist, "English wordlist");
    select_cmd
        ->add_option("--training", sel_training, "training corpus (vocabulary)")
        ->required();
    select_cmd->add_option("--model", sel_model, "CRF model file");
    select_cmd->add_flag("--articles", sel_articles,
                         "article mode (threshold rule)");
    select_cmd->add_option("--threshold", sel_threshold,
                           "article candidate threshold (strict >)");

    // compare
    auto* compare_cmd =
        app.add_subcommand("compare", "cross-model error analysis");
    std::string cmp_gold, cmp_lexicon;
    std::vector<std::string> cmp_preds;
    compare_cmd->add_option("--gold", cmp_gold, "gold corpus")->required();
    compare_cmd->add_option("--pred", cmp_preds, "prediction files")->required();
    compare_cmd->add_option("--lexicon", cmp_lexicon, "Spanish wordlist");

    // kappa
    auto* kappa_cmd =
        app.add_subcommand("kappa", "inter-annotator agreement");
    std::string kappa_a, kappa_b;
    kappa_cmd->add_option("--a", kappa_a, "first annotation")->required();
    kappa_cmd->add_option("--b", kappa_b, "second annotation")->required();

    // significance
    auto* sig_cmd =
        app.add_subcommand("significance", "Wilcoxon rank-sum test");
    std::string sig_a, sig_b;
    sig_cmd->add_option("--a", sig_a, "first score list")->required();
    sig_cmd->add_option("--b", sig_b, "second score list")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 1;
    }

    try {
        if (*train_cmd)
            return cmd_train(corpus, model_out, embeddings, has_pos, tc, window,
                             json_out);
        if (*tag_cmd) return cmd_tag(tag_model, tag_input, tag_output,
                                     tag_embeddings);
        if (*eval_cmd)
            return cmd_evaluate(gold, preds, parse_mode(mode_str), json_out);
        if (*stats_cmd) return cmd_stats(stats_corpus, stats_ref, json_out);
        if (*select_cmd)
            return cmd_select(sel_input, sel_wordlist, sel_training, sel_model,
                              sel_articles, sel_threshold, json_out);
        if (*compare_cmd)
            return cmd_compare(cmp_gold, cmp_preds, cmp_lexicon, json_out);
        if (*kappa_cmd) return cmd_kappa(kappa_a, kappa_b, json_out);
        if (*sig_cmd) return cmd_significance(sig_a, sig_b, json_out);
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
