#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "strofa/corpus.hpp"
#include "strofa/errors.hpp"
#include "strofa/eval.hpp"
#include "strofa/lexicon.hpp"
#include "strofa/options.hpp"
#include "strofa/rhyme.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct SharedArgs {
    std::string lexicon = "data/lexicon.tsv";
    std::string function_words;
    std::string collocations;
    std::string config;
    int jobs = 1;
    bool strict = false;
};

void add_shared(CLI::App* cmd, SharedArgs& args) {
    cmd->add_option("--lexicon", args.lexicon, "Accent dictionary TSV")
        ->capture_default_str();
    cmd->add_option("--function-words", args.function_words,
                    "Closed-class word list (default: function_words.txt next to the lexicon)");
    cmd->add_option("--collocations", args.collocations,
                    "Collocation table TSV (default: collocations.tsv next to the lexicon)");
    cmd->add_option("--config", args.config, "Engine options file (TOML-style key = value)");
    cmd->add_option("--jobs", args.jobs, "Worker threads for corpus processing")
        ->capture_default_str();
    cmd->add_flag("--strict", args.strict, "Abort on the first malformed record");
}

strofa::Lexicon load_lexicon(const SharedArgs& args) {
    strofa::LexiconConfig cfg;
    cfg.strict = args.strict;
    const std::filesystem::path lex_path(args.lexicon);
    auto sibling = [&](const std::string& explicit_path, const char* name) {
        if (!explicit_path.empty()) return std::filesystem::path(explicit_path);
        auto p = lex_path.parent_path() / name;
        return std::filesystem::exists(p) ? p : std::filesystem::path();
    };
    cfg.function_words_path = sibling(args.function_words, "function_words.txt");
    cfg.collocations_path = sibling(args.collocations, "collocations.tsv");
    return strofa::Lexicon::load(lex_path, cfg);
}

strofa::EngineOptions load_engine_options(const SharedArgs& args) {
    if (args.config.empty()) return {};
    return strofa::load_options(args.config);
}

std::string read_all(const std::string& input) {
    if (input.empty() || input == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(input);
    if (!in) throw strofa::LoadError("cannot open input: " + input);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> split_poems(const std::string& text) {
    std::vector<std::string> poems;
    std::string current;
    std::istringstream in(text);
    std::string line;
    auto flush = [&] {
        if (current.find_first_not_of(" \t\r\n") != std::string::npos) poems.push_back(current);
        current.clear();
    };
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) {
            flush();
        } else {
            current += line;
            current += '\n';
        }
    }
    flush();
    return poems;
}

int cmd_analyze(const SharedArgs& args, const std::string& input) {
    const strofa::Lexicon lex = load_lexicon(args);
    const strofa::EngineOptions options = load_engine_options(args);
    const std::vector<std::string> poems = split_poems(read_all(input));
    if (poems.empty()) {
        std::cerr << "analyze: empty input\n";
        std::cout << ordered_json{{"poems", ordered_json::array()}}.dump(2) << '\n';
        return kExitOk;
    }

    std::vector<ordered_json> docs(poems.size());
    std::vector<std::string> errors(poems.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, args.jobs))
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(poems.size()); ++i) {
        const auto idx = static_cast<std::size_t>(i);
        try {
            docs[idx] = strofa::scansion_to_json(
                strofa::analyze_poem(poems[idx], lex, options));
        } catch (const strofa::Error& e) {
            errors[idx] = e.what();
        }
    }

    ordered_json out;
    out["poems"] = ordered_json::array();
    for (std::size_t i = 0; i < poems.size(); ++i) {
        if (!errors[i].empty()) {
            if (args.strict) {
                std::cerr << "analyze: poem " << i + 1 << ": " << errors[i] << '\n';
                return kExitData;
            }
            ordered_json err;
            err["error"] = errors[i];
            out["poems"].push_back(err);
        } else {
            out["poems"].push_back(docs[i]);
        }
    }
    std::cout << out.dump(2) << '\n';
    return kExitOk;
}

int cmd_filter(const SharedArgs& args, const std::string& input, double min_technicality,
               const std::string& output) {
    const strofa::Lexicon lex = load_lexicon(args);
    const strofa::EngineOptions options = load_engine_options(args);

    std::ifstream file;
    std::istream* in = &std::cin;
    if (!input.empty() && input != "-") {
        file.open(input);
        if (!file) throw strofa::LoadError("cannot open input: " + input);
        in = &file;
    }
    std::ofstream out_file;
    std::ostream* out = &std::cout;
    if (!output.empty() && output != "-") {
        out_file.open(output);
        if (!out_file) throw strofa::LoadError("cannot open output: " + output);
        out = &out_file;
    }

    std::uint64_t retained = 0;
    strofa::CorpusRunOptions run{args.jobs, args.strict, 256};
    auto sink = [&](const strofa::CorpusRecord& rec, const strofa::RecordResult& res) {
        if (!res.ok) return;
        bool keep = true;
        for (const auto& line : res.scansion.lines)
            if (line.scannable && line.technicality < min_technicality) keep = false;
        if (!keep) return;
        ++retained;
        ordered_json j = rec.raw;
        j["meter"] = std::string(strofa::meter_name(res.scansion.poem_meter));
        j["technicality"] = res.scansion.poem_technicality;
        *out << j.dump() << '\n';
    };
    const strofa::ProcessSummary summary =
        strofa::process_corpus(*in, lex, options, run, sink);

    ordered_json rep;
    rep["total"] = summary.total;
    rep["retained"] = retained;
    rep["malformed"] = summary.malformed;
    rep["failed"] = summary.failed;
    rep["duplicate_ids"] = summary.duplicate_ids;
    std::cerr << rep.dump() << '\n';
    return kExitOk;
}

int cmd_stats(const SharedArgs& args, const std::string& input,
              const std::string& thresholds_csv, const std::string& format,
              const std::string& histogram_csv) {
    const strofa::Lexicon lex = load_lexicon(args);
    const strofa::EngineOptions options = load_engine_options(args);

    std::vector<double> thresholds;
    std::stringstream ts(thresholds_csv);
    std::string item;
    while (std::getline(ts, item, ',')) {
        if (item.empty()) continue;
        const double v = std::stod(item);
        if (v < 0.0 || v > 1.0) throw strofa::LoadError("threshold out of [0,1]: " + item);
        thresholds.push_back(v);
    }

    std::ifstream file;
    std::istream* in = &std::cin;
    if (!input.empty() && input != "-") {
        file.open(input);
        if (!file) throw strofa::LoadError("cannot open input: " + input);
        in = &file;
    }

    strofa::CorpusStats stats(thresholds);
    strofa::CorpusRunOptions run{args.jobs, args.strict, 256};
    auto sink = [&](const strofa::CorpusRecord&, const strofa::RecordResult& res) {
        if (res.ok) stats.add(res.scansion);
    };
    strofa::process_corpus(*in, lex, options, run, sink);

    if (format == "tsv")
        std::cout << stats.to_tsv();
    else
        std::cout << stats.to_json().dump(2) << '\n';
    if (!histogram_csv.empty()) {
        std::ofstream csv(histogram_csv);
        if (!csv) throw strofa::LoadError("cannot open histogram output: " + histogram_csv);
        csv << stats.histogram_csv();
    }
    return kExitOk;
}

int cmd_eval(const SharedArgs& args, const std::string& gold_path, bool verbose) {
    const strofa::Lexicon lex = load_lexicon(args);
    const strofa::EngineOptions options = load_engine_options(args);

    const strofa::GoldFile gold = strofa::parse_gold(gold_path, args.strict);
    for (const auto& issue : gold.issues)
        std::cerr << "eval: record " << issue.record_no << ": " << issue.message << '\n';
    if (gold.fragments.empty()) {
        std::cerr << "eval: no valid fragments\n";
        return kExitData;
    }

    std::vector<strofa::FragmentDiff> diffs;
    const strofa::EvalReport report =
        strofa::evaluate_with_diffs(gold.fragments, lex, options, verbose ? &diffs : nullptr);

    ordered_json j;
    j["fragments"] = report.n_fragments;
    j["lines"] = report.n_lines;
    j["line_stress_exact"] = report.line_stress_exact;
    j["syllable_stress_accuracy"] = report.syllable_stress_accuracy;
    j["scheme_exact"] = report.scheme_exact;
    std::cout << j.dump(2) << '\n';

    if (verbose) {
        for (std::size_t f = 0; f < diffs.size(); ++f) {
            const auto& d = diffs[f];
            std::cout << "# fragment " << f + 1 << "  scheme gold=" << d.gold_scheme
                      << " pred=" << d.predicted_scheme
                      << (d.gold_scheme == d.predicted_scheme ? "" : "  <-- scheme mismatch")
                      << '\n';
            for (const auto& line : d.lines) {
                std::cout << (line.exact ? "  = " : "  ! ") << "gold: " << line.gold << '\n';
                if (!line.exact) std::cout << "    pred: " << line.predicted << '\n';
            }
        }
    }
    return gold.issues.empty() || !args.strict ? kExitOk : kExitData;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Scansion, technicality scoring, rhyme detection and corpus tooling "
                 "for Russian syllabo-tonic verse"};
    app.require_subcommand(1);

    SharedArgs analyze_args, filter_args, stats_args, eval_args;
    std::string analyze_input = "-";
    std::string filter_input = "-", filter_output = "-";
    double min_technicality = 0.5;
    std::string stats_input = "-", thresholds = "0.5,0.6,0.7,0.8,0.9", format = "json",
                histogram_csv;
    std::string gold_path;
    bool verbose = false;

    CLI::App* analyze = app.add_subcommand(
        "analyze", "Scan poems (blank-line separated text) and print the analysis as JSON");
    analyze->add_option("input", analyze_input, "Input file, or '-' for stdin");
    add_shared(analyze, analyze_args);

    CLI::App* filter = app.add_subcommand(
        "filter", "Keep JSONL records whose every line clears a technicality threshold");
    filter->add_option("input", filter_input, "Corpus JSONL, or '-' for stdin");
    filter->add_option("--min-technicality", min_technicality, "Per-line threshold in [0,1]")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    filter->add_option("--output,-o", filter_output, "Output JSONL, or '-' for stdout");
    add_shared(filter, filter_args);

    CLI::App* stats = app.add_subcommand("stats", "Corpus meter/technicality statistics");
    stats->add_option("input", stats_input, "Corpus JSONL, or '-' for stdin");
    stats->add_option("--thresholds", thresholds, "Comma-separated thresholds")
        ->capture_default_str();
    stats->add_option("--format", format, "json or tsv")
        ->check(CLI::IsMember({"json", "tsv"}))
        ->capture_default_str();
    stats->add_option("--histogram-csv", histogram_csv,
                      "Write the 50-bin line-score histogram as CSV");
    add_shared(stats, stats_args);

    CLI::App* eval = app.add_subcommand(
        "eval", "Score the engine against gold stress/rhyme annotations (JSONL)");
    eval->add_option("gold", gold_path, "Gold annotation JSONL")->required();
    eval->add_flag("--verbose,-v", verbose, "Print per-line gold/predicted diffs");
    add_shared(eval, eval_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(analyze_args, analyze_input);
        if (filter->parsed())
            return cmd_filter(filter_args, filter_input, min_technicality, filter_output);
        if (stats->parsed())
            return cmd_stats(stats_args, stats_input, thresholds, format, histogram_csv);
        if (eval->parsed()) return cmd_eval(eval_args, gold_path, verbose);
    } catch (const strofa::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}
