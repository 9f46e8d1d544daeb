#include "strofa/eval.hpp"

#include <fstream>
#include <sstream>

#include "strofa/errors.hpp"
#include "strofa/rhyme.hpp"
#include "strofa/scansion.hpp"

namespace strofa {

namespace {

using nlohmann::ordered_json;

void validate_fragment(const AnnotatedFragment& frag) {
    if (frag.scheme.size() != frag.lines.size())
        throw LoadError("scheme length " + std::to_string(frag.scheme.size()) +
                        " does not match line count " + std::to_string(frag.lines.size()));
    for (const std::string& line : frag.lines) gold_stress_set(line);  // validates marks
}

AnnotatedFragment fragment_from_json(const ordered_json& j) {
    if (!j.is_object()) throw LoadError("record is not a JSON object");
    if (!j.contains("text") || !j["text"].is_array())
        throw LoadError("record lacks a 'text' array");
    if (!j.contains("scheme") || !j["scheme"].is_string())
        throw LoadError("record lacks a 'scheme' string");
    AnnotatedFragment frag;
    for (const auto& line : j["text"]) {
        if (!line.is_string()) throw LoadError("'text' entries must be strings");
        frag.lines.push_back(line.get<std::string>());
    }
    frag.scheme = j["scheme"].get<std::string>();
    if (j.contains("meta")) frag.meta = j["meta"];
    validate_fragment(frag);
    return frag;
}

}  // namespace

std::set<int> gold_stress_set(std::string_view marked_line) {
    const std::u32string cps = decode_utf8(marked_line);
    std::set<int> out;
    int syllable = 0;  // 1-based after increment
    for (std::size_t i = 0; i < cps.size(); ++i) {
        if (is_cyrillic_vowel(cps[i])) ++syllable;
        if (cps[i] == kCombiningAcute) {
            if (i == 0 || !is_cyrillic_vowel(cps[i - 1]))
                throw LoadError("stress mark does not follow a vowel letter");
            out.insert(syllable - 1);  // 0-based
        }
    }
    return out;
}

GoldFile parse_gold_text(std::string_view jsonl, bool strict) {
    GoldFile out;
    std::istringstream in{std::string(jsonl)};
    std::string raw;
    int record_no = 0;
    while (std::getline(in, raw)) {
        ++record_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (raw.empty()) continue;
        try {
            out.fragments.push_back(fragment_from_json(ordered_json::parse(raw)));
        } catch (const std::exception& e) {
            if (strict)
                throw LoadError("record " + std::to_string(record_no) + ": " + e.what());
            out.issues.push_back({record_no, e.what()});
        }
    }
    return out;
}

GoldFile parse_gold(const std::filesystem::path& path, bool strict) {
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open gold annotation file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_gold_text(buf.str(), strict);
}

std::string serialize_gold(std::span<const AnnotatedFragment> fragments) {
    std::string out;
    for (const AnnotatedFragment& frag : fragments) {
        ordered_json j;
        j["text"] = frag.lines;
        j["scheme"] = frag.scheme;
        if (!frag.meta.is_null()) j["meta"] = frag.meta;
        out += j.dump();
        out += '\n';
    }
    return out;
}

EvalReport evaluate_with_diffs(std::span<const AnnotatedFragment> fragments, const Lexicon& lex,
                               const EngineOptions& options, std::vector<FragmentDiff>* diffs) {
    if (fragments.empty()) throw DegenerateInputError("no fragments to evaluate");

    int n_lines = 0, exact_lines = 0, scheme_hits = 0;
    long long syll_total = 0, syll_match = 0;

    for (const AnnotatedFragment& frag : fragments) {
        std::string plain;
        for (const std::string& line : frag.lines) {
            plain += strip_marks(line);
            plain += '\n';
        }
        PoemScansion poem = analyze_poem(plain, lex, options);

        FragmentDiff diff;
        diff.gold_scheme = frag.scheme;
        diff.predicted_scheme = poem.rhyme_scheme;
        if (poem.rhyme_scheme == frag.scheme) ++scheme_hits;

        for (std::size_t li = 0; li < frag.lines.size() && li < poem.lines.size(); ++li) {
            const LineScansion& ls = poem.lines[li];
            std::set<int> gold = gold_stress_set(frag.lines[li]);
            std::set<int> pred;
            for (int s = 0; s < ls.assignment.map.total_syllables; ++s)
                if (ls.scannable && ls.assignment.stressed[static_cast<std::size_t>(s)])
                    pred.insert(s);

            // Closed-class monosyllables unmarked in gold fall outside the
            // comparison domain.
            std::set<int> excluded;
            for (std::size_t t = 0; t < ls.line.tokens.size(); ++t) {
                const Token& tok = ls.line.tokens[t];
                if (tok.n_syllables != 1 || !lex.is_function_word(tok.lower)) continue;
                const int g = ls.assignment.map.spans[t].begin;
                if (!gold.contains(g)) excluded.insert(g);
            }

            ++n_lines;
            bool exact = true;
            const int total = ls.line.total_syllables;
            for (int s = 0; s < total; ++s) {
                if (excluded.contains(s)) continue;
                ++syll_total;
                const bool g = gold.contains(s), p = pred.contains(s);
                if (g == p)
                    ++syll_match;
                else
                    exact = false;
            }
            if (exact) ++exact_lines;
            diff.lines.push_back({frag.lines[li], ls.marked_text, exact});
        }
        if (diffs) diffs->push_back(std::move(diff));
    }

    EvalReport report;
    report.n_fragments = static_cast<int>(fragments.size());
    report.n_lines = n_lines;
    report.line_stress_exact = n_lines ? static_cast<double>(exact_lines) / n_lines : 0.0;
    report.syllable_stress_accuracy =
        syll_total ? static_cast<double>(syll_match) / static_cast<double>(syll_total) : 0.0;
    report.scheme_exact = static_cast<double>(scheme_hits) / static_cast<double>(fragments.size());
    return report;
}

EvalReport evaluate(std::span<const AnnotatedFragment> fragments, const Lexicon& lex,
                    const EngineOptions& options) {
    return evaluate_with_diffs(fragments, lex, options, nullptr);
}

std::vector<PairChoice> technicality_choice(
    std::span<const std::pair<std::string, std::string>> pairs, const Lexicon& lex,
    const EngineOptions& options) {
    std::vector<PairChoice> out;
    out.reserve(pairs.size());
    for (const auto& [first, second] : pairs) {
        const double a = scan_poem(first, lex, options.scan).poem_technicality;
        const double b = scan_poem(second, lex, options.scan).poem_technicality;
        if (a > b)
            out.push_back(PairChoice::first);
        else if (b > a)
            out.push_back(PairChoice::second);
        else
            out.push_back(PairChoice::tie);
    }
    return out;
}

}  // namespace strofa
