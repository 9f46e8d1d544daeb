#pragma once

#include <filesystem>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "strofa/lexicon.hpp"
#include "strofa/options.hpp"

namespace strofa {

// One gold-annotated fragment: stress-marked lines (marks = U+0301 after the
// stressed vowel) plus a rhyme scheme string, one letter or '-' per line.
struct AnnotatedFragment {
    std::vector<std::string> lines;
    std::string scheme;
    nlohmann::ordered_json meta;
};

struct ParseIssue {
    int record_no = 0;  // 1-based line number in the JSONL file
    std::string message;
};

struct GoldFile {
    std::vector<AnnotatedFragment> fragments;
    std::vector<ParseIssue> issues;
};

// JSONL, one object per line: {"text": [...], "scheme": "...", "meta": {...}}.
// Malformed records are collected as issues; strict mode raises LoadError on
// the first one. Scheme length must equal the line count; every stress mark
// must follow a vowel letter.
GoldFile parse_gold(const std::filesystem::path& path, bool strict = false);
GoldFile parse_gold_text(std::string_view jsonl, bool strict = false);
std::string serialize_gold(std::span<const AnnotatedFragment> fragments);

// Stressed-syllable set (0-based global syllable indices) read from a marked
// line. Throws LoadError if a mark does not follow a vowel.
std::set<int> gold_stress_set(std::string_view marked_line);

struct EvalReport {
    int n_fragments = 0;
    int n_lines = 0;
    double line_stress_exact = 0.0;        // lines whose stressed-syllable set matches gold
    double syllable_stress_accuracy = 0.0; // per-syllable stressed/unstressed agreement
    double scheme_exact = 0.0;             // fragments with the exact scheme string
};

// Strips marks, rescans each fragment, compares stresses and schemes.
// Syllables of closed-class monosyllables left unmarked in gold are excluded
// from both stress metrics (annotators rarely mark them).
EvalReport evaluate(std::span<const AnnotatedFragment> fragments, const Lexicon& lex,
                    const EngineOptions& options);

struct LineDiff {
    std::string gold;
    std::string predicted;
    bool exact = false;
};

struct FragmentDiff {
    std::vector<LineDiff> lines;
    std::string gold_scheme;
    std::string predicted_scheme;
};

EvalReport evaluate_with_diffs(std::span<const AnnotatedFragment> fragments, const Lexicon& lex,
                               const EngineOptions& options, std::vector<FragmentDiff>* diffs);

enum class PairChoice { first, second, tie };

// Which member of each (poem, poem) pair scores the higher poem technicality.
std::vector<PairChoice> technicality_choice(
    std::span<const std::pair<std::string, std::string>> pairs, const Lexicon& lex,
    const EngineOptions& options);

}  // namespace strofa
