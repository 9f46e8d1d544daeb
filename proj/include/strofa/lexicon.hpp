#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "strofa/cyrillic.hpp"

namespace strofa {

struct AccentEntry {
    std::string surface;                // lowercase UTF-8, ё preserved
    int n_syllables = 0;
    std::vector<int> stress_positions;  // sorted, unique, 1-based
    bool is_function_word = false;
    std::string pos_hint;
};

struct CollocationRule {
    std::vector<std::string> pattern;  // 2 or 3 lowercase word forms
    int stressed_index = 1;            // 1-based word within pattern
    int stress_position = 1;           // 1-based syllable within that word
};

// OOV rule: words starting with `prefix` get this stress candidate.
struct PrefixRule {
    std::u32string prefix;
    int stress_syllable = 1;
};

struct LexiconConfig {
    std::filesystem::path function_words_path;  // optional
    std::filesystem::path collocations_path;    // optional
    bool strict = false;                        // abort on first malformed record
};

struct LoadIssue {
    std::string file;
    int line_no = 0;
    std::string message;
};

// Accent dictionary + closed-class word list + collocation exceptions + OOV
// predictor. Immutable after load; queries are const and thread-safe.
class Lexicon {
  public:
    static Lexicon load(const std::filesystem::path& dictionary, const LexiconConfig& config = {});

    // Case-insensitive; misses fall back to a ё→е-folded index so that
    // е-spelled text still finds ё entries.
    const AccentEntry* lookup(std::string_view word) const;
    const AccentEntry* lookup(std::u32string_view word) const;

    bool is_function_word(std::string_view word) const;
    bool is_function_word(std::u32string_view word) const;

    // Longest collocation whose pattern matches tokens[start..) case-insensitively.
    std::optional<std::pair<const CollocationRule*, int>> match_collocation(
        std::span<const std::string> tokens, std::size_t start) const;

    // Candidate stress positions for an out-of-vocabulary word, best first.
    // ё wins outright; otherwise prefix rules, then the penult-first fallback.
    // Throws NoVowelError for vowelless input.
    std::vector<int> predict_oov_stress(std::string_view word) const;
    std::vector<int> predict_oov_stress(std::u32string_view word) const;

    std::size_t size() const { return entries_.size(); }
    const std::unordered_map<std::string, AccentEntry>& entries() const { return entries_; }
    const std::vector<LoadIssue>& issues() const { return issues_; }
    const std::vector<PrefixRule>& prefix_rules() const { return prefix_rules_; }

    void add_entry(AccentEntry entry);                 // merges duplicates
    void add_function_word(std::string_view surface);  // lowercased
    void add_collocation(CollocationRule rule);

    Lexicon();

  private:
    std::unordered_map<std::string, AccentEntry> entries_;
    std::unordered_map<std::string, std::string> folded_;  // ё→е key -> canonical surface
    std::unordered_set<std::string> function_words_;
    std::unordered_map<std::string, std::vector<CollocationRule>> collocations_;  // by first word
    std::vector<PrefixRule> prefix_rules_;
    std::vector<LoadIssue> issues_;
};

}  // namespace strofa
