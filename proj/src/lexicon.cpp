#include "strofa/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "strofa/errors.hpp"
#include "strofa/phonetics.hpp"

namespace strofa {

namespace {

std::string lower_utf8(std::string_view s) {
    return encode_utf8(to_lower(decode_utf8(s)));
}

std::string fold_yo(std::string_view lower) {
    std::u32string u = decode_utf8(lower);
    for (auto& c : u)
        if (c == U'ё') c = U'е';
    return encode_utf8(u);
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t b = 0;
    while (b <= s.size()) {
        auto e = s.find(sep, b);
        if (e == std::string_view::npos) e = s.size();
        out.emplace_back(s.substr(b, e - b));
        b = e + 1;
        if (e == s.size()) break;
    }
    return out;
}

std::string strip(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

// Syllable of the first ё in a lowercase word, 1-based; 0 if absent.
int yo_syllable(std::u32string_view w) {
    int syl = 0;
    for (char32_t c : w) {
        if (is_cyrillic_vowel(c)) {
            ++syl;
            if (c == U'ё') return syl;
        }
    }
    return 0;
}

}  // namespace

Lexicon::Lexicon() {
    prefix_rules_.push_back({U"вы", 1});
}

void Lexicon::add_entry(AccentEntry entry) {
    entry.surface = lower_utf8(entry.surface);
    std::sort(entry.stress_positions.begin(), entry.stress_positions.end());
    entry.stress_positions.erase(
        std::unique(entry.stress_positions.begin(), entry.stress_positions.end()),
        entry.stress_positions.end());
    auto [it, inserted] = entries_.try_emplace(entry.surface, entry);
    if (!inserted) {
        AccentEntry& have = it->second;
        for (int p : entry.stress_positions)
            if (!std::binary_search(have.stress_positions.begin(), have.stress_positions.end(), p))
                have.stress_positions.insert(
                    std::upper_bound(have.stress_positions.begin(), have.stress_positions.end(), p),
                    p);
        have.is_function_word = have.is_function_word || entry.is_function_word;
        if (have.pos_hint.empty()) have.pos_hint = entry.pos_hint;
    }
    const std::string folded = fold_yo(it->first);
    if (folded != it->first) folded_.emplace(folded, it->first);
    if (it->second.is_function_word) function_words_.insert(it->first);
}

void Lexicon::add_function_word(std::string_view surface) {
    std::string lower = lower_utf8(surface);
    function_words_.insert(lower);
    if (auto it = entries_.find(lower); it != entries_.end()) it->second.is_function_word = true;
}

void Lexicon::add_collocation(CollocationRule rule) {
    for (auto& w : rule.pattern) w = lower_utf8(w);
    collocations_[rule.pattern.front()].push_back(std::move(rule));
}

const AccentEntry* Lexicon::lookup(std::string_view word) const {
    const std::string lower = lower_utf8(word);
    if (auto it = entries_.find(lower); it != entries_.end()) return &it->second;
    if (auto it = folded_.find(fold_yo(lower)); it != folded_.end()) {
        auto e = entries_.find(it->second);
        if (e != entries_.end()) return &e->second;
    }
    return nullptr;
}

const AccentEntry* Lexicon::lookup(std::u32string_view word) const {
    return lookup(encode_utf8(word));
}

bool Lexicon::is_function_word(std::string_view word) const {
    const std::string lower = lower_utf8(word);
    if (function_words_.contains(lower)) return true;
    if (auto it = folded_.find(fold_yo(lower)); it != folded_.end())
        return function_words_.contains(it->second);
    return false;
}

bool Lexicon::is_function_word(std::u32string_view word) const {
    return is_function_word(encode_utf8(word));
}

std::optional<std::pair<const CollocationRule*, int>> Lexicon::match_collocation(
    std::span<const std::string> tokens, std::size_t start) const {
    if (start >= tokens.size()) return std::nullopt;
    const std::string first = lower_utf8(tokens[start]);
    auto it = collocations_.find(first);
    if (it == collocations_.end()) return std::nullopt;
    const CollocationRule* best = nullptr;
    for (const CollocationRule& rule : it->second) {
        const std::size_t len = rule.pattern.size();
        if (start + len > tokens.size()) continue;
        bool ok = true;
        for (std::size_t k = 1; k < len && ok; ++k)
            ok = (lower_utf8(tokens[start + k]) == rule.pattern[k]);
        if (!ok) continue;
        if (!best || rule.pattern.size() > best->pattern.size()) best = &rule;
    }
    if (!best) return std::nullopt;
    return std::make_pair(best, static_cast<int>(best->pattern.size()));
}

std::vector<int> Lexicon::predict_oov_stress(std::u32string_view word) const {
    const std::u32string w = to_lower(word);
    const int n = count_vowel_letters(w);
    if (n == 0) throw NoVowelError("cannot place stress in a vowelless word");
    if (int yo = yo_syllable(w); yo > 0) return {yo};
    if (n == 1) return {1};
    for (const PrefixRule& rule : prefix_rules_) {
        if (w.size() > rule.prefix.size() && w.starts_with(rule.prefix) &&
            rule.stress_syllable <= n)
            return {rule.stress_syllable};
    }
    // Penult first, then the rest by distance from the penult.
    const int penult = n - 1;
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        int da = std::abs(a - penult), db = std::abs(b - penult);
        return da != db ? da < db : a < b;
    });
    return order;
}

std::vector<int> Lexicon::predict_oov_stress(std::string_view word) const {
    return predict_oov_stress(decode_utf8(word));
}

Lexicon Lexicon::load(const std::filesystem::path& dictionary, const LexiconConfig& config) {
    Lexicon lex;

    auto record_issue = [&](const std::filesystem::path& file, int line_no,
                            const std::string& msg) {
        if (config.strict)
            throw LoadError(file.string() + ":" + std::to_string(line_no) + ": " + msg);
        lex.issues_.push_back({file.string(), line_no, msg});
    };

    std::ifstream in(dictionary);
    if (!in) throw LoadError("cannot open lexicon file: " + dictionary.string());
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (raw.empty() || raw.front() == '#') continue;
        auto fields = split(raw, '\t');
        if (fields.size() < 3) {
            record_issue(dictionary, line_no, "expected at least 3 tab-separated fields");
            continue;
        }
        AccentEntry entry;
        entry.surface = lower_utf8(strip(fields[0]));
        std::u32string usurface;
        try {
            usurface = decode_utf8(entry.surface);
        } catch (const EncodingError& e) {
            record_issue(dictionary, line_no, e.what());
            continue;
        }
        try {
            entry.n_syllables = std::stoi(fields[1]);
        } catch (const std::exception&) {
            record_issue(dictionary, line_no, "bad syllable count '" + fields[1] + "'");
            continue;
        }
        if (entry.surface.empty() || entry.n_syllables != count_vowel_letters(usurface)) {
            record_issue(dictionary, line_no,
                         "syllable count does not match the vowel letters of '" + entry.surface +
                             "'");
            continue;
        }
        bool bad = false;
        for (const auto& p : split(fields[2], ',')) {
            int pos = 0;
            try {
                pos = std::stoi(p);
            } catch (const std::exception&) {
                bad = true;
                break;
            }
            if (pos < 1 || pos > entry.n_syllables) {
                bad = true;
                break;
            }
            entry.stress_positions.push_back(pos);
        }
        if (bad || entry.stress_positions.empty()) {
            record_issue(dictionary, line_no, "bad stress positions '" + fields[2] + "'");
            continue;
        }
        if (int yo = yo_syllable(usurface); yo > 0) {
            if (std::find(entry.stress_positions.begin(), entry.stress_positions.end(), yo) ==
                entry.stress_positions.end()) {
                record_issue(dictionary, line_no, "ё syllable is not among stress positions");
                continue;
            }
        }
        if (fields.size() >= 4) {
            for (const auto& flag : split(fields[3], ',')) {
                if (flag == "f")
                    entry.is_function_word = true;
                else if (!flag.empty() && entry.pos_hint.empty())
                    entry.pos_hint = flag;
            }
        }
        lex.add_entry(std::move(entry));
    }

    if (!config.function_words_path.empty()) {
        std::ifstream fw(config.function_words_path);
        if (!fw)
            throw LoadError("cannot open function-word list: " +
                            config.function_words_path.string());
        int fw_line = 0;
        while (std::getline(fw, raw)) {
            ++fw_line;
            if (!raw.empty() && raw.back() == '\r') raw.pop_back();
            std::string word = strip(raw);
            if (word.empty() || word.front() == '#') continue;
            lex.add_function_word(word);
        }
    }

    if (!config.collocations_path.empty()) {
        std::ifstream co(config.collocations_path);
        if (!co)
            throw LoadError("cannot open collocation table: " + config.collocations_path.string());
        int co_line = 0;
        while (std::getline(co, raw)) {
            ++co_line;
            if (!raw.empty() && raw.back() == '\r') raw.pop_back();
            if (raw.empty() || raw.front() == '#') continue;
            auto fields = split(raw, '\t');
            if (fields.size() != 3) {
                record_issue(config.collocations_path, co_line, "expected 3 fields");
                continue;
            }
            CollocationRule rule;
            std::istringstream words(fields[0]);
            std::string w;
            while (words >> w) rule.pattern.push_back(lower_utf8(w));
            bool ok = rule.pattern.size() >= 2 && rule.pattern.size() <= 3;
            try {
                rule.stressed_index = std::stoi(fields[1]);
                rule.stress_position = std::stoi(fields[2]);
            } catch (const std::exception&) {
                ok = false;
            }
            ok = ok && rule.stressed_index >= 1 &&
                 rule.stressed_index <= static_cast<int>(rule.pattern.size()) &&
                 rule.stress_position >= 1 &&
                 rule.stress_position <=
                     count_vowel_letters(
                         decode_utf8(rule.pattern[static_cast<std::size_t>(rule.stressed_index) - 1]));
            if (!ok) {
                record_issue(config.collocations_path, co_line, "bad collocation rule");
                continue;
            }
            lex.add_collocation(std::move(rule));
        }
    }

    return lex;
}

}  // namespace strofa
