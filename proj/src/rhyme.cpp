#include "strofa/rhyme.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "strofa/errors.hpp"

namespace strofa {

PhoneSeq clausula(const TokenizedLine& line, const StressAssignment& a) {
    int last_word = -1;
    for (std::size_t t = 0; t < line.tokens.size(); ++t)
        if (line.tokens[t].is_word()) last_word = static_cast<int>(t);
    if (last_word < 0) throw EmptyLineError("line has no words to take a clausula from");

    // Last token carrying a chosen stress.
    int stressed_tok = -1;
    for (std::size_t t = 0; t < a.chosen.size(); ++t)
        if (a.chosen[t].stress) stressed_tok = static_cast<int>(t);

    PhoneSeq out;
    if (stressed_tok >= 0) {
        const Token& tok = line.tokens[static_cast<std::size_t>(stressed_tok)];
        PhoneSeq head = phonetize(tok.lower, a.chosen[static_cast<std::size_t>(stressed_tok)].stress);
        const int from = head.stress_index.value_or(0);
        out.stress_index = 0;
        out.phones.assign(head.phones.begin() + from, head.phones.end());
        for (std::size_t t = static_cast<std::size_t>(stressed_tok) + 1; t < line.tokens.size();
             ++t) {
            if (!line.tokens[t].is_word()) continue;
            PhoneSeq tail = phonetize(line.tokens[t].lower, std::nullopt);
            out.phones.insert(out.phones.end(), tail.phones.begin(), tail.phones.end());
        }
        return out;
    }

    // No stress anywhere: final syllable of the last word.
    const Token& tok = line.tokens[static_cast<std::size_t>(last_word)];
    PhoneSeq whole = phonetize(tok.lower, std::nullopt);
    int last_vowel = -1;
    for (std::size_t i = 0; i < whole.phones.size(); ++i)
        if (is_vowel_phone(whole.phones[i].base)) last_vowel = static_cast<int>(i);
    if (last_vowel < 0) throw EmptyLineError("line-final word has no vowels");
    out.phones.assign(whole.phones.begin() + last_vowel, whole.phones.end());
    return out;
}

namespace {

bool voicing_pair(PhoneBase a, PhoneBase b) {
    auto key = [](PhoneBase x) -> int {
        switch (x) {
            case PhoneBase::B:
            case PhoneBase::P: return 1;
            case PhoneBase::V:
            case PhoneBase::F: return 2;
            case PhoneBase::G:
            case PhoneBase::K: return 3;
            case PhoneBase::D:
            case PhoneBase::T: return 4;
            case PhoneBase::Zh:
            case PhoneBase::Sh: return 5;
            case PhoneBase::Z:
            case PhoneBase::S: return 6;
            default: return 0;
        }
    };
    return a != b && key(a) != 0 && key(a) == key(b);
}

double substitution_cost(const Phone& p, const Phone& q) {
    if (p == q) return 0.0;
    const bool pv = is_vowel_phone(p.base), qv = is_vowel_phone(q.base);
    if (pv && qv) {
        if (p.base == q.base) return 0.25;          // same quality, stress differs
        if (!p.stressed && !q.stressed) return 0.25;  // reduced-vowel equivalents
        return 1.0;
    }
    if (!pv && !qv) {
        if (p.base == q.base) return 0.25;  // hard/soft pair
        if (voicing_pair(p.base, q.base) && p.soft == q.soft) return 0.25;
        return 1.0;
    }
    return 1.0;
}

}  // namespace

double rhyme_score(const PhoneSeq& a, const PhoneSeq& b) {
    if (a.phones.empty() || b.phones.empty())
        throw EmptyLineError("rhyme_score requires non-empty clausulae");
    if (a.phones == b.phones) return 1.0;

    if (a.stress_index && b.stress_index) {
        const Phone& va = a.phones[static_cast<std::size_t>(*a.stress_index)];
        const Phone& vb = b.phones[static_cast<std::size_t>(*b.stress_index)];
        if (va.base != vb.base) return 0.0;
    }

    const std::size_t n = a.phones.size(), m = b.phones.size();
    std::vector<double> prev(m + 1), cur(m + 1);
    for (std::size_t j = 0; j <= m; ++j) prev[j] = static_cast<double>(j);
    for (std::size_t i = 1; i <= n; ++i) {
        cur[0] = static_cast<double>(i);
        for (std::size_t j = 1; j <= m; ++j) {
            const double sub = prev[j - 1] + substitution_cost(a.phones[i - 1], b.phones[j - 1]);
            const double del = prev[j] + 1.0;
            const double ins = cur[j - 1] + 1.0;
            cur[j] = std::min({sub, del, ins});
        }
        std::swap(prev, cur);
    }
    const double dist = prev[m];
    const double norm = static_cast<double>(std::max(n, m));
    return std::max(0.0, 1.0 - dist / norm);
}

std::string detect_scheme(const PoemScansion& poem, const RhymeOptions& options) {
    const std::size_t n = poem.lines.size();
    std::vector<std::optional<PhoneSeq>> tails(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!poem.lines[i].scannable) continue;
        try {
            tails[i] = clausula(poem.lines[i].line, poem.lines[i].assignment);
        } catch (const EmptyLineError&) {
            tails[i] = std::nullopt;
        }
    }

    // Union-find over rhyming pairs.
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i) {
        if (!tails[i]) continue;
        for (std::size_t j = i + 1; j < n && j - i <= static_cast<std::size_t>(options.max_distance);
             ++j) {
            if (!tails[j]) continue;
            if (rhyme_score(*tails[i], *tails[j]) >= options.threshold)
                parent[find(i)] = find(j);
        }
    }

    std::vector<int> class_size(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        if (tails[i]) ++class_size[find(i)];

    std::string scheme(n, '-');
    std::vector<int> letter_of(n, -1);
    int next_letter = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!tails[i]) continue;
        const std::size_t root = find(i);
        if (class_size[root] < 2) continue;
        if (letter_of[root] < 0) letter_of[root] = next_letter++;
        scheme[i] = static_cast<char>('A' + letter_of[root] % 26);
    }
    return scheme;
}

PoemScansion analyze_poem(std::string_view text, const Lexicon& lex,
                          const EngineOptions& options) {
    PoemScansion poem = scan_poem(text, lex, options.scan);
    poem.rhyme_scheme = detect_scheme(poem, options.rhyme);
    return poem;
}

}  // namespace strofa
