#include "strofa/phonetics.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

#include "strofa/errors.hpp"

namespace strofa {

int count_syllables(std::u32string_view word) {
    return count_vowel_letters(word);
}

int count_syllables(std::string_view word_utf8) {
    return count_vowel_letters(word_utf8);
}

SyllableMap build_syllable_map_from_counts(std::span<const int> syllables_per_token) {
    SyllableMap map;
    map.spans.reserve(syllables_per_token.size());
    int at = 0;
    for (int n : syllables_per_token) {
        map.spans.push_back({at, at + n});
        at += n;
    }
    map.total_syllables = at;
    return map;
}

SyllableMap build_syllable_map(std::span<const std::u32string> tokens) {
    std::vector<int> counts;
    counts.reserve(tokens.size());
    for (const auto& t : tokens) counts.push_back(count_syllables(t));
    return build_syllable_map_from_counts(counts);
}

SyllableMap build_syllable_map(std::span<const std::string> tokens_utf8) {
    std::vector<int> counts;
    counts.reserve(tokens_utf8.size());
    for (const auto& t : tokens_utf8) counts.push_back(count_syllables(t));
    return build_syllable_map_from_counts(counts);
}

bool is_vowel_phone(PhoneBase b) {
    switch (b) {
        case PhoneBase::A:
        case PhoneBase::O:
        case PhoneBase::U:
        case PhoneBase::I:
        case PhoneBase::Y:
        case PhoneBase::E:
            return true;
        default:
            return false;
    }
}

namespace {

bool is_obstruent(PhoneBase b) {
    switch (b) {
        case PhoneBase::B:
        case PhoneBase::V:
        case PhoneBase::G:
        case PhoneBase::D:
        case PhoneBase::Zh:
        case PhoneBase::Z:
        case PhoneBase::P:
        case PhoneBase::F:
        case PhoneBase::K:
        case PhoneBase::T:
        case PhoneBase::S:
        case PhoneBase::Sh:
        case PhoneBase::Kh:
        case PhoneBase::Ts:
        case PhoneBase::Ch:
        case PhoneBase::Shch:
            return true;
        default:
            return false;
    }
}

std::optional<PhoneBase> devoiced(PhoneBase b) {
    switch (b) {
        case PhoneBase::B: return PhoneBase::P;
        case PhoneBase::V: return PhoneBase::F;
        case PhoneBase::G: return PhoneBase::K;
        case PhoneBase::D: return PhoneBase::T;
        case PhoneBase::Zh: return PhoneBase::Sh;
        case PhoneBase::Z: return PhoneBase::S;
        default: return std::nullopt;
    }
}

std::optional<PhoneBase> voiced(PhoneBase b) {
    switch (b) {
        case PhoneBase::P: return PhoneBase::B;
        case PhoneBase::F: return PhoneBase::V;
        case PhoneBase::K: return PhoneBase::G;
        case PhoneBase::T: return PhoneBase::D;
        case PhoneBase::Sh: return PhoneBase::Zh;
        case PhoneBase::S: return PhoneBase::Z;
        default: return std::nullopt;
    }
}

bool is_voiceless_obstruent(PhoneBase b) {
    switch (b) {
        case PhoneBase::P:
        case PhoneBase::F:
        case PhoneBase::K:
        case PhoneBase::T:
        case PhoneBase::S:
        case PhoneBase::Sh:
        case PhoneBase::Kh:
        case PhoneBase::Ts:
        case PhoneBase::Ch:
        case PhoneBase::Shch:
            return true;
        default:
            return false;
    }
}

// Voiced obstruents that trigger regressive voicing; /v/ notably does not.
bool triggers_voicing(PhoneBase b) {
    switch (b) {
        case PhoneBase::B:
        case PhoneBase::G:
        case PhoneBase::D:
        case PhoneBase::Zh:
        case PhoneBase::Z:
            return true;
        default:
            return false;
    }
}

std::optional<PhoneBase> consonant_base(char32_t c) {
    switch (c) {
        case U'б': return PhoneBase::B;
        case U'в': return PhoneBase::V;
        case U'г': return PhoneBase::G;
        case U'д': return PhoneBase::D;
        case U'ж': return PhoneBase::Zh;
        case U'з': return PhoneBase::Z;
        case U'й': return PhoneBase::J;
        case U'к': return PhoneBase::K;
        case U'л': return PhoneBase::L;
        case U'м': return PhoneBase::M;
        case U'н': return PhoneBase::N;
        case U'п': return PhoneBase::P;
        case U'р': return PhoneBase::R;
        case U'с': return PhoneBase::S;
        case U'т': return PhoneBase::T;
        case U'ф': return PhoneBase::F;
        case U'х': return PhoneBase::Kh;
        case U'ц': return PhoneBase::Ts;
        case U'ч': return PhoneBase::Ch;
        case U'ш': return PhoneBase::Sh;
        case U'щ': return PhoneBase::Shch;
        default: return std::nullopt;
    }
}

bool always_soft(PhoneBase b) {
    return b == PhoneBase::Ch || b == PhoneBase::Shch || b == PhoneBase::J;
}

bool always_hard(PhoneBase b) {
    return b == PhoneBase::Zh || b == PhoneBase::Sh || b == PhoneBase::Ts;
}

bool softens(char32_t next) {
    switch (next) {
        case U'ь':
        case U'е':
        case U'ё':
        case U'ю':
        case U'я':
        case U'и':
            return true;
        default:
            return false;
    }
}

// Words ending in -ого/-его whose г is pronounced as spelled.
const std::unordered_set<std::u32string> kGenitiveGExceptions = {
    U"много", U"немного", U"строго", U"дорого", U"убого", U"полого", U"отлого",
};

}  // namespace

PhoneSeq phonetize(std::u32string_view word, std::optional<int> stress_position) {
    std::u32string w = to_lower(word);
    const int n_vowels = count_vowel_letters(w);
    if (stress_position && (*stress_position < 1 || *stress_position > n_vowels))
        throw RangeError("stress position " + std::to_string(*stress_position) +
                         " out of range for word with " + std::to_string(n_vowels) + " syllables");

    // Genitive-ending г -> в.
    if (w.size() >= 3 && w[w.size() - 1] == U'о' && w[w.size() - 2] == U'г' &&
        (w[w.size() - 3] == U'о' || w[w.size() - 3] == U'е') &&
        !kGenitiveGExceptions.contains(w)) {
        w[w.size() - 2] = U'в';
    }

    PhoneSeq seq;
    seq.phones.reserve(w.size());
    int vowel_index = 0;  // 1-based once incremented

    auto prev_letter_vowel_or_none = [&](std::size_t i) {
        // True at word start, after a vowel letter, or after ь/ъ: positions
        // where iotated vowels get a /j/ onset.
        if (i == 0) return true;
        // Scan back over non-Cyrillic noise.
        for (std::size_t k = i; k > 0; --k) {
            char32_t p = w[k - 1];
            if (p == U'ь' || p == U'ъ') return true;
            if (is_cyrillic_vowel(p)) return true;
            if (consonant_base(p)) return false;
        }
        return true;
    };

    for (std::size_t i = 0; i < w.size(); ++i) {
        const char32_t c = w[i];
        if (auto base = consonant_base(c)) {
            bool soft = always_soft(*base);
            if (!always_soft(*base) && !always_hard(*base))
                soft = (i + 1 < w.size()) && softens(w[i + 1]);
            seq.phones.push_back({*base, soft, false});
            continue;
        }
        if (c == U'ь' || c == U'ъ') continue;  // folded into softness / onset
        if (!is_cyrillic_vowel(c)) continue;   // stray non-Cyrillic characters

        ++vowel_index;
        const bool stressed = stress_position && vowel_index == *stress_position;
        const bool iotated = (c == U'е' || c == U'ё' || c == U'ю' || c == U'я');
        if (iotated && prev_letter_vowel_or_none(i))
            seq.phones.push_back({PhoneBase::J, true, false});
        if (c == U'и' && i > 0 && w[i - 1] == U'ь')
            seq.phones.push_back({PhoneBase::J, true, false});

        const bool after_hard_sibilant =
            i > 0 && (w[i - 1] == U'ж' || w[i - 1] == U'ш' || w[i - 1] == U'ц');
        PhoneBase v;
        switch (c) {
            case U'а': v = PhoneBase::A; break;
            case U'о': v = stressed ? PhoneBase::O : PhoneBase::A; break;
            case U'э': v = PhoneBase::E; break;
            case U'ы': v = PhoneBase::Y; break;
            case U'у':
            case U'ю': v = PhoneBase::U; break;
            case U'и': v = after_hard_sibilant ? PhoneBase::Y : PhoneBase::I; break;
            case U'е':
                if (stressed) v = PhoneBase::E;
                else v = after_hard_sibilant ? PhoneBase::Y : PhoneBase::I;
                break;
            case U'ё': v = PhoneBase::O; break;
            case U'я': v = stressed ? PhoneBase::A : PhoneBase::I; break;
            default: v = PhoneBase::A; break;
        }
        seq.phones.push_back({v, false, stressed});
    }

    auto& ph = seq.phones;

    // Word-final devoicing.
    if (!ph.empty()) {
        if (auto d = devoiced(ph.back().base)) ph.back().base = *d;
    }

    // Regressive voicing assimilation, right to left.
    for (std::size_t i = ph.size(); i >= 2; --i) {
        Phone& c1 = ph[i - 2];
        const Phone& c2 = ph[i - 1];
        if (!is_obstruent(c1.base) || !is_obstruent(c2.base)) continue;
        if (is_voiceless_obstruent(c2.base)) {
            if (auto d = devoiced(c1.base)) c1.base = *d;
        } else if (triggers_voicing(c2.base)) {
            if (auto v = voiced(c1.base)) c1.base = *v;
        }
    }

    // Collapse doubled consonants.
    std::vector<Phone> out;
    out.reserve(ph.size());
    for (const Phone& p : ph) {
        if (!out.empty() && !is_vowel_phone(p.base) && out.back().base == p.base &&
            out.back().soft == p.soft)
            continue;
        out.push_back(p);
    }
    ph = std::move(out);

    for (std::size_t i = 0; i < ph.size(); ++i)
        if (ph[i].stressed) seq.stress_index = static_cast<int>(i);
    return seq;
}

PhoneSeq phonetize(std::string_view word_utf8, std::optional<int> stress_position) {
    return phonetize(decode_utf8(word_utf8), stress_position);
}

std::string to_string(const Phone& p) {
    std::string s;
    switch (p.base) {
        case PhoneBase::A: s = p.stressed ? "á" : "a"; break;
        case PhoneBase::O: s = p.stressed ? "ó" : "o"; break;
        case PhoneBase::U: s = p.stressed ? "ú" : "u"; break;
        case PhoneBase::I: s = p.stressed ? "í" : "i"; break;
        case PhoneBase::Y: s = p.stressed ? "ý" : "y"; break;
        case PhoneBase::E: s = p.stressed ? "é" : "e"; break;
        case PhoneBase::B: s = "b"; break;
        case PhoneBase::V: s = "v"; break;
        case PhoneBase::G: s = "g"; break;
        case PhoneBase::D: s = "d"; break;
        case PhoneBase::Zh: s = "ž"; break;
        case PhoneBase::Z: s = "z"; break;
        case PhoneBase::K: s = "k"; break;
        case PhoneBase::L: s = "l"; break;
        case PhoneBase::M: s = "m"; break;
        case PhoneBase::N: s = "n"; break;
        case PhoneBase::P: s = "p"; break;
        case PhoneBase::R: s = "r"; break;
        case PhoneBase::S: s = "s"; break;
        case PhoneBase::T: s = "t"; break;
        case PhoneBase::F: s = "f"; break;
        case PhoneBase::Kh: s = "x"; break;
        case PhoneBase::Ts: s = "c"; break;
        case PhoneBase::Ch: s = "č"; break;
        case PhoneBase::Sh: s = "š"; break;
        case PhoneBase::Shch: s = "šč"; break;
        case PhoneBase::J: s = "j"; break;
    }
    if (p.soft && !is_vowel_phone(p.base) && p.base != PhoneBase::J &&
        p.base != PhoneBase::Ch && p.base != PhoneBase::Shch)
        s += "'";
    return s;
}

std::string to_string(const PhoneSeq& seq) {
    std::string s;
    for (std::size_t i = 0; i < seq.phones.size(); ++i) {
        if (i) s += ' ';
        s += to_string(seq.phones[i]);
    }
    return s;
}

}  // namespace strofa
