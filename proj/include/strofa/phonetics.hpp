#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "strofa/cyrillic.hpp"

namespace strofa {

// Per-token global syllable coordinates for one line. Spans are contiguous
// half-open ranges; vowelless tokens get empty spans.
struct SyllableMap {
    struct Span {
        int begin = 0;
        int end = 0;
        int size() const { return end - begin; }
        bool contains(int i) const { return i >= begin && i < end; }
    };
    std::vector<Span> spans;
    int total_syllables = 0;
};

int count_syllables(std::u32string_view word);
int count_syllables(std::string_view word_utf8);

SyllableMap build_syllable_map(std::span<const std::u32string> tokens);
SyllableMap build_syllable_map(std::span<const std::string> tokens_utf8);
SyllableMap build_syllable_map_from_counts(std::span<const int> syllables_per_token);

// Reduced phone inventory for rhyme comparison: six vowel qualities with a
// stressed flag, paired hard/soft consonants, /j/. See docs/phonetics.md for
// the full rule cascade.
enum class PhoneBase : std::uint8_t {
    // vowels
    A, O, U, I, Y, E,
    // consonants
    B, V, G, D, Zh, Z, K, L, M, N, P, R, S, T, F, Kh, Ts, Ch, Sh, Shch,
    J,
};

bool is_vowel_phone(PhoneBase b);

struct Phone {
    PhoneBase base = PhoneBase::A;
    bool soft = false;      // consonants only
    bool stressed = false;  // vowels only
    bool operator==(const Phone&) const = default;
};

struct PhoneSeq {
    std::vector<Phone> phones;
    std::optional<int> stress_index;  // position of the stressed vowel phone
    bool operator==(const PhoneSeq&) const = default;
};

// Debug/docs rendering, e.g. "g a d á" or "l u k".
std::string to_string(const PhoneSeq& seq);
std::string to_string(const Phone& p);

// Applies the spelling-to-sound cascade to one lowercase word.
// stress_position is a 1-based syllable index, or absent for a word realized
// without stress. Throws RangeError if out of [1, count_syllables(word)].
PhoneSeq phonetize(std::u32string_view word, std::optional<int> stress_position);
PhoneSeq phonetize(std::string_view word_utf8, std::optional<int> stress_position);

}  // namespace strofa
