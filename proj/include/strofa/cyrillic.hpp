#pragma once

#include <string>
#include <string_view>

#include "strofa/errors.hpp"

namespace strofa {

inline constexpr char32_t kCombiningAcute = U'́';

// Strict UTF-8 decoding; malformed sequences raise EncodingError.
std::u32string decode_utf8(std::string_view text);
std::string encode_utf8(std::u32string_view text);
std::string encode_utf8(char32_t c);

bool is_cyrillic_letter(char32_t c);

// The ten Russian vowel letters, either case.
bool is_cyrillic_vowel(char32_t c);

// Lowercases Cyrillic and ASCII, identity for everything else.
char32_t to_lower(char32_t c);
std::u32string to_lower(std::u32string_view s);

// Number of Cyrillic vowel letters = number of syllables.
int count_vowel_letters(std::u32string_view s);
int count_vowel_letters(std::string_view utf8);

}  // namespace strofa
