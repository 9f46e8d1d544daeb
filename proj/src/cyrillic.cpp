#include "strofa/cyrillic.hpp"

namespace strofa {

std::u32string decode_utf8(std::string_view text) {
    std::u32string out;
    out.reserve(text.size());
    std::size_t i = 0;
    const auto n = text.size();
    auto cont = [&](std::size_t k) {
        return k < n && (static_cast<unsigned char>(text[k]) & 0xC0) == 0x80;
    };
    while (i < n) {
        const unsigned char b0 = static_cast<unsigned char>(text[i]);
        if (b0 < 0x80) {
            out.push_back(b0);
            i += 1;
        } else if ((b0 & 0xE0) == 0xC0) {
            if (!cont(i + 1)) throw EncodingError("truncated UTF-8 sequence");
            char32_t c = (char32_t(b0 & 0x1F) << 6) | (text[i + 1] & 0x3F);
            if (c < 0x80) throw EncodingError("overlong UTF-8 sequence");
            out.push_back(c);
            i += 2;
        } else if ((b0 & 0xF0) == 0xE0) {
            if (!cont(i + 1) || !cont(i + 2)) throw EncodingError("truncated UTF-8 sequence");
            char32_t c = (char32_t(b0 & 0x0F) << 12) | (char32_t(text[i + 1] & 0x3F) << 6) |
                         (text[i + 2] & 0x3F);
            if (c < 0x800 || (c >= 0xD800 && c <= 0xDFFF))
                throw EncodingError("invalid UTF-8 code point");
            out.push_back(c);
            i += 3;
        } else if ((b0 & 0xF8) == 0xF0) {
            if (!cont(i + 1) || !cont(i + 2) || !cont(i + 3))
                throw EncodingError("truncated UTF-8 sequence");
            char32_t c = (char32_t(b0 & 0x07) << 18) | (char32_t(text[i + 1] & 0x3F) << 12) |
                         (char32_t(text[i + 2] & 0x3F) << 6) | (text[i + 3] & 0x3F);
            if (c < 0x10000 || c > 0x10FFFF) throw EncodingError("invalid UTF-8 code point");
            out.push_back(c);
            i += 4;
        } else {
            throw EncodingError("invalid UTF-8 lead byte");
        }
    }
    return out;
}

std::string encode_utf8(char32_t c) {
    std::string out;
    if (c < 0x80) {
        out.push_back(static_cast<char>(c));
    } else if (c < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (c >> 6)));
        out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else if (c < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (c >> 12)));
        out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (c >> 18)));
        out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    }
    return out;
}

std::string encode_utf8(std::u32string_view text) {
    std::string out;
    out.reserve(text.size() * 2);
    for (char32_t c : text) out += encode_utf8(c);
    return out;
}

bool is_cyrillic_letter(char32_t c) {
    return (c >= U'А' && c <= U'я') || c == U'Ё' || c == U'ё';
}

bool is_cyrillic_vowel(char32_t c) {
    switch (to_lower(c)) {
        case U'а':
        case U'е':
        case U'ё':
        case U'и':
        case U'о':
        case U'у':
        case U'ы':
        case U'э':
        case U'ю':
        case U'я':
            return true;
        default:
            return false;
    }
}

char32_t to_lower(char32_t c) {
    if (c >= U'А' && c <= U'Я') return c + 0x20;
    if (c == U'Ё') return U'ё';
    if (c >= U'A' && c <= U'Z') return c + 0x20;
    return c;
}

std::u32string to_lower(std::u32string_view s) {
    std::u32string out(s);
    for (auto& c : out) c = to_lower(c);
    return out;
}

int count_vowel_letters(std::u32string_view s) {
    int n = 0;
    for (char32_t c : s)
        if (is_cyrillic_vowel(c)) ++n;
    return n;
}

int count_vowel_letters(std::string_view utf8) {
    return count_vowel_letters(decode_utf8(utf8));
}

}  // namespace strofa
