#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "strofa/errors.hpp"
#include "strofa/phonetics.hpp"

using namespace strofa;

TEST_CASE("count_syllables") {
    CHECK(count_syllables("солнце") == 2);
    CHECK(count_syllables("и") == 1);
    CHECK(count_syllables("вскрик") == 1);
}

TEST_CASE("build_syllable_map assigns contiguous spans") {
    std::vector<std::string> tokens{"мороз", "и", "солнце"};
    SyllableMap map = build_syllable_map(tokens);
    REQUIRE(map.spans.size() == 3);
    CHECK(map.spans[0].begin == 0);
    CHECK(map.spans[0].end == 2);
    CHECK(map.spans[1].begin == 2);
    CHECK(map.spans[1].end == 3);
    CHECK(map.spans[2].begin == 3);
    CHECK(map.spans[2].end == 5);
    CHECK(map.total_syllables == 5);
}

TEST_CASE("build_syllable_map handles empty input and punctuation") {
    CHECK(build_syllable_map(std::vector<std::string>{}).total_syllables == 0);
    std::vector<std::string> tokens{"вскрик", "—", "да"};
    SyllableMap map = build_syllable_map(tokens);
    CHECK(map.spans[1].size() == 0);
    CHECK(map.total_syllables == 2);
}

TEST_CASE("phonetize: unstressed o reduces to a") {
    PhoneSeq seq = phonetize("года", 2);
    CHECK(to_string(seq) == "g a d á");
    REQUIRE(seq.stress_index.has_value());
    CHECK(*seq.stress_index == 3);
}

TEST_CASE("phonetize: final devoicing") {
    CHECK(to_string(phonetize("луг", 1)) == "l ú k");
    CHECK(to_string(phonetize("мороз", 2)) == "m a r ó s");
}

TEST_CASE("phonetize: ё carries stress and iotates at word start") {
    PhoneSeq seq = phonetize("ёж", 1);
    CHECK(to_string(seq) == "j ó š");
    REQUIRE(seq.stress_index.has_value());
    CHECK(seq.phones[static_cast<std::size_t>(*seq.stress_index)].base == PhoneBase::O);
}

TEST_CASE("phonetize: ikanye and palatalization") {
    // весна stressed on 2: в' и с н á
    CHECK(to_string(phonetize("весна", 2)) == "v' i s n á");
    // мягкий-знак folding: конь -> k o n'
    CHECK(to_string(phonetize("конь", 1)) == "k ó n'");
}

TEST_CASE("phonetize: voicing assimilation") {
    // сделать: с voices before д
    CHECK(to_string(phonetize("сделать", 1)) == "z d' é l a t'");
    // все: в devoices before с? no: в + с, с voiceless, в devoices
    CHECK(to_string(phonetize("все", 1)) == "f s' é");
    // визг: final г -> к, then з -> с
    CHECK(to_string(phonetize("визг", 1)) == "v' í s k");
}

TEST_CASE("phonetize: doubled consonants collapse") {
    CHECK(to_string(phonetize("касса", 1)) == "k á s a");
    // отдал: т assimilates to д, the pair then collapses
    CHECK(to_string(phonetize("отдал", 2)) == "a d á l");
}

TEST_CASE("phonetize: genitive ending г -> в") {
    CHECK(to_string(phonetize("его", 2)) == "j i v ó");
    CHECK(to_string(phonetize("сонного", 1)) == "s ó n a v a");
    // adverb exception keeps г
    CHECK(to_string(phonetize("много", 1)) == "m n ó g a");
}

TEST_CASE("phonetize: stress position validation") {
    CHECK_THROWS_AS(phonetize("год", 2), RangeError);
    CHECK_THROWS_AS(phonetize("год", 0), RangeError);
    CHECK_NOTHROW(phonetize("год", std::nullopt));
}

TEST_CASE("vowel letters map one-to-one onto vowel phones over the lexicon") {
    const auto& lex = testutil::shipped_lexicon();
    std::mt19937 rng(7);
    std::vector<const AccentEntry*> entries;
    for (const auto& [surface, entry] : lex.entries()) entries.push_back(&entry);
    std::uniform_int_distribution<std::size_t> pick(0, entries.size() - 1);
    for (int i = 0; i < 500; ++i) {
        const AccentEntry* e = entries[pick(rng)];
        if (e->surface.find('-') != std::string::npos) continue;
        PhoneSeq seq = phonetize(e->surface, e->stress_positions.front());
        int vowels = 0;
        for (const Phone& p : seq.phones)
            if (is_vowel_phone(p.base)) ++vowels;
        CAPTURE(e->surface);
        CHECK(vowels == e->n_syllables);
    }
}
