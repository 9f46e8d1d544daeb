#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "helpers.hpp"
#include "strofa/errors.hpp"
#include "strofa/lexicon.hpp"

using namespace strofa;

namespace {

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& content, const char* name) {
        path = std::filesystem::temp_directory_path() / name;
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::error_code ec; std::filesystem::remove(path, ec); }
};

}  // namespace

TEST_CASE("load merges duplicate surfaces") {
    TempFile f("мороз\t2\t2\nзамок\t2\t1\nзамок\t2\t2\nгора\t2\t2\n", "lex_dup.tsv");
    Lexicon lex = Lexicon::load(f.path);
    CHECK(lex.size() == 3);
    const AccentEntry* e = lex.lookup("замок");
    REQUIRE(e != nullptr);
    CHECK(e->stress_positions == std::vector<int>{1, 2});
}

TEST_CASE("load of an empty file yields an empty lexicon") {
    TempFile f("", "lex_empty.tsv");
    Lexicon lex = Lexicon::load(f.path);
    CHECK(lex.size() == 0);
    CHECK(lex.issues().empty());
}

TEST_CASE("malformed records are collected, strict mode aborts") {
    const std::string data = "мороз\t2\t2\nкривой\tx\t1\nгора\t2\t9\n";
    TempFile f(data, "lex_bad.tsv");
    Lexicon lex = Lexicon::load(f.path);
    CHECK(lex.size() == 1);
    CHECK(lex.issues().size() == 2);

    LexiconConfig strict;
    strict.strict = true;
    CHECK_THROWS_AS(Lexicon::load(f.path, strict), LoadError);
}

TEST_CASE("unreadable file raises LoadError") {
    CHECK_THROWS_AS(Lexicon::load("/nonexistent/lexicon.tsv"), LoadError);
}

TEST_CASE("a ё surface must have its ё syllable stressed") {
    TempFile f("берёза\t3\t1\nберёза\t3\t2\n", "lex_yo.tsv");
    Lexicon lex = Lexicon::load(f.path);
    CHECK(lex.size() == 1);  // the @1 record is rejected
    CHECK(lex.issues().size() == 1);
    const AccentEntry* e = lex.lookup("берёза");
    REQUIRE(e != nullptr);
    CHECK(e->stress_positions == std::vector<int>{2});
}

TEST_CASE("record example from the dictionary format") {
    TempFile f("мороз\t2\t2\n", "lex_one.tsv");
    Lexicon lex = Lexicon::load(f.path);
    const AccentEntry* e = lex.lookup("мороз");
    REQUIRE(e != nullptr);
    CHECK(e->n_syllables == 2);
    CHECK(e->stress_positions == std::vector<int>{2});
}

TEST_CASE("lookup is case-insensitive and total") {
    const Lexicon& lex = testutil::shipped_lexicon();
    const AccentEntry* a = lex.lookup("Мороз");
    REQUIRE(a != nullptr);
    CHECK(a->stress_positions == std::vector<int>{2});
    CHECK(lex.lookup("МОРОЗ") == a);
    CHECK(lex.lookup("qwerty") == nullptr);
}

TEST_CASE("variable stress persists through lookup") {
    const AccentEntry* e = testutil::shipped_lexicon().lookup("творог");
    REQUIRE(e != nullptr);
    CHECK(e->stress_positions == std::vector<int>{1, 2});
}

TEST_CASE("ё-folded lookup") {
    const Lexicon& lex = testutil::shipped_lexicon();
    const AccentEntry* e = lex.lookup("еще");  // spelled without ё
    REQUIRE(e != nullptr);
    CHECK(e->surface == "ещё");
}

TEST_CASE("function words") {
    const Lexicon& lex = testutil::shipped_lexicon();
    CHECK(lex.is_function_word("и"));
    CHECK(lex.is_function_word("на"));
    CHECK(lex.is_function_word("И"));
    CHECK(!lex.is_function_word("солнце"));
}

TEST_CASE("collocation matching") {
    const Lexicon& lex = testutil::shipped_lexicon();
    std::vector<std::string> hit{"на", "руки"};
    auto m = lex.match_collocation(hit, 0);
    REQUIRE(m.has_value());
    CHECK(m->second == 2);
    CHECK(m->first->stressed_index == 1);
    CHECK(m->first->stress_position == 1);

    std::vector<std::string> miss{"на", "столе"};
    CHECK(!lex.match_collocation(miss, 0).has_value());
}

TEST_CASE("longest collocation wins") {
    Lexicon lex;
    lex.add_entry({"на", 1, {1}, true, "prep"});
    lex.add_collocation({{"на", "руки"}, 1, 1});
    lex.add_collocation({{"на", "руки", "его"}, 1, 1});
    std::vector<std::string> tokens{"на", "руки", "его"};
    auto m = lex.match_collocation(tokens, 0);
    REQUIRE(m.has_value());
    CHECK(m->second == 3);
}

TEST_CASE("oov prediction") {
    const Lexicon& lex = testutil::shipped_lexicon();
    CHECK(lex.predict_oov_stress("зажёгся") == std::vector<int>{2});
    CHECK(lex.predict_oov_stress("грыдж") == std::vector<int>{1});
    CHECK(lex.predict_oov_stress("котобус") == std::vector<int>{2, 1, 3});
    CHECK(lex.predict_oov_stress("выкрутасничать") == std::vector<int>{1});  // вы- rule
    CHECK_THROWS_AS(lex.predict_oov_stress("кгт"), NoVowelError);
}

TEST_CASE("shipped lexicon satisfies the entry invariants") {
    const Lexicon& lex = testutil::shipped_lexicon();
    CHECK(lex.size() > 5000);
    for (const auto& [surface, entry] : lex.entries()) {
        CAPTURE(surface);
        REQUIRE(!entry.stress_positions.empty());
        CHECK(entry.stress_positions.back() <= entry.n_syllables);
        CHECK(entry.stress_positions.front() >= 1);
        CHECK(entry.n_syllables == count_vowel_letters(decode_utf8(surface)));
    }
}

TEST_CASE("every listed function word with an entry carries the flag") {
    const Lexicon& lex = testutil::shipped_lexicon();
    for (const auto& [surface, entry] : lex.entries()) {
        if (lex.is_function_word(surface)) {
            CAPTURE(surface);
            CHECK(entry.is_function_word);
        }
    }
}
