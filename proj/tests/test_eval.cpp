#include "doctest.h"
#include "helpers.hpp"
#include "strofa/errors.hpp"
#include "strofa/eval.hpp"
#include "strofa/rhyme.hpp"
#include "strofa/scansion.hpp"
#include "strofa/stats.hpp"

using namespace strofa;
using testutil::shipped_lexicon;

namespace {
const EngineOptions kOptions;
}

TEST_CASE("parse_gold accepts records whose scheme length matches") {
    GoldFile gf = parse_gold_text(
        "{\"text\": [\"моро\\u0301з и со\\u0301лнце\"], \"scheme\": \"-\"}\n");
    REQUIRE(gf.fragments.size() == 1);
    CHECK(gf.issues.empty());
    CHECK(gf.fragments[0].scheme == "-");
    CHECK(gold_stress_set(gf.fragments[0].lines[0]) == std::set<int>{1, 3});
}

TEST_CASE("parse_gold flags scheme/line count mismatch with the record number") {
    const std::string text =
        "{\"text\": [\"а\", \"б\", \"в\", \"г\"], \"scheme\": \"ABA\"}\n";
    GoldFile gf = parse_gold_text(text);
    CHECK(gf.fragments.empty());
    REQUIRE(gf.issues.size() == 1);
    CHECK(gf.issues[0].record_no == 1);
    CHECK_THROWS_AS(parse_gold_text(text, true), LoadError);
}

TEST_CASE("parse_gold: empty input gives an empty list") {
    GoldFile gf = parse_gold_text("");
    CHECK(gf.fragments.empty());
    CHECK(gf.issues.empty());
}

TEST_CASE("parse_gold rejects marks that do not follow a vowel") {
    GoldFile gf = parse_gold_text("{\"text\": [\"мор\\u0301оз\"], \"scheme\": \"-\"}\n");
    CHECK(gf.fragments.empty());
    CHECK(gf.issues.size() == 1);
}

TEST_CASE("gold_stress_set reads syllable indices") {
    auto set = gold_stress_set("Моро́з и со́лнце");
    CHECK(set == std::set<int>{1, 3});
    CHECK(gold_stress_set("без марок").empty());
}

TEST_CASE("serialize then parse is the identity") {
    GoldFile gf = parse_gold(testutil::source_dir() / "tests" / "data" /
                             "golden_fragments.jsonl");
    REQUIRE(!gf.fragments.empty());
    CHECK(gf.issues.empty());
    GoldFile round = parse_gold_text(serialize_gold(gf.fragments));
    REQUIRE(round.fragments.size() == gf.fragments.size());
    for (std::size_t i = 0; i < gf.fragments.size(); ++i) {
        CHECK(round.fragments[i].lines == gf.fragments[i].lines);
        CHECK(round.fragments[i].scheme == gf.fragments[i].scheme);
    }
}

TEST_CASE("evaluate reaches the self-consistency ceiling on engine output") {
    // Feed the engine's own markup back as gold: every metric must be 1.
    std::vector<AnnotatedFragment> fragments;
    for (const auto& q : testutil::canonical_quatrains()) {
        PoemScansion poem =
            analyze_poem(testutil::join_lines(q.lines), shipped_lexicon(), kOptions);
        AnnotatedFragment frag;
        for (const auto& line : poem.lines) frag.lines.push_back(line.marked_text);
        frag.scheme = poem.rhyme_scheme;
        fragments.push_back(std::move(frag));
    }
    EvalReport report = evaluate(fragments, shipped_lexicon(), kOptions);
    CHECK(report.line_stress_exact == doctest::Approx(1.0));
    CHECK(report.syllable_stress_accuracy == doctest::Approx(1.0));
    CHECK(report.scheme_exact == doctest::Approx(1.0));
}

TEST_CASE("scheme mismatches lower scheme_exact") {
    AnnotatedFragment frag;
    PoemScansion poem = analyze_poem("Прозрачный лес один чернеет,\nИ ель сквозь иней зеленеет,",
                                     shipped_lexicon(), kOptions);
    for (const auto& line : poem.lines) frag.lines.push_back(line.marked_text);
    frag.scheme = "--";  // engine will predict AA
    std::vector<AnnotatedFragment> fragments{frag};
    EvalReport report = evaluate(fragments, shipped_lexicon(), kOptions);
    CHECK(report.scheme_exact == doctest::Approx(0.0));
    CHECK(report.line_stress_exact == doctest::Approx(1.0));
}

TEST_CASE("unmarked closed-class monosyllables stay out of the metrics") {
    // Gold leaves "и" unmarked; the engine's choice there must not matter.
    AnnotatedFragment frag;
    frag.lines = {"Моро́з и со́лнце; де́нь чуде́сный!"};
    frag.scheme = "-";
    std::vector<AnnotatedFragment> fragments{frag};
    EvalReport report = evaluate(fragments, shipped_lexicon(), kOptions);
    CHECK(report.line_stress_exact == doctest::Approx(1.0));
    CHECK(report.syllable_stress_accuracy == doctest::Approx(1.0));
}

TEST_CASE("evaluate requires fragments") {
    std::vector<AnnotatedFragment> none;
    CHECK_THROWS_AS(evaluate(none, shipped_lexicon(), kOptions), DegenerateInputError);
}

TEST_CASE("technicality_choice prefers the cleaner poem") {
    const std::string good =
        "Мой дядя самых честных правил,\nКогда не в шутку занемог,\n"
        "Он уважать себя заставил\nИ лучше выдумать не мог.";
    const std::string garbled =
        "самых мой правил дядя честных,\nне шутку в когда занемог,\n"
        "себя он заставил уважать\nвыдумать лучше не и мог.";
    std::vector<std::pair<std::string, std::string>> pairs{
        {good, garbled}, {garbled, good}, {good, good}};
    auto choices = technicality_choice(pairs, shipped_lexicon(), kOptions);
    REQUIRE(choices.size() == 3);
    CHECK(choices[0] == PairChoice::first);
    CHECK(choices[1] == PairChoice::second);
    CHECK(choices[2] == PairChoice::tie);
}

TEST_CASE("kappa of the choice against an always-agreeing annotator is 1") {
    const std::string good = "Мой дядя самых честных правил,";
    const std::string bad = "правил честных самых дядя мой,";
    std::vector<std::pair<std::string, std::string>> pairs{{good, bad}, {bad, good}};
    auto choices = technicality_choice(pairs, shipped_lexicon(), kOptions);
    std::vector<std::string> tool, annotator;
    for (auto c : choices) {
        tool.push_back(c == PairChoice::first ? "first" : "second");
        annotator.push_back(tool.back());
    }
    CHECK(cohen_kappa(tool, annotator) == doctest::Approx(1.0));
}
