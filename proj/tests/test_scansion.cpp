#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "strofa/errors.hpp"
#include "strofa/rhyme.hpp"
#include "strofa/scansion.hpp"

using namespace strofa;
using testutil::shipped_lexicon;

namespace {

const ScanOptions kDefaults;

TokenizedLine tok(const std::string& line) {
    return tokenize_line(line, shipped_lexicon());
}

}  // namespace

TEST_CASE("tokenize splits punctuation into zero-syllable tokens") {
    TokenizedLine line = tok("Мороз и солнце; день чудесный!");
    std::vector<std::string> words;
    for (const Token& t : line.tokens)
        if (t.is_word()) words.push_back(t.text);
    CHECK(words == std::vector<std::string>{"Мороз", "и", "солнце", "день", "чудесный"});
    CHECK(line.total_syllables == 9);
    CHECK(line.text == "Мороз и солнце; день чудесный!");
}

TEST_CASE("tokenize strips pre-existing stress marks") {
    TokenizedLine line = tok("моро́з");
    CHECK(line.text == "мороз");
    CHECK(line.total_syllables == 2);
}

TEST_CASE("unknown hyphenated words split at the hyphen") {
    TokenizedLine line = tok("скажи-ка");
    std::vector<std::string> words;
    for (const Token& t : line.tokens)
        if (t.is_word()) words.push_back(t.text);
    CHECK(words == std::vector<std::string>{"скажи", "ка"});

    // known hyphenated form stays whole
    TokenizedLine out = tok("из-за");
    int word_tokens = 0;
    for (const Token& t : out.tokens)
        if (t.is_word()) ++word_tokens;
    CHECK(word_tokens == 1);
}

TEST_CASE("word_variants: function word offers unstressed plus penalized stressed") {
    TokenizedLine line = tok("и");
    auto vars = word_variants(line.tokens[0], shipped_lexicon(), kDefaults, 0);
    REQUIRE(vars.size() == 2);
    CHECK(!vars[0].stress.has_value());
    CHECK(vars[0].base_penalty == 0.0);
    CHECK(vars[0].origin == VariantOrigin::function_unstressed);
    CHECK(vars[1].stress == 1);
    CHECK(vars[1].base_penalty == doctest::Approx(kDefaults.unstress_preference));
}

TEST_CASE("word_variants: variable stress yields one variant per position") {
    TokenizedLine line = tok("творог");
    auto vars = word_variants(line.tokens[0], shipped_lexicon(), kDefaults, 0);
    REQUIRE(vars.size() == 2);
    CHECK(vars[0].stress == 1);
    CHECK(vars[1].stress == 2);
    CHECK(vars[0].base_penalty == 0.0);
    CHECK(vars[1].base_penalty == 0.0);
}

TEST_CASE("word_variants: oov candidates, with and without meter fitting") {
    TokenizedLine line = tok("котобус");
    auto plain = word_variants(line.tokens[0], shipped_lexicon(), kDefaults, 0);
    REQUIRE(plain.size() == 3);  // fallback order {2, 1, 3}
    CHECK(plain[0].stress == 2);
    CHECK(plain[0].origin == VariantOrigin::oov_rule);
    CHECK(plain[0].base_penalty == 0.0);

    ScanOptions opts;
    opts.oov_fit_meter = true;
    TokenizedLine vy = tok("выкрутас");  // prefix rule fires: candidates {1}
    auto fitted = word_variants(vy.tokens[0], shipped_lexicon(), opts, 0);
    REQUIRE(fitted.size() == 3);  // rule {1} plus meter-fit {2, 3}
    CHECK(fitted[0].origin == VariantOrigin::oov_rule);
    CHECK(fitted[1].origin == VariantOrigin::oov_meter_fit);
    CHECK(fitted[1].base_penalty == doctest::Approx(opts.oov_fit_penalty));
}

TEST_CASE("line_score: canonical iambic line scores 1.0") {
    TokenizedLine line = tok("Мороз и солнце; день чудесный");
    ScanResult r = beam_scan_line(line, shipped_lexicon(), meter_template(Meter::iamb), kDefaults);
    CHECK(r.score == doctest::Approx(1.0));
    // stressed syllables: 1 3 5 7
    REQUIRE(r.assignment.stressed.size() == 9);
    for (int i = 0; i < 9; ++i)
        CHECK(r.assignment.stressed[static_cast<std::size_t>(i)] == (i == 1 || i == 3 || i == 5 || i == 7));
}

TEST_CASE("line_score: same line against trochee is heavily penalized") {
    TokenizedLine line = tok("Мороз и солнце; день чудесный");
    ScanResult r =
        beam_scan_line(line, shipped_lexicon(), meter_template(Meter::trochee), kDefaults);
    // мороз@2, солнце@1, день, чудесный@2 all land off-ictus: cost 1+1+0.5+1
    // over 5 ictuses -> raw score 0.3
    CHECK(r.score == doctest::Approx(0.3));
    CHECK(r.score < 0.5);
    // no stressed ictus at all -> coverage floor zeroes the technicality
    CHECK(technicality(r.assignment, meter_template(Meter::trochee), kDefaults) ==
          doctest::Approx(0.0));
}

TEST_CASE("single word lines") {
    TokenizedLine line = tok("мороз");
    ScanResult iamb = beam_scan_line(line, shipped_lexicon(), meter_template(Meter::iamb), kDefaults);
    CHECK(iamb.score == doctest::Approx(1.0));
    CHECK(iamb.assignment.chosen[0].stress == 2);

    ScanResult troch =
        beam_scan_line(line, shipped_lexicon(), meter_template(Meter::trochee), kDefaults);
    CHECK(troch.assignment.chosen[0].stress == 2);  // forced choice
    CHECK(troch.score == doctest::Approx(0.0));     // one off-ictus defect over one ictus
}

TEST_CASE("empty line is rejected") {
    TokenizedLine line = tok("— … !");
    CHECK_THROWS_AS(beam_scan_line(line, shipped_lexicon(), meter_template(Meter::iamb), kDefaults),
                    EmptyLineError);
}

TEST_CASE("beam equals brute on fixture lines across all templates") {
    for (const auto& poem : testutil::canonical_quatrains()) {
        for (const auto& text : poem.lines) {
            TokenizedLine line = tok(text);
            for (const MeterTemplate& t : kMeterTemplates) {
                ScanResult b = beam_scan_line(line, shipped_lexicon(), t, kDefaults);
                ScanResult x = brute_scan_line(line, shipped_lexicon(), t, kDefaults);
                CAPTURE(text);
                CAPTURE(meter_name(t.name));
                CHECK(b.score == x.score);
            }
        }
    }
}

TEST_CASE("beam width monotonicity") {
    TokenizedLine line = tok("Открой сомкнуты негой взоры");
    for (const MeterTemplate& t : kMeterTemplates) {
        double prev = -1.0;
        for (int w : {1, 2, 4, 16}) {
            ScanOptions opts;
            opts.beam_width = w;
            double s = beam_scan_line(line, shipped_lexicon(), t, opts).score;
            CHECK(s >= prev);
            prev = s;
        }
    }
}

TEST_CASE("brute cap") {
    ScanOptions opts;
    opts.brute_cap = 2;
    TokenizedLine line = tok("творог творог творог");
    CHECK_THROWS_AS(brute_scan_line(line, shipped_lexicon(), meter_template(Meter::iamb), opts),
                    CapError);
}

TEST_CASE("collocation consumes tokens atomically") {
    TokenizedLine line = tok("на руки");
    ScanResult r = beam_scan_line(line, shipped_lexicon(), meter_template(Meter::trochee), kDefaults);
    // collocation stresses the preposition: syllable 0
    CHECK(r.assignment.stressed[0]);
    CHECK(!r.assignment.stressed[1]);
    CHECK(!r.assignment.stressed[2]);
    CHECK(r.assignment.chosen[0].origin == VariantOrigin::collocation);
    CHECK(r.score == doctest::Approx(1.0));
}

TEST_CASE("detect_meter on a canonical quatrain") {
    const auto& poems = testutil::canonical_quatrains();
    std::vector<TokenizedLine> lines;
    for (const auto& text : poems[0].lines) lines.push_back(tok(text));
    PoemScansion poem = detect_meter(lines, shipped_lexicon(), kDefaults);
    REQUIRE(poem.poem_meter.has_value());
    CHECK(meter_name(*poem.poem_meter) == "iamb");
    for (const auto& line : poem.lines) CHECK(line.technicality > 0.95);
    CHECK(!poem.low_confidence);
}

TEST_CASE("detect_meter: single monosyllable prefers a period-2 template by tie-break") {
    std::vector<TokenizedLine> lines{tok("дом")};
    PoemScansion poem = detect_meter(lines, shipped_lexicon(), kDefaults);
    REQUIRE(poem.poem_meter.has_value());
    CHECK(*poem.poem_meter == Meter::trochee);
    CHECK(poem.low_confidence);
    CHECK(poem.lines[0].low_confidence);
}

TEST_CASE("detect_meter is order-invariant for the chosen meter") {
    const auto& poems = testutil::canonical_quatrains();
    for (const auto& q : poems) {
        std::vector<TokenizedLine> lines;
        for (const auto& text : q.lines) lines.push_back(tok(text));
        PoemScansion a = detect_meter(lines, shipped_lexicon(), kDefaults);
        std::reverse(lines.begin(), lines.end());
        PoemScansion b = detect_meter(lines, shipped_lexicon(), kDefaults);
        CHECK(a.poem_meter == b.poem_meter);
        CHECK(a.poem_technicality == doctest::Approx(b.poem_technicality));
    }
}

TEST_CASE("scan_poem computes the mean and rejects empty input") {
    const auto& poems = testutil::canonical_quatrains();
    PoemScansion poem =
        scan_poem(testutil::join_lines(poems[1].lines), shipped_lexicon(), kDefaults);
    double sum = 0.0;
    int n = 0;
    for (const auto& line : poem.lines) {
        if (!line.scannable) continue;
        sum += line.technicality;
        ++n;
    }
    CHECK(poem.poem_technicality == doctest::Approx(sum / n));

    CHECK_THROWS_AS(scan_poem("\n", shipped_lexicon(), kDefaults), EmptyPoemError);
    CHECK_THROWS_AS(scan_poem("... --- !!!", shipped_lexicon(), kDefaults), EmptyPoemError);
}

TEST_CASE("emit_markup inserts combining acutes after stressed vowels") {
    TokenizedLine line = tok("мороз");
    ScanResult r = beam_scan_line(line, shipped_lexicon(), meter_template(Meter::iamb), kDefaults);
    CHECK(emit_markup(line, r.assignment) == "моро́з");
}

TEST_CASE("markup round trip over fixtures") {
    for (const auto& q : testutil::canonical_quatrains()) {
        PoemScansion poem =
            scan_poem(testutil::join_lines(q.lines), shipped_lexicon(), kDefaults);
        for (const auto& line : poem.lines) {
            CHECK(strip_marks(line.marked_text) == line.line.text);
        }
    }
}

TEST_CASE("strip_marks is idempotent and preserves unmarked text") {
    const std::string marked = "моро́з и со́лнце";
    CHECK(strip_marks(marked) == "мороз и солнце");
    CHECK(strip_marks(strip_marks(marked)) == strip_marks(marked));
    const std::string plain = "plain text, прост текст";
    CHECK(strip_marks(plain) == plain);
}

TEST_CASE("technicality stays within [0,1] over random lines") {
    std::mt19937 rng(42);
    std::vector<std::string> pool;
    for (const auto& [surface, entry] : shipped_lexicon().entries())
        if (pool.size() < 400) pool.push_back(surface);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> len(1, 8);
    for (int i = 0; i < 200; ++i) {
        std::string text;
        const int n = len(rng);
        for (int k = 0; k < n; ++k) {
            if (k) text += ' ';
            text += pool[pick(rng)];
        }
        TokenizedLine line = tok(text);
        for (const MeterTemplate& t : kMeterTemplates) {
            ScanResult r = beam_scan_line(line, shipped_lexicon(), t, kDefaults);
            const double tech = technicality(r.assignment, t, kDefaults);
            CHECK(r.score >= 0.0);
            CHECK(r.score <= 1.0);
            CHECK(tech >= 0.0);
            CHECK(tech <= 1.0);
        }
    }
}
