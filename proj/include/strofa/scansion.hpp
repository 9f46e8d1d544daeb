#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "strofa/lexicon.hpp"
#include "strofa/options.hpp"
#include "strofa/phonetics.hpp"

namespace strofa {

enum class Meter { trochee, iamb, dactyl, amphibrach, anapest };

struct MeterTemplate {
    Meter name = Meter::trochee;
    int period = 2;
    int ictus_offset = 0;
    bool is_ictus(int syllable) const { return syllable % period == ictus_offset; }
};

// The five classical templates, in tie-break order.
inline constexpr std::array<MeterTemplate, 5> kMeterTemplates{{
    {Meter::trochee, 2, 0},
    {Meter::iamb, 2, 1},
    {Meter::dactyl, 3, 0},
    {Meter::amphibrach, 3, 1},
    {Meter::anapest, 3, 2},
}};

std::string_view meter_name(Meter m);
std::string_view meter_name(std::optional<Meter> m);  // nullopt -> "other"
std::optional<Meter> meter_from_name(std::string_view name);
const MeterTemplate& meter_template(Meter m);

enum class VariantOrigin { lexical, function_unstressed, collocation, oov_rule, oov_meter_fit };

struct WordVariant {
    int token_index = 0;
    std::optional<int> stress;  // 1-based syllable within the word; absent = unstressed
    VariantOrigin origin = VariantOrigin::lexical;
    double base_penalty = 0.0;
};

struct Token {
    std::string text;        // original slice of the line
    std::u32string lower;    // lowercase code points
    std::size_t byte_begin = 0;
    std::size_t byte_end = 0;
    std::vector<std::size_t> vowel_byte_end;  // offset just past each vowel letter
    int n_syllables = 0;
    bool is_word() const { return n_syllables > 0; }
};

struct TokenizedLine {
    std::string text;  // the line with any stress marks stripped
    std::vector<Token> tokens;
    int total_syllables = 0;
};

// Whitespace split; leading/trailing punctuation becomes separate zero-syllable
// tokens; hyphenated compounds stay whole when the lexicon knows them, and are
// split at the hyphens otherwise. Pre-existing stress marks are stripped.
TokenizedLine tokenize_line(std::string_view line, const Lexicon& lex);

struct StressAssignment {
    SyllableMap map;                           // spans per token
    std::vector<bool> stressed;                // per global syllable
    std::vector<WordVariant> chosen;           // per token
    std::vector<std::vector<int>> admissible;  // per token: global syllables any variant stresses
};

// Stress realizations available for one token. Closed-class words offer an
// unstressed variant plus penalized stressed ones; OOV words get rule
// candidates and, with oov_fit_meter, every position at oov_fit_penalty.
std::vector<WordVariant> word_variants(const Token& token, const Lexicon& lex,
                                       const ScanOptions& options, int token_index = 0);

// Raw formula score in [0,1]: 1 minus the weighted defect count per ictus.
// The stress-coverage floor is NOT applied here; technicality() is the
// floor-adjusted value used for meter means, poem scores and filtering.
double line_score(const StressAssignment& a, const MeterTemplate& t, const ScanOptions& options);
double coverage_factor(const StressAssignment& a, const MeterTemplate& t,
                       const ScanOptions& options);
double technicality(const StressAssignment& a, const MeterTemplate& t, const ScanOptions& options);

struct ScanResult {
    StressAssignment assignment;
    double score = 0.0;  // raw line_score of the returned assignment
};

// Left-to-right beam over per-word stress variants; collocation matches
// consume their tokens atomically. With a wide enough beam this equals
// exhaustive search; brute_scan_line is the enumeration oracle.
ScanResult beam_scan_line(const TokenizedLine& line, const Lexicon& lex, const MeterTemplate& t,
                          const ScanOptions& options);
ScanResult brute_scan_line(const TokenizedLine& line, const Lexicon& lex, const MeterTemplate& t,
                           const ScanOptions& options);

// Number of complete assignments brute_scan_line would enumerate.
std::uint64_t variant_product(const TokenizedLine& line, const Lexicon& lex,
                              const ScanOptions& options);

struct LineScansion {
    TokenizedLine line;
    StressAssignment assignment;
    std::optional<Meter> meter;     // template this line was scored against
    double technicality = 0.0;      // floor-adjusted
    std::string marked_text;
    bool scannable = false;         // at least one syllable
    bool low_confidence = false;    // fewer syllables than min_syllables_confident
};

struct PoemScansion {
    std::vector<LineScansion> lines;
    std::optional<Meter> poem_meter;  // nullopt = "other"
    double poem_technicality = 0.0;   // mean over scannable lines
    std::string rhyme_scheme;         // filled by detect_scheme
    bool low_confidence = false;
};

// Scans every line against all five templates, picks the template with the
// best mean technicality (ties resolve in template order), or "other" when
// the best mean is below meter_floor, in which case each line keeps its own
// best template.
PoemScansion detect_meter(const std::vector<TokenizedLine>& lines, const Lexicon& lex,
                          const ScanOptions& options);

// Tokenizes poem text (one line per \n), runs detect_meter, emits markup.
PoemScansion scan_poem(std::string_view text, const Lexicon& lex, const ScanOptions& options);

// Inserts U+0301 after each stressed vowel letter; everything else verbatim.
std::string emit_markup(const TokenizedLine& line, const StressAssignment& a);

// Drops every U+0301; all other bytes preserved.
std::string strip_marks(std::string_view text);

}  // namespace strofa
