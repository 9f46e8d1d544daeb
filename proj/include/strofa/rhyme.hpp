#pragma once

#include <optional>
#include <string>

#include "strofa/options.hpp"
#include "strofa/phonetics.hpp"
#include "strofa/scansion.hpp"

namespace strofa {

// Line-final segment from the last stressed vowel (inclusive) to the end of
// the line, each word phonetized independently. Lines with no stress fall
// back to the final syllable. Throws EmptyLineError when no word has vowels.
PhoneSeq clausula(const TokenizedLine& line, const StressAssignment& a);

// 1.0 for identical tails; otherwise 1 minus a class-weighted, length-
// normalized edit distance. Near-substitutions (voiced/voiceless pair,
// hard/soft pair, reduced vowels) cost 0.25; a mismatch of the stressed
// vowels themselves forces 0.
double rhyme_score(const PhoneSeq& a, const PhoneSeq& b);

// Pairwise rhyme links within max_distance, clustered as connected
// components; component labels in order of first appearance, '-' for
// unrhymed lines.
std::string detect_scheme(const PoemScansion& poem, const RhymeOptions& options);

// Convenience: scan_poem + detect_scheme with the scheme filled in.
PoemScansion analyze_poem(std::string_view text, const Lexicon& lex,
                          const EngineOptions& options);

}  // namespace strofa
