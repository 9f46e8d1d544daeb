#pragma once

#include <cstdint>
#include <filesystem>

#include "strofa/errors.hpp"

namespace strofa {

// Knobs for the line search and the technicality formula. Defaults are the
// calibrated values; every field can be overridden from the config file.
struct ScanOptions {
    int beam_width = 16;

    // Defect weights: stray stress on a polysyllabic word, stray stress on a
    // monosyllable, and an avoidable unstressed ictus.
    double off_ictus_poly = 1.0;
    double off_ictus_mono = 0.5;
    double missed_ictus = 1.0;

    // Penalty for realizing a closed-class word with stress.
    double unstress_preference = 0.1;

    // Extra stress positions for OOV words, bent to the meter.
    bool oov_fit_meter = false;
    double oov_fit_penalty = 0.3;

    // Poem-level: best template mean below this means "other".
    double meter_floor = 0.5;

    // Lines shorter than this are flagged low-confidence.
    int min_syllables_confident = 6;

    // A line stressing fewer than this share of its ictuses gets its
    // technicality scaled down (guards the all-unstressed degenerate case).
    double stress_coverage_min = 0.25;

    // Exhaustive-search guard.
    std::uint64_t brute_cap = 1'000'000;
};

struct RhymeOptions {
    double threshold = 0.75;
    int max_distance = 4;
};

struct EngineOptions {
    ScanOptions scan;
    RhymeOptions rhyme;
};

// Reads a minimal TOML-style file: optional [scan]/[rhyme] sections,
// `key = value` lines, '#' comments. Unknown keys raise LoadError.
EngineOptions load_options(const std::filesystem::path& path);
EngineOptions parse_options(std::string_view text);

}  // namespace strofa
