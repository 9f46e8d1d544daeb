#include "strofa/scansion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "strofa/errors.hpp"

namespace strofa {

std::string_view meter_name(Meter m) {
    switch (m) {
        case Meter::trochee: return "trochee";
        case Meter::iamb: return "iamb";
        case Meter::dactyl: return "dactyl";
        case Meter::amphibrach: return "amphibrach";
        case Meter::anapest: return "anapest";
    }
    return "other";
}

std::string_view meter_name(std::optional<Meter> m) {
    return m ? meter_name(*m) : std::string_view("other");
}

std::optional<Meter> meter_from_name(std::string_view name) {
    for (const auto& t : kMeterTemplates)
        if (meter_name(t.name) == name) return t.name;
    return std::nullopt;
}

const MeterTemplate& meter_template(Meter m) {
    return kMeterTemplates[static_cast<std::size_t>(m)];
}

std::string strip_marks(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size();) {
        if (i + 1 < text.size() && static_cast<unsigned char>(text[i]) == 0xCC &&
            static_cast<unsigned char>(text[i + 1]) == 0x81) {
            i += 2;
            continue;
        }
        out.push_back(text[i]);
        ++i;
    }
    return out;
}

namespace {

std::size_t utf8_len(char32_t c) {
    if (c < 0x80) return 1;
    if (c < 0x800) return 2;
    if (c < 0x10000) return 3;
    return 4;
}

bool is_space_cp(char32_t c) {
    return c == U' ' || c == U'\t' || c == U' ';
}

bool is_word_cp(char32_t c) {
    if (is_cyrillic_letter(c)) return true;
    if ((c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z')) return true;
    if (c >= U'0' && c <= U'9') return true;
    return c == U'\'' || c == U'’';
}

Token make_token(std::u32string_view cps, std::size_t byte_begin) {
    Token tok;
    tok.byte_begin = byte_begin;
    std::size_t at = byte_begin;
    for (char32_t c : cps) {
        at += utf8_len(c);
        if (is_cyrillic_vowel(c)) tok.vowel_byte_end.push_back(at);
    }
    tok.byte_end = at;
    tok.text = encode_utf8(cps);
    tok.lower = to_lower(cps);
    tok.n_syllables = static_cast<int>(tok.vowel_byte_end.size());
    return tok;
}

}  // namespace

TokenizedLine tokenize_line(std::string_view line, const Lexicon& lex) {
    TokenizedLine out;
    out.text = strip_marks(line);
    const std::u32string cps = decode_utf8(out.text);

    // Byte offset of each code point within out.text.
    std::vector<std::size_t> offs(cps.size() + 1, 0);
    for (std::size_t i = 0; i < cps.size(); ++i) offs[i + 1] = offs[i] + utf8_len(cps[i]);

    auto push_range = [&](std::size_t b, std::size_t e) {
        if (e > b) out.tokens.push_back(make_token({cps.data() + b, e - b}, offs[b]));
    };

    std::size_t i = 0;
    while (i < cps.size()) {
        if (is_space_cp(cps[i])) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < cps.size() && !is_space_cp(cps[j])) ++j;

        // Peel punctuation off both ends of the chunk.
        std::size_t b = i, e = j;
        while (b < e && !is_word_cp(cps[b]) && cps[b] != U'-') ++b;
        while (e > b && !is_word_cp(cps[e - 1]) && cps[e - 1] != U'-') --e;
        if (b > i) push_range(i, b);
        if (b < e) {
            // A core with hyphens stays whole if the lexicon knows the whole
            // form, otherwise each part becomes its own token.
            std::u32string core(cps.data() + b, e - b);
            bool split_parts = false;
            if (core.find(U'-') != std::u32string::npos) {
                std::u32string lowered = to_lower(core);
                if (!lex.lookup(lowered) && count_vowel_letters(lowered) > 0) split_parts = true;
            }
            if (!split_parts) {
                push_range(b, e);
            } else {
                std::size_t pb = b;
                for (std::size_t k = b; k <= e; ++k) {
                    if (k == e || cps[k] == U'-') {
                        push_range(pb, k);
                        if (k < e) push_range(k, k + 1);  // the hyphen itself
                        pb = k + 1;
                    }
                }
            }
        }
        if (e < j) push_range(e, j);
        i = j;
    }

    for (const Token& t : out.tokens) out.total_syllables += t.n_syllables;
    return out;
}

std::vector<WordVariant> word_variants(const Token& token, const Lexicon& lex,
                                       const ScanOptions& options, int token_index) {
    if (!token.is_word()) throw RangeError("word_variants called on a vowelless token");
    std::vector<WordVariant> out;
    const AccentEntry* entry = lex.lookup(token.lower);

    if (lex.is_function_word(token.lower)) {
        out.push_back({token_index, std::nullopt, VariantOrigin::function_unstressed, 0.0});
        std::vector<int> positions =
            entry ? entry->stress_positions : lex.predict_oov_stress(token.lower);
        for (int p : positions)
            out.push_back({token_index, p, VariantOrigin::lexical, options.unstress_preference});
        return out;
    }

    if (entry) {
        for (int p : entry->stress_positions)
            out.push_back({token_index, p, VariantOrigin::lexical, 0.0});
        return out;
    }

    std::vector<int> rule_positions = lex.predict_oov_stress(token.lower);
    for (int p : rule_positions)
        out.push_back({token_index, p, VariantOrigin::oov_rule, 0.0});
    if (options.oov_fit_meter) {
        for (int p = 1; p <= token.n_syllables; ++p) {
            if (std::find(rule_positions.begin(), rule_positions.end(), p) ==
                rule_positions.end())
                out.push_back({token_index, p, VariantOrigin::oov_meter_fit,
                               options.oov_fit_penalty});
        }
    }
    return out;
}

namespace {

struct SegmentVariant {
    std::vector<std::optional<int>> stress;  // per token of the segment, 1-based local
    double penalty = 0.0;
    int stressed_function = 0;
    VariantOrigin origin = VariantOrigin::lexical;
};

struct Segment {
    int first_token = 0;
    int n_tokens = 1;
    std::vector<SegmentVariant> variants;
};

struct LineContext {
    const TokenizedLine* line = nullptr;
    SyllableMap map;
    std::vector<Segment> segments;
    std::vector<std::vector<int>> admissible;  // per token, global syllable indices
};

LineContext build_context(const TokenizedLine& line, const Lexicon& lex,
                          const ScanOptions& options) {
    LineContext ctx;
    ctx.line = &line;
    std::vector<int> counts;
    counts.reserve(line.tokens.size());
    for (const Token& t : line.tokens) counts.push_back(t.n_syllables);
    ctx.map = build_syllable_map_from_counts(counts);
    ctx.admissible.resize(line.tokens.size());

    std::size_t i = 0;
    while (i < line.tokens.size()) {
        if (!line.tokens[i].is_word()) {
            ++i;
            continue;
        }
        // Window of consecutive word tokens for collocation matching.
        std::vector<std::string> window;
        for (std::size_t j = i; j < line.tokens.size() && line.tokens[j].is_word() &&
                                window.size() < 3;
             ++j)
            window.push_back(encode_utf8(line.tokens[j].lower));

        Segment seg;
        seg.first_token = static_cast<int>(i);
        if (auto m = lex.match_collocation(window, 0)) {
            const auto& [rule, len] = *m;
            seg.n_tokens = len;
            SegmentVariant v;
            v.origin = VariantOrigin::collocation;
            v.stress.assign(static_cast<std::size_t>(len), std::nullopt);
            v.stress[static_cast<std::size_t>(rule->stressed_index - 1)] = rule->stress_position;
            if (lex.is_function_word(
                    line.tokens[i + static_cast<std::size_t>(rule->stressed_index - 1)].lower))
                v.stressed_function = 1;
            seg.variants.push_back(std::move(v));
        } else {
            seg.n_tokens = 1;
            const bool is_function = lex.is_function_word(line.tokens[i].lower);
            for (const WordVariant& wv :
                 word_variants(line.tokens[i], lex, options, static_cast<int>(i))) {
                SegmentVariant v;
                v.stress = {wv.stress};
                v.penalty = wv.base_penalty;
                v.origin = wv.origin;
                v.stressed_function = (is_function && wv.stress) ? 1 : 0;
                seg.variants.push_back(std::move(v));
            }
        }
        for (const SegmentVariant& v : seg.variants) {
            for (int k = 0; k < seg.n_tokens; ++k) {
                if (!v.stress[static_cast<std::size_t>(k)]) continue;
                const int tok = seg.first_token + k;
                const int g = ctx.map.spans[static_cast<std::size_t>(tok)].begin +
                              *v.stress[static_cast<std::size_t>(k)] - 1;
                auto& adm = ctx.admissible[static_cast<std::size_t>(tok)];
                if (std::find(adm.begin(), adm.end(), g) == adm.end()) adm.push_back(g);
            }
        }
        ctx.segments.push_back(std::move(seg));
        i += static_cast<std::size_t>(ctx.segments.back().n_tokens);
    }
    for (auto& adm : ctx.admissible) std::sort(adm.begin(), adm.end());
    return ctx;
}

// Defect cost a segment variant contributes, plus its base penalty.
double segment_cost(const LineContext& ctx, const Segment& seg, const SegmentVariant& v,
                    const MeterTemplate& t, const ScanOptions& options) {
    double cost = v.penalty;
    for (int k = 0; k < seg.n_tokens; ++k) {
        const int tok = seg.first_token + k;
        const auto& span = ctx.map.spans[static_cast<std::size_t>(tok)];
        std::optional<int> g;
        if (v.stress[static_cast<std::size_t>(k)])
            g = span.begin + *v.stress[static_cast<std::size_t>(k)] - 1;
        if (g && !t.is_ictus(*g))
            cost += span.size() >= 2 ? options.off_ictus_poly : options.off_ictus_mono;
        if (span.size() >= 2) {
            const auto& adm = ctx.admissible[static_cast<std::size_t>(tok)];
            for (int s = span.begin; s < span.end; ++s) {
                if (!t.is_ictus(s)) continue;
                if (g && *g == s) continue;
                if (std::binary_search(adm.begin(), adm.end(), s)) cost += options.missed_ictus;
            }
        }
    }
    return cost;
}

int count_ictuses(int total, const MeterTemplate& t) {
    int n = 0;
    for (int i = 0; i < total; ++i)
        if (t.is_ictus(i)) ++n;
    return n;
}

double score_from_cost(double cost, int n_ictus) {
    const double denom = std::max(1, n_ictus);
    return std::clamp(1.0 - cost / denom, 0.0, 1.0);
}

struct SearchState {
    double cost = 0.0;
    int stressed_function = 0;
    std::vector<std::uint8_t> pattern;  // stressed bit per consumed syllable
    std::vector<int> choice;            // variant index per consumed segment
};

// Stress-first lexicographic order: at the first differing syllable the
// stressed pattern ranks earlier.
int compare_patterns(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    if (a.size() != b.size()) return a.size() > b.size() ? -1 : 1;
    return 0;
}

bool state_better(const SearchState& a, const SearchState& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    if (a.stressed_function != b.stressed_function)
        return a.stressed_function < b.stressed_function;
    if (int c = compare_patterns(a.pattern, b.pattern); c != 0) return c < 0;
    return a.choice < b.choice;
}

// Final selection uses the clamped score, which can tie where costs differ.
bool result_better(const SearchState& a, const SearchState& b, int n_ictus) {
    const double sa = score_from_cost(a.cost, n_ictus);
    const double sb = score_from_cost(b.cost, n_ictus);
    if (sa != sb) return sa > sb;
    if (a.stressed_function != b.stressed_function)
        return a.stressed_function < b.stressed_function;
    if (int c = compare_patterns(a.pattern, b.pattern); c != 0) return c < 0;
    return a.choice < b.choice;
}

void append_segment(SearchState& st, const LineContext& ctx, const Segment& seg, int variant_idx,
                    double cost) {
    const SegmentVariant& v = seg.variants[static_cast<std::size_t>(variant_idx)];
    st.cost += cost;
    st.stressed_function += v.stressed_function;
    st.choice.push_back(variant_idx);
    for (int k = 0; k < seg.n_tokens; ++k) {
        const int tok = seg.first_token + k;
        const auto& span = ctx.map.spans[static_cast<std::size_t>(tok)];
        const std::size_t base = st.pattern.size();
        st.pattern.resize(base + static_cast<std::size_t>(span.size()), 0);
        if (v.stress[static_cast<std::size_t>(k)])
            st.pattern[base + static_cast<std::size_t>(*v.stress[static_cast<std::size_t>(k)]) -
                       1] = 1;
    }
}

StressAssignment assignment_from_choice(const LineContext& ctx, const std::vector<int>& choice) {
    StressAssignment a;
    a.map = ctx.map;
    a.stressed.assign(static_cast<std::size_t>(ctx.map.total_syllables), false);
    a.admissible = ctx.admissible;
    a.chosen.resize(ctx.line->tokens.size());
    for (std::size_t t = 0; t < ctx.line->tokens.size(); ++t)
        a.chosen[t] = {static_cast<int>(t), std::nullopt, VariantOrigin::lexical, 0.0};
    for (std::size_t s = 0; s < ctx.segments.size(); ++s) {
        const Segment& seg = ctx.segments[s];
        const SegmentVariant& v = seg.variants[static_cast<std::size_t>(choice[s])];
        for (int k = 0; k < seg.n_tokens; ++k) {
            const int tok = seg.first_token + k;
            WordVariant& wv = a.chosen[static_cast<std::size_t>(tok)];
            wv.token_index = tok;
            wv.stress = v.stress[static_cast<std::size_t>(k)];
            wv.origin = v.origin;
            wv.base_penalty = (k == 0) ? v.penalty : 0.0;
            if (wv.stress) {
                const int g =
                    ctx.map.spans[static_cast<std::size_t>(tok)].begin + *wv.stress - 1;
                a.stressed[static_cast<std::size_t>(g)] = true;
            }
        }
    }
    return a;
}

}  // namespace

double line_score(const StressAssignment& a, const MeterTemplate& t, const ScanOptions& options) {
    const int total = a.map.total_syllables;
    if (total < 1) throw RangeError("line_score requires at least one syllable");
    const int n_ictus = count_ictuses(total, t);
    double cost = 0.0;
    for (std::size_t tok = 0; tok < a.chosen.size(); ++tok) {
        const WordVariant& wv = a.chosen[tok];
        cost += wv.base_penalty;
        const auto& span = a.map.spans[tok];
        if (span.size() == 0) continue;
        std::optional<int> g;
        if (wv.stress) g = span.begin + *wv.stress - 1;
        if (g && !t.is_ictus(*g))
            cost += span.size() >= 2 ? options.off_ictus_poly : options.off_ictus_mono;
        if (span.size() >= 2 && tok < a.admissible.size()) {
            const auto& adm = a.admissible[tok];
            for (int s = span.begin; s < span.end; ++s) {
                if (!t.is_ictus(s)) continue;
                if (g && *g == s) continue;
                if (std::binary_search(adm.begin(), adm.end(), s)) cost += options.missed_ictus;
            }
        }
    }
    return score_from_cost(cost, n_ictus);
}

double coverage_factor(const StressAssignment& a, const MeterTemplate& t,
                       const ScanOptions& options) {
    const int total = a.map.total_syllables;
    const int n_ictus = count_ictuses(total, t);
    int stressed_ictus = 0;
    for (int i = 0; i < total; ++i)
        if (t.is_ictus(i) && a.stressed[static_cast<std::size_t>(i)]) ++stressed_ictus;
    const double need = options.stress_coverage_min * n_ictus;
    if (static_cast<double>(stressed_ictus) >= need) return 1.0;
    return static_cast<double>(stressed_ictus) / std::max(1.0, need);
}

double technicality(const StressAssignment& a, const MeterTemplate& t,
                    const ScanOptions& options) {
    return line_score(a, t, options) * coverage_factor(a, t, options);
}

std::uint64_t variant_product(const TokenizedLine& line, const Lexicon& lex,
                              const ScanOptions& options) {
    const LineContext ctx = build_context(line, lex, options);
    std::uint64_t product = 1;
    for (const Segment& seg : ctx.segments) {
        const std::uint64_t n = seg.variants.size();
        if (n != 0 && product > std::numeric_limits<std::uint64_t>::max() / n)
            return std::numeric_limits<std::uint64_t>::max();
        product *= n;
    }
    return product;
}

ScanResult beam_scan_line(const TokenizedLine& line, const Lexicon& lex, const MeterTemplate& t,
                          const ScanOptions& options) {
    if (line.total_syllables < 1) throw EmptyLineError("line has no syllables");
    const LineContext ctx = build_context(line, lex, options);
    const std::size_t width = static_cast<std::size_t>(std::max(1, options.beam_width));

    std::vector<SearchState> beam{SearchState{}};
    for (const Segment& seg : ctx.segments) {
        std::vector<SearchState> next;
        next.reserve(beam.size() * seg.variants.size());
        for (const SearchState& st : beam) {
            for (std::size_t v = 0; v < seg.variants.size(); ++v) {
                SearchState ext = st;
                append_segment(ext, ctx, seg, static_cast<int>(v),
                               segment_cost(ctx, seg, seg.variants[v], t, options));
                next.push_back(std::move(ext));
            }
        }
        if (next.size() > width) {
            std::partial_sort(next.begin(), next.begin() + static_cast<std::ptrdiff_t>(width),
                              next.end(), state_better);
            next.resize(width);
        }
        beam = std::move(next);
    }

    const int n_ictus = count_ictuses(ctx.map.total_syllables, t);
    const SearchState* best = &beam.front();
    for (const SearchState& st : beam)
        if (result_better(st, *best, n_ictus)) best = &st;

    ScanResult res;
    res.assignment = assignment_from_choice(ctx, best->choice);
    res.score = line_score(res.assignment, t, options);
    return res;
}

ScanResult brute_scan_line(const TokenizedLine& line, const Lexicon& lex, const MeterTemplate& t,
                           const ScanOptions& options) {
    if (line.total_syllables < 1) throw EmptyLineError("line has no syllables");
    const LineContext ctx = build_context(line, lex, options);
    if (variant_product(line, lex, options) > options.brute_cap)
        throw CapError("variant product exceeds the exhaustive-search cap");

    const int n_ictus = count_ictuses(ctx.map.total_syllables, t);
    std::optional<SearchState> best;
    std::vector<int> choice(ctx.segments.size(), 0);

    // Odometer over every combination of segment variants.
    while (true) {
        SearchState st;
        for (std::size_t s = 0; s < ctx.segments.size(); ++s) {
            const Segment& seg = ctx.segments[s];
            append_segment(st, ctx, seg, choice[s],
                           segment_cost(ctx, seg, seg.variants[static_cast<std::size_t>(choice[s])],
                                        t, options));
        }
        if (!best || result_better(st, *best, n_ictus)) best = std::move(st);

        bool rolled_over = true;
        for (std::size_t pos = ctx.segments.size(); pos > 0;) {
            --pos;
            if (++choice[pos] < static_cast<int>(ctx.segments[pos].variants.size())) {
                rolled_over = false;
                break;
            }
            choice[pos] = 0;
        }
        if (rolled_over) break;
    }

    ScanResult res;
    res.assignment = assignment_from_choice(ctx, best->choice);
    res.score = line_score(res.assignment, t, options);
    return res;
}

std::string emit_markup(const TokenizedLine& line, const StressAssignment& a) {
    std::vector<std::size_t> marks;
    for (std::size_t tok = 0; tok < a.chosen.size() && tok < line.tokens.size(); ++tok) {
        const auto& stress = a.chosen[tok].stress;
        if (!stress) continue;
        const Token& t = line.tokens[tok];
        if (*stress >= 1 && *stress <= static_cast<int>(t.vowel_byte_end.size()))
            marks.push_back(t.vowel_byte_end[static_cast<std::size_t>(*stress - 1)]);
    }
    std::sort(marks.begin(), marks.end());
    std::string out;
    out.reserve(line.text.size() + marks.size() * 2);
    std::size_t from = 0;
    for (std::size_t m : marks) {
        out.append(line.text, from, m - from);
        out += "\xCC\x81";  // U+0301
        from = m;
    }
    out.append(line.text, from, std::string::npos);
    return out;
}

PoemScansion detect_meter(const std::vector<TokenizedLine>& lines, const Lexicon& lex,
                          const ScanOptions& options) {
    std::vector<std::size_t> scannable;
    for (std::size_t i = 0; i < lines.size(); ++i)
        if (lines[i].total_syllables > 0) scannable.push_back(i);
    if (scannable.empty()) throw EmptyPoemError("poem has no scannable lines");

    struct Cell {
        ScanResult result;
        double tech = 0.0;
    };
    std::vector<std::vector<Cell>> grid(kMeterTemplates.size());
    std::array<double, 5> means{};
    for (std::size_t ti = 0; ti < kMeterTemplates.size(); ++ti) {
        const MeterTemplate& t = kMeterTemplates[ti];
        grid[ti].reserve(scannable.size());
        double sum = 0.0;
        for (std::size_t li : scannable) {
            Cell cell;
            cell.result = beam_scan_line(lines[li], lex, t, options);
            cell.tech = cell.result.score * coverage_factor(cell.result.assignment, t, options);
            sum += cell.tech;
            grid[ti].push_back(std::move(cell));
        }
        means[ti] = sum / static_cast<double>(scannable.size());
    }

    std::size_t best_t = 0;
    for (std::size_t ti = 1; ti < kMeterTemplates.size(); ++ti)
        if (means[ti] > means[best_t]) best_t = ti;

    PoemScansion poem;
    const bool other = means[best_t] < options.meter_floor;
    poem.poem_meter = other ? std::nullopt : std::optional<Meter>(kMeterTemplates[best_t].name);

    poem.lines.resize(lines.size());
    double sum = 0.0;
    for (std::size_t k = 0; k < scannable.size(); ++k) {
        const std::size_t li = scannable[k];
        std::size_t use_t = best_t;
        if (other) {
            use_t = 0;
            for (std::size_t ti = 1; ti < kMeterTemplates.size(); ++ti)
                if (grid[ti][k].tech > grid[use_t][k].tech) use_t = ti;
        }
        LineScansion& ls = poem.lines[li];
        ls.line = lines[li];
        ls.assignment = grid[use_t][k].result.assignment;
        ls.meter = kMeterTemplates[use_t].name;
        ls.technicality = grid[use_t][k].tech;
        ls.marked_text = emit_markup(ls.line, ls.assignment);
        ls.scannable = true;
        ls.low_confidence = lines[li].total_syllables < options.min_syllables_confident;
        sum += ls.technicality;
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].total_syllables > 0) continue;
        LineScansion& ls = poem.lines[i];
        ls.line = lines[i];
        ls.marked_text = lines[i].text;
        ls.scannable = false;
        ls.low_confidence = true;
    }
    poem.poem_technicality = sum / static_cast<double>(scannable.size());
    poem.low_confidence = true;
    for (std::size_t li : scannable)
        if (!poem.lines[li].low_confidence) poem.low_confidence = false;
    return poem;
}

PoemScansion scan_poem(std::string_view text, const Lexicon& lex, const ScanOptions& options) {
    std::vector<TokenizedLine> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view raw = text.substr(pos, nl - pos);
        while (!raw.empty() && (raw.back() == '\r' || raw.back() == ' ' || raw.back() == '\t'))
            raw.remove_suffix(1);
        while (!raw.empty() && (raw.front() == ' ' || raw.front() == '\t')) raw.remove_prefix(1);
        if (!raw.empty()) lines.push_back(tokenize_line(raw, lex));
        if (nl == text.size()) break;
        pos = nl + 1;
    }
    if (lines.empty()) throw EmptyPoemError("poem text is empty");
    return detect_meter(lines, lex, options);
}

}  // namespace strofa
