#include "strofa/corpus.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "strofa/errors.hpp"

namespace strofa {

using nlohmann::ordered_json;

std::optional<CorpusRecord> parse_corpus_record(std::string_view line, std::string& error) {
    ordered_json j = ordered_json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
        error = "not a JSON object";
        return std::nullopt;
    }
    if (!j.contains("id") || !j["id"].is_string() || j["id"].get<std::string>().empty()) {
        error = "missing non-empty 'id'";
        return std::nullopt;
    }
    if (!j.contains("text") || !j["text"].is_string()) {
        error = "missing 'text'";
        return std::nullopt;
    }
    CorpusRecord rec;
    rec.id = j["id"].get<std::string>();
    rec.text = j["text"].get<std::string>();
    rec.raw = std::move(j);
    return rec;
}

namespace {

struct Outcome {
    std::optional<CorpusRecord> record;
    RecordResult result;
};

Outcome handle_line(const std::string& line, std::uint64_t index, const Lexicon& lex,
                    const EngineOptions& options) {
    Outcome out;
    out.result.index = index;
    std::string error;
    out.record = parse_corpus_record(line, error);
    if (!out.record) {
        out.result.error = error;
        return out;
    }
    try {
        out.result.scansion = analyze_poem(out.record->text, lex, options);
        out.result.ok = true;
    } catch (const Error& e) {
        out.result.error = e.what();
    }
    return out;
}

bool read_batch(std::istream& in, std::size_t limit, std::vector<std::string>& lines) {
    lines.clear();
    std::string raw;
    while (lines.size() < limit && std::getline(in, raw)) {
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (raw.empty()) continue;
        lines.push_back(raw);
    }
    return !lines.empty();
}

struct SummaryTracker {
    ProcessSummary summary;
    std::unordered_set<std::string> seen_ids;

    void account(const Outcome& out, bool strict) {
        ++summary.total;
        if (!out.record) {
            ++summary.malformed;
            if (strict)
                throw LoadError("record " + std::to_string(out.result.index + 1) + ": " +
                                out.result.error);
            return;
        }
        if (!seen_ids.insert(out.record->id).second) ++summary.duplicate_ids;
        if (out.result.ok)
            ++summary.analyzed;
        else
            ++summary.failed;
    }
};

}  // namespace

ProcessSummary process_corpus_serial(std::istream& in, const Lexicon& lex,
                                     const EngineOptions& options, const CorpusRunOptions& run,
                                     const RecordSink& sink) {
    SummaryTracker tracker;
    std::string raw;
    std::uint64_t index = 0;
    while (std::getline(in, raw)) {
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (raw.empty()) continue;
        Outcome out = handle_line(raw, index++, lex, options);
        tracker.account(out, run.strict);
        if (out.record && sink) sink(*out.record, out.result);
    }
    return tracker.summary;
}

ProcessSummary process_corpus_parallel(std::istream& in, const Lexicon& lex,
                                       const EngineOptions& options, const CorpusRunOptions& run,
                                       const RecordSink& sink) {
    SummaryTracker tracker;
    std::vector<std::string> lines;
    std::vector<Outcome> outcomes;
    std::uint64_t base = 0;
    const int jobs = std::max(1, run.jobs);
    while (read_batch(in, std::max<std::size_t>(1, run.batch_size), lines)) {
        outcomes.assign(lines.size(), Outcome{});
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
#endif
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(lines.size()); ++i) {
            outcomes[static_cast<std::size_t>(i)] =
                handle_line(lines[static_cast<std::size_t>(i)],
                            base + static_cast<std::uint64_t>(i), lex, options);
        }
        // Emission stays in input order.
        for (const Outcome& out : outcomes) {
            tracker.account(out, run.strict);
            if (out.record && sink) sink(*out.record, out.result);
        }
        base += lines.size();
    }
    return tracker.summary;
}

ProcessSummary process_corpus(std::istream& in, const Lexicon& lex, const EngineOptions& options,
                              const CorpusRunOptions& run, const RecordSink& sink) {
    if (run.jobs <= 1) return process_corpus_serial(in, lex, options, run, sink);
    return process_corpus_parallel(in, lex, options, run, sink);
}

CorpusStats::CorpusStats(std::vector<double> thresholds_in)
    : thresholds(std::move(thresholds_in)),
      lines_above(thresholds.size(), 0),
      poems_all_lines_above(thresholds.size(), 0) {
    for (const auto& t : kMeterTemplates) meter_histogram[std::string(meter_name(t.name))] = 0;
    meter_histogram["other"] = 0;
}

void CorpusStats::add(const PoemScansion& poem) {
    ++n_poems;
    ++meter_histogram[std::string(meter_name(poem.poem_meter))];
    std::vector<bool> all_above(thresholds.size(), true);
    for (const LineScansion& line : poem.lines) {
        if (!line.scannable) continue;
        ++n_lines;
        const int bin = std::min(kBins - 1, static_cast<int>(line.technicality * kBins));
        ++line_score_histogram[static_cast<std::size_t>(std::max(0, bin))];
        for (std::size_t k = 0; k < thresholds.size(); ++k) {
            // Same >= criterion the filter command applies.
            if (line.technicality >= thresholds[k])
                ++lines_above[k];
            else
                all_above[k] = false;
        }
    }
    for (std::size_t k = 0; k < thresholds.size(); ++k)
        if (all_above[k]) ++poems_all_lines_above[k];
}

ordered_json CorpusStats::to_json() const {
    ordered_json j;
    j["poems"] = n_poems;
    j["lines"] = n_lines;
    ordered_json meters = ordered_json::object();
    for (const auto& [name, count] : meter_histogram) {
        ordered_json m;
        m["count"] = count;
        m["share"] = n_poems ? static_cast<double>(count) / static_cast<double>(n_poems) : 0.0;
        meters[name] = m;
    }
    j["meter_histogram"] = meters;
    ordered_json th = ordered_json::array();
    for (std::size_t k = 0; k < thresholds.size(); ++k) {
        ordered_json row;
        row["threshold"] = thresholds[k];
        row["lines_above"] = lines_above[k];
        row["lines_share"] =
            n_lines ? static_cast<double>(lines_above[k]) / static_cast<double>(n_lines) : 0.0;
        row["poems_all_lines_above"] = poems_all_lines_above[k];
        row["poems_share"] = n_poems ? static_cast<double>(poems_all_lines_above[k]) /
                                           static_cast<double>(n_poems)
                                     : 0.0;
        th.push_back(row);
    }
    j["thresholds"] = th;
    ordered_json hist = ordered_json::array();
    for (std::uint64_t c : line_score_histogram) hist.push_back(c);
    j["line_score_histogram"] = hist;
    return j;
}

std::string CorpusStats::to_tsv() const {
    std::ostringstream out;
    out << "meter\tcount\tshare\n";
    for (const auto& [name, count] : meter_histogram) {
        const double share =
            n_poems ? static_cast<double>(count) / static_cast<double>(n_poems) : 0.0;
        out << name << '\t' << count << '\t' << share << '\n';
    }
    out << "\nthreshold\tlines_above\tlines_share\tpoems_all_lines_above\tpoems_share\n";
    for (std::size_t k = 0; k < thresholds.size(); ++k) {
        const double ls =
            n_lines ? static_cast<double>(lines_above[k]) / static_cast<double>(n_lines) : 0.0;
        const double ps = n_poems ? static_cast<double>(poems_all_lines_above[k]) /
                                        static_cast<double>(n_poems)
                                  : 0.0;
        out << thresholds[k] << '\t' << lines_above[k] << '\t' << ls << '\t'
            << poems_all_lines_above[k] << '\t' << ps << '\n';
    }
    return out.str();
}

std::string CorpusStats::histogram_csv() const {
    std::ostringstream out;
    out << "bin_low,bin_high,count\n";
    for (int b = 0; b < kBins; ++b) {
        out << static_cast<double>(b) / kBins << ',' << static_cast<double>(b + 1) / kBins << ','
            << line_score_histogram[static_cast<std::size_t>(b)] << '\n';
    }
    return out.str();
}

ordered_json scansion_to_json(const PoemScansion& poem) {
    ordered_json j;
    j["meter"] = std::string(meter_name(poem.poem_meter));
    j["technicality"] = poem.poem_technicality;
    j["rhyme_scheme"] = poem.rhyme_scheme;
    j["low_confidence"] = poem.low_confidence;
    ordered_json lines = ordered_json::array();
    for (const LineScansion& line : poem.lines) {
        ordered_json lj;
        lj["text"] = line.line.text;
        lj["marked"] = line.marked_text;
        if (line.scannable) {
            lj["meter"] = std::string(meter_name(line.meter));
            lj["technicality"] = line.technicality;
            lj["syllables"] = line.line.total_syllables;
        } else {
            lj["meter"] = nullptr;
            lj["technicality"] = nullptr;
            lj["syllables"] = 0;
        }
        lines.push_back(lj);
    }
    j["lines"] = lines;
    return j;
}

}  // namespace strofa
