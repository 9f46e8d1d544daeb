#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "strofa/lexicon.hpp"
#include "strofa/options.hpp"
#include "strofa/rhyme.hpp"
#include "strofa/scansion.hpp"

namespace strofa {

// One JSONL corpus record: required non-empty "id" and "text"; any other
// fields ride along untouched in `raw`.
struct CorpusRecord {
    std::string id;
    std::string text;
    nlohmann::ordered_json raw;
};

struct RecordResult {
    std::uint64_t index = 0;  // input position, 0-based
    bool ok = false;
    std::string error;
    PoemScansion scansion;  // valid when ok
};

// Invoked in input order for every record that parsed, whether or not the
// analysis succeeded.
using RecordSink = std::function<void(const CorpusRecord&, const RecordResult&)>;

struct ProcessSummary {
    std::uint64_t total = 0;      // non-empty JSONL lines
    std::uint64_t analyzed = 0;   // records with a successful scansion
    std::uint64_t malformed = 0;  // lines that failed to parse/validate
    std::uint64_t failed = 0;     // parsed records whose analysis failed
    std::uint64_t duplicate_ids = 0;
};

struct CorpusRunOptions {
    int jobs = 1;
    bool strict = false;          // abort on the first malformed record
    std::size_t batch_size = 256;  // records per parallel batch
};

std::optional<CorpusRecord> parse_corpus_record(std::string_view line, std::string& error);

// Reference implementation: plain single-threaded loop.
ProcessSummary process_corpus_serial(std::istream& in, const Lexicon& lex,
                                     const EngineOptions& options, const CorpusRunOptions& run,
                                     const RecordSink& sink);

// OpenMP batches over records; the sink still sees input order.
ProcessSummary process_corpus_parallel(std::istream& in, const Lexicon& lex,
                                       const EngineOptions& options, const CorpusRunOptions& run,
                                       const RecordSink& sink);

// Dispatches on run.jobs (<=1 selects the serial reference).
ProcessSummary process_corpus(std::istream& in, const Lexicon& lex, const EngineOptions& options,
                              const CorpusRunOptions& run, const RecordSink& sink);

// Single-pass corpus aggregates: meter histogram, a fixed 50-bin line-score
// histogram, and per-threshold line/poem counts. Shares are derived on
// rendering, never stored.
struct CorpusStats {
    static constexpr int kBins = 50;

    std::map<std::string, std::uint64_t> meter_histogram;
    std::array<std::uint64_t, kBins> line_score_histogram{};
    std::vector<double> thresholds;
    std::vector<std::uint64_t> lines_above;
    std::vector<std::uint64_t> poems_all_lines_above;
    std::uint64_t n_poems = 0;
    std::uint64_t n_lines = 0;

    explicit CorpusStats(std::vector<double> thresholds_in = {0.5, 0.6, 0.7, 0.8, 0.9});
    void add(const PoemScansion& poem);

    nlohmann::ordered_json to_json() const;
    std::string to_tsv() const;
    std::string histogram_csv() const;
};

// Analysis document rendering shared by the CLI.
nlohmann::ordered_json scansion_to_json(const PoemScansion& poem);

}  // namespace strofa
