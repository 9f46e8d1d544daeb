// Compares the serial reference corpus pipeline against the OpenMP one on a
// synthetic corpus and reports throughput for both.
#include <chrono>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "strofa/corpus.hpp"
#include "strofa/lexicon.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

std::string make_corpus(int n_records) {
    // Two fixed quatrains alternated; enough to exercise the full pipeline.
    static const char* kPoems[] = {
        "Мороз и солнце; день чудесный!\\nЕщё ты дремлешь, друг прелестный —\\n"
        "Пора, красавица, проснись:\\nОткрой сомкнуты негой взоры",
        "Буря мглою небо кроет,\\nВихри снежные крутя;\\n"
        "То, как зверь, она завоет,\\nТо заплачет, как дитя",
    };
    std::ostringstream out;
    for (int i = 0; i < n_records; ++i)
        out << "{\"id\":\"" << i << "\",\"text\":\"" << kPoems[i % 2] << "\"}\n";
    return out.str();
}

double run(const std::string& corpus, const strofa::Lexicon& lex,
           const strofa::EngineOptions& options, int jobs, std::uint64_t& checksum) {
    std::istringstream in(corpus);
    strofa::CorpusRunOptions run_opts{jobs, false, 256};
    checksum = 0;
    auto sink = [&](const strofa::CorpusRecord&, const strofa::RecordResult& res) {
        if (res.ok)
            checksum += static_cast<std::uint64_t>(res.scansion.poem_technicality * 1e6) +
                        res.scansion.rhyme_scheme.size();
    };
    const auto t0 = std::chrono::steady_clock::now();
    if (jobs <= 1)
        strofa::process_corpus_serial(in, lex, options, run_opts, sink);
    else
        strofa::process_corpus_parallel(in, lex, options, run_opts, sink);
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Benchmark: serial reference vs OpenMP corpus pipeline"};
    std::string lexicon = "data/lexicon.tsv";
    int records = 4000;
    int jobs = 0;  // 0 = hardware default
    app.add_option("--lexicon", lexicon, "Accent dictionary TSV")->capture_default_str();
    app.add_option("--records", records, "Synthetic corpus size")->capture_default_str();
    app.add_option("--jobs", jobs, "Threads for the parallel run (0 = all)")
        ->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    strofa::LexiconConfig cfg;
    const auto dir = std::filesystem::path(lexicon).parent_path();
    if (std::filesystem::exists(dir / "function_words.txt"))
        cfg.function_words_path = dir / "function_words.txt";
    if (std::filesystem::exists(dir / "collocations.tsv"))
        cfg.collocations_path = dir / "collocations.tsv";
    const strofa::Lexicon lex = strofa::Lexicon::load(lexicon, cfg);
    const strofa::EngineOptions options;
    const std::string corpus = make_corpus(records);

#ifdef _OPENMP
    if (jobs <= 0) jobs = omp_get_max_threads();
#else
    if (jobs <= 0) jobs = 1;
#endif

    std::uint64_t check_serial = 0, check_parallel = 0;
    const double t_serial = run(corpus, lex, options, 1, check_serial);
    const double t_parallel = run(corpus, lex, options, jobs, check_parallel);

    std::cout << "records:          " << records << "\n";
    std::cout << "serial:           " << t_serial << " s  (" << records / t_serial
              << " poems/s)\n";
    std::cout << "openmp (" << jobs << " jobs): " << t_parallel << " s  ("
              << records / t_parallel << " poems/s)\n";
    std::cout << "speedup:          " << t_serial / t_parallel << "x\n";
    std::cout << (check_serial == check_parallel ? "outputs match\n"
                                                 : "OUTPUT MISMATCH\n");
    return check_serial == check_parallel ? 0 : 1;
}
