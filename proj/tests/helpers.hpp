#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "strofa/lexicon.hpp"

namespace testutil {

inline std::filesystem::path source_dir() {
    return std::filesystem::path(STROFA_SOURCE_DIR);
}

inline const strofa::Lexicon& shipped_lexicon() {
    static const strofa::Lexicon lex = [] {
        strofa::LexiconConfig cfg;
        cfg.function_words_path = source_dir() / "data" / "function_words.txt";
        cfg.collocations_path = source_dir() / "data" / "collocations.tsv";
        return strofa::Lexicon::load(source_dir() / "data" / "lexicon.tsv", cfg);
    }();
    return lex;
}

struct Quatrain {
    std::string meter;
    std::vector<std::string> lines;
};

inline const std::vector<Quatrain>& canonical_quatrains() {
    static const std::vector<Quatrain> poems = [] {
        std::vector<Quatrain> out;
        std::ifstream in(source_dir() / "tests" / "data" / "canonical_quatrains.jsonl");
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            auto j = nlohmann::json::parse(line);
            Quatrain q;
            q.meter = j["meter"].get<std::string>();
            for (const auto& l : j["lines"]) q.lines.push_back(l.get<std::string>());
            out.push_back(std::move(q));
        }
        return out;
    }();
    return poems;
}

inline std::string join_lines(const std::vector<std::string>& lines) {
    std::string out;
    for (const auto& l : lines) {
        out += l;
        out += '\n';
    }
    return out;
}

}  // namespace testutil
