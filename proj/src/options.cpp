#include "strofa/options.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>

namespace strofa {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

bool parse_bool(const std::string& v, int line_no) {
    if (v == "true") return true;
    if (v == "false") return false;
    throw LoadError("config line " + std::to_string(line_no) + ": expected true/false, got '" + v +
                    "'");
}

double parse_num(const std::string& v, int line_no) {
    try {
        std::size_t pos = 0;
        double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw LoadError("config line " + std::to_string(line_no) + ": expected a number, got '" +
                        v + "'");
    }
}

}  // namespace

EngineOptions parse_options(std::string_view text) {
    EngineOptions opts;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::string section = "scan";
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::string line = trim(raw);
        if (line.empty()) continue;
        if (line.front() == '[' && line.back() == ']') {
            section = trim(line.substr(1, line.size() - 2));
            if (section != "scan" && section != "rhyme")
                throw LoadError("config line " + std::to_string(line_no) + ": unknown section [" +
                                section + "]");
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw LoadError("config line " + std::to_string(line_no) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (!val.empty() && val.front() == '"' && val.back() == '"' && val.size() >= 2)
            val = val.substr(1, val.size() - 2);

        ScanOptions& s = opts.scan;
        RhymeOptions& r = opts.rhyme;
        if (section == "scan") {
            if (key == "beam_width")
                s.beam_width = static_cast<int>(parse_num(val, line_no));
            else if (key == "off_ictus_poly")
                s.off_ictus_poly = parse_num(val, line_no);
            else if (key == "off_ictus_mono")
                s.off_ictus_mono = parse_num(val, line_no);
            else if (key == "missed_ictus")
                s.missed_ictus = parse_num(val, line_no);
            else if (key == "unstress_preference")
                s.unstress_preference = parse_num(val, line_no);
            else if (key == "oov_fit_meter")
                s.oov_fit_meter = parse_bool(val, line_no);
            else if (key == "oov_fit_penalty")
                s.oov_fit_penalty = parse_num(val, line_no);
            else if (key == "meter_floor")
                s.meter_floor = parse_num(val, line_no);
            else if (key == "min_syllables_confident")
                s.min_syllables_confident = static_cast<int>(parse_num(val, line_no));
            else if (key == "stress_coverage_min")
                s.stress_coverage_min = parse_num(val, line_no);
            else if (key == "brute_cap")
                s.brute_cap = static_cast<std::uint64_t>(parse_num(val, line_no));
            else
                throw LoadError("config line " + std::to_string(line_no) + ": unknown key '" +
                                key + "' in [scan]");
        } else {
            if (key == "threshold")
                r.threshold = parse_num(val, line_no);
            else if (key == "max_distance")
                r.max_distance = static_cast<int>(parse_num(val, line_no));
            else
                throw LoadError("config line " + std::to_string(line_no) + ": unknown key '" +
                                key + "' in [rhyme]");
        }
    }
    if (opts.scan.beam_width < 1) throw LoadError("beam_width must be >= 1");
    return opts;
}

EngineOptions load_options(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open config file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_options(buf.str());
}

}  // namespace strofa
