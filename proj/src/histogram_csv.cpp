#include "scalemodes/histogram_csv.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace scalemodes {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
    throw std::runtime_error("histogram csv: " + msg + " at line " + std::to_string(line));
}

std::string trim(const std::string& s) {
    const std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_number(const std::string& tok, int line, const char* what) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(tok, &pos);
    } catch (const std::exception&) {
        fail(line, std::string("invalid ") + what + " '" + tok + "'");
    }
    if (pos != tok.size() || !std::isfinite(v))
        fail(line, std::string("invalid ") + what + " '" + tok + "'");
    return v;
}

} // namespace

Histogram parse_histogram_csv(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::vector<double> counts;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string s = trim(raw);
        if (s.empty() || s[0] == '#') continue;

        const std::size_t comma = s.find(',');
        std::string count_tok = s;
        if (comma != std::string::npos) {
            const std::string bin_tok = trim(s.substr(0, comma));
            count_tok = trim(s.substr(comma + 1));
            if (count_tok.find(',') != std::string::npos)
                fail(line, "too many fields");
            const double bin = parse_number(bin_tok, line, "bin index");
            if (bin != static_cast<double>(counts.size()))
                fail(line, "out-of-order or missing bin");
        }
        const double count = parse_number(count_tok, line, "count");
        if (count < 0.0) fail(line, "negative count '" + count_tok + "'");
        counts.push_back(count);
    }
    if (counts.size() < 3)
        throw std::runtime_error("histogram csv: need at least 3 bins, got " +
                                 std::to_string(counts.size()));
    return Histogram(std::move(counts));
}

Histogram read_histogram_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("histogram csv: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_histogram_csv(buf.str());
}

} // namespace scalemodes
