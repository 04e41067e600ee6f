#pragma once

#include <string>

#include "scalemodes/histogram.hpp"

namespace scalemodes {

// Parse histogram CSV text. Each non-empty line is either "count" or
// "bin,count"; explicit bins must run 0,1,2,... without gaps. Blank lines and
// lines starting with '#' are skipped. Errors throw std::runtime_error with
// the offending line number.
Histogram parse_histogram_csv(const std::string& text);

// Same, reading from a file.
Histogram read_histogram_csv(const std::string& path);

} // namespace scalemodes
