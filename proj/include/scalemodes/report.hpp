#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "scalemodes/histogram.hpp"
#include "scalemodes/mode_detection.hpp"

namespace scalemodes {

struct CurveReport {
    int position = 0;                   // bin at birth step
    int birth_step = 0;
    int length = 0;
    bool meaningful = false;
};

// Serializable summary of one detection run.
struct RunReport {
    std::string input;
    int n_bins = 0;
    std::string method;
    std::optional<double> epsilon;      // absent for otsu / kmeans
    double threshold_t = 0.0;
    std::vector<CurveReport> curves;
    std::vector<int> boundaries;
    std::vector<std::array<int, 2>> modes;
    double runtime_ms = 0.0;
};

// Assemble a report from a detection result.
RunReport make_run_report(const std::string& input, const Histogram& h, const ModeSet& ms,
                          const std::string& method, std::optional<double> epsilon,
                          double runtime_ms);

// JSON with stable key order (input, n_bins, method, epsilon, threshold_T,
// curves, boundaries, modes, runtime_ms); floats printed with at most 9
// significant digits. Identical reports serialize byte-identically.
std::string write_report_json(const RunReport& report);

RunReport read_report_json(const std::string& text);

void write_report_file(const std::string& path, const RunReport& report);
RunReport read_report_file(const std::string& path);

} // namespace scalemodes
