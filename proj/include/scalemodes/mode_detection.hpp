#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "scalemodes/histogram.hpp"
#include "scalemodes/scale_space.hpp"
#include "scalemodes/thresholding.hpp"

namespace scalemodes {

struct DetectionConfig {
    ThresholdMethod method;
    std::optional<double> epsilon;      // absent = auto (1/n curves)
    double trunc_factor = default_trunc_factor;
    std::uint64_t seed = 0;
};

// Detected mode structure of a histogram.
struct ModeSet {
    std::vector<int> boundaries;                // sorted distinct interior bins
    std::vector<std::array<int, 2>> modes;      // supports tiling [0, x_max]
    ThresholdResult threshold;
    std::vector<MinimaCurve> curves;            // all tracked curves, by first position
    std::vector<bool> meaningful;               // parallel to curves
};

// Full pipeline: scale-space plane, curve tracking, length thresholding and
// meaningful-curve selection. Boundaries are the meaningful curves' positions
// at their birth step. No meaningful curve leaves the single mode [0, x_max].
ModeSet detect_modes(const Histogram& h, const DetectionConfig& cfg);

// Expand sorted interior boundaries into closed supports sharing endpoints:
// [0,b1],[b1,b2],...,[bm,x_max].
std::vector<std::array<int, 2>> modes_from_boundaries(const std::vector<int>& boundaries,
                                                      int n_bins);

} // namespace scalemodes
