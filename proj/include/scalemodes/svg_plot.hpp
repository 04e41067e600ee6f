#pragma once

#include <string>

#include "scalemodes/histogram.hpp"
#include "scalemodes/mode_detection.hpp"

namespace scalemodes {

// Self-contained SVG 1.1 plot: the histogram as a polyline over filled bars,
// one vertical class="boundary" line per detected boundary, and axis labels.
// Output is byte-deterministic for identical inputs.
std::string render_svg_plot(const Histogram& h, const ModeSet& modes);

} // namespace scalemodes
