#pragma once

#include <vector>

#include "scalemodes/histogram.hpp"

namespace scalemodes {

// Truncation factor C for the sampled Gaussian kernel. The kernel is cut at
// M = ceil(C*sqrt(t)) + 1 taps per side; C = 6 keeps each discarded tail
// below 1e-9 of the total mass.
inline constexpr double default_trunc_factor = 6.0;
inline constexpr double min_trunc_factor = 3.0;
inline constexpr double max_trunc_factor = 6.0;

// Sampled, truncated, renormalized Gaussian of variance t (in bins^2).
struct Kernel {
    double t = 0.0;
    double trunc_factor = default_trunc_factor;
    int half_width = 0;                 // M
    std::vector<double> weights;        // 2M+1 taps, symmetric, unit sum
};

Kernel sample_gaussian_kernel(double t, double trunc_factor = default_trunc_factor);

// Scale grid: sqrt(t_k) = 0.5*k for k = 0..n_steps, n_steps = 2*x_max.
struct ScaleGrid {
    double sqrt_t0 = 0.5;
    int n_steps = 0;

    static ScaleGrid for_bins(int n_bins);

    double scale(int k) const { double s = sqrt_t0 * k; return s * s; }
    int n_planes() const { return n_steps + 1; }
};

// One smoothed level plus its detected interior local minima.
struct Level {
    std::vector<double> values;
    std::vector<int> minima;            // sorted bin indices
};

// The full stack of smoothed levels for one histogram.
struct ScaleSpacePlane {
    ScaleGrid grid;
    std::vector<Level> levels;          // levels[k] at scale t_k; levels[0] is the raw input

    int n_bins() const { return levels.empty() ? 0 : static_cast<int>(levels[0].values.size()); }
};

// Convolve with the sampled Gaussian of variance t under half-sample
// symmetric boundary extension. t = 0 returns the input unchanged.
std::vector<double> smooth(const Histogram& h, double t, double trunc_factor = default_trunc_factor);

// Interior local minima with the plateau rule: a run of equal values that is
// strictly below both neighboring runs yields one minimum at the run's first
// index. Endpoint runs never qualify.
std::vector<int> find_local_minima(const std::vector<double>& signal);

// Build all n_steps+1 levels by direct convolution from the raw histogram
// (no cascading, so discretization error does not accumulate).
ScaleSpacePlane build_plane(const Histogram& h, double trunc_factor = default_trunc_factor);

} // namespace scalemodes
