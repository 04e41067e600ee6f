#include "scalemodes/scale_space.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace scalemodes {

namespace {

constexpr double pi = 3.14159265358979323846;

// Half-sample symmetric extension: ...f[1],f[0] | f[0..n-1] | f[n-1],f[n-2]...
// The extension is periodic with period 2n.
int reflect_index(int i, int n) {
    const int period = 2 * n;
    int m = i % period;
    if (m < 0) m += period;
    return m < n ? m : period - 1 - m;
}

std::vector<double> convolve_reflect(const std::vector<double>& f, const Kernel& k) {
    const int n = static_cast<int>(f.size());
    const int m = k.half_width;

    std::vector<double> padded(f.size() + 2 * static_cast<std::size_t>(m));
    for (int i = 0; i < static_cast<int>(padded.size()); ++i)
        padded[i] = f[reflect_index(i - m, n)];

    std::vector<double> out(f.size());
    const int taps = 2 * m + 1;
    for (int x = 0; x < n; ++x) {
        const double* p = padded.data() + x;
        double acc = 0.0;
        for (int j = 0; j < taps; ++j) acc += p[j] * k.weights[j];
        out[x] = acc;
    }
    return out;
}

} // namespace

Kernel sample_gaussian_kernel(double t, double trunc_factor) {
    if (!(t > 0.0))
        throw std::invalid_argument("kernel scale t must be positive, got " + std::to_string(t));
    if (!(trunc_factor >= min_trunc_factor && trunc_factor <= max_trunc_factor))
        throw std::invalid_argument("truncation factor must lie in [3, 6], got " +
                                    std::to_string(trunc_factor));

    Kernel k;
    k.t = t;
    k.trunc_factor = trunc_factor;
    k.half_width = static_cast<int>(std::ceil(trunc_factor * std::sqrt(t))) + 1;
    k.weights.resize(2 * static_cast<std::size_t>(k.half_width) + 1);

    const double norm = 1.0 / std::sqrt(2.0 * pi * t);
    for (int i = 0; i <= k.half_width; ++i) {
        const double w = norm * std::exp(-0.5 * static_cast<double>(i) * i / t);
        k.weights[k.half_width + i] = w;
        k.weights[k.half_width - i] = w;
    }

    const double sum = std::accumulate(k.weights.begin(), k.weights.end(), 0.0);
    for (double& w : k.weights) w /= sum;
    return k;
}

ScaleGrid ScaleGrid::for_bins(int n_bins) {
    if (n_bins < 3)
        throw std::invalid_argument("scale grid needs at least 3 bins");
    ScaleGrid g;
    g.n_steps = 2 * (n_bins - 1);
    return g;
}

std::vector<double> smooth(const Histogram& h, double t, double trunc_factor) {
    if (t < 0.0)
        throw std::invalid_argument("smoothing scale t must be nonnegative");
    if (t == 0.0) return h.counts;
    return convolve_reflect(h.counts, sample_gaussian_kernel(t, trunc_factor));
}

std::vector<int> find_local_minima(const std::vector<double>& signal) {
    const int n = static_cast<int>(signal.size());
    if (n < 3)
        throw std::invalid_argument("minima detection needs at least 3 samples");

    std::vector<int> minima;
    int start = 0;
    while (start < n) {
        int end = start;
        while (end + 1 < n && signal[end + 1] == signal[start]) ++end;
        if (start > 0 && end < n - 1 && signal[start - 1] > signal[start] &&
            signal[end + 1] > signal[start])
            minima.push_back(start);
        start = end + 1;
    }
    return minima;
}

ScaleSpacePlane build_plane(const Histogram& h, double trunc_factor) {
    ScaleSpacePlane plane;
    plane.grid = ScaleGrid::for_bins(h.n_bins());
    plane.levels.resize(plane.grid.n_planes());

    plane.levels[0].values = h.counts;
    plane.levels[0].minima = find_local_minima(plane.levels[0].values);
    for (int k = 1; k <= plane.grid.n_steps; ++k) {
        plane.levels[k].values = smooth(h, plane.grid.scale(k), trunc_factor);
        plane.levels[k].minima = find_local_minima(plane.levels[k].values);
    }
    return plane;
}

} // namespace scalemodes
