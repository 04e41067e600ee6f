#include "scalemodes/mode_detection.hpp"

#include <algorithm>
#include <stdexcept>

#include "scalemodes/curve_tracking.hpp"

namespace scalemodes {

namespace {

bool is_probabilistic(ThresholdRule rule) {
    return rule == ThresholdRule::UniformLaw || rule == ThresholdRule::HalfNormalLaw ||
           rule == ThresholdRule::EmpiricalLaw;
}

ThresholdResult run_threshold(const std::vector<MinimaCurve>& curves, int l_max,
                              const DetectionConfig& cfg) {
    const std::size_t n = curves.size();
    const double epsilon = cfg.epsilon ? *cfg.epsilon : 1.0 / static_cast<double>(n);

    if (n == 1) {
        // One valley in the data is one boundary; no distribution to separate.
        ThresholdResult r;
        r.degenerate = true;
        r.threshold = 0.0;
        r.note = "single curve; threshold degenerates to 0";
        if (is_probabilistic(cfg.method.rule)) r.epsilon = epsilon;
        return r;
    }

    std::vector<double> lengths;
    lengths.reserve(n);
    for (const MinimaCurve& c : curves) lengths.push_back(c.length());

    switch (cfg.method.rule) {
        case ThresholdRule::UniformLaw:
            return threshold_uniform(l_max, epsilon);
        case ThresholdRule::HalfNormalLaw:
            return threshold_halfnormal(lengths, l_max, epsilon);
        case ThresholdRule::EmpiricalLaw:
            return threshold_empirical(curve_lengths(curves, l_max), epsilon);
        case ThresholdRule::Otsu:
            return threshold_otsu(curve_lengths(curves, l_max));
        case ThresholdRule::KMeans:
            return cluster_kmeans(lengths, cfg.method.norm, cfg.method.init,
                                  cfg.method.restarts, cfg.seed);
    }
    throw std::logic_error("unknown threshold rule");
}

} // namespace

ModeSet detect_modes(const Histogram& h, const DetectionConfig& cfg) {
    if (cfg.epsilon && !(*cfg.epsilon > 0.0 && *cfg.epsilon <= 1.0))
        throw std::invalid_argument("epsilon must lie in (0, 1]");

    const ScaleSpacePlane plane = build_plane(h, cfg.trunc_factor);
    ModeSet ms;
    ms.curves = track_curves(plane);
    ms.meaningful.assign(ms.curves.size(), false);

    if (ms.curves.empty()) {
        ms.threshold.degenerate = true;
        ms.threshold.note = "no trackable minima; single trivial mode";
        ms.modes = modes_from_boundaries({}, h.n_bins());
        return ms;
    }

    const int l_max = plane.grid.n_steps + 1;
    ms.threshold = run_threshold(ms.curves, l_max, cfg);

    for (std::size_t i : select_meaningful(ms.curves, ms.threshold)) {
        ms.meaningful[i] = true;
        ms.boundaries.push_back(ms.curves[i].positions.front());
    }
    std::sort(ms.boundaries.begin(), ms.boundaries.end());
    ms.boundaries.erase(std::unique(ms.boundaries.begin(), ms.boundaries.end()),
                        ms.boundaries.end());
    ms.modes = modes_from_boundaries(ms.boundaries, h.n_bins());
    return ms;
}

std::vector<std::array<int, 2>> modes_from_boundaries(const std::vector<int>& boundaries,
                                                      int n_bins) {
    if (n_bins < 3)
        throw std::invalid_argument("modes need at least 3 bins");
    const int x_max = n_bins - 1;
    int prev = 0;
    for (int b : boundaries) {
        if (b <= prev || b >= x_max)
            throw std::invalid_argument("boundaries must be sorted, distinct and interior");
        prev = b;
    }

    std::vector<std::array<int, 2>> modes;
    int lo = 0;
    for (int b : boundaries) {
        modes.push_back({lo, b});
        lo = b;
    }
    modes.push_back({lo, x_max});
    return modes;
}

} // namespace scalemodes
