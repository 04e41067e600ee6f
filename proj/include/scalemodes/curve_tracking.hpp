#pragma once

#include <cstdint>
#include <vector>

#include "scalemodes/scale_space.hpp"

namespace scalemodes {

// Trajectory of one local minimum across consecutive scale steps.
struct MinimaCurve {
    int birth_step = 0;
    std::vector<int> positions;         // one bin index per step from birth to death

    int length() const { return static_cast<int>(positions.size()); }
    int death_step() const { return birth_step + length() - 1; }
};

// Occurrence counts of curve lengths, 1..l_max.
struct LengthHistogram {
    std::vector<std::int64_t> counts;   // counts[k] = number of curves of length k; [0] unused
    std::int64_t n = 0;                 // total number of curves
    int l_max = 0;

    bool empty() const { return n == 0; }
};

// Maximum positional drift accepted when matching minima between steps k and
// k+1: max(2, ceil(sqrt(t_{k+1}))).
int matching_window(double t_next);

// Greedy mutual-nearest matching of minima between consecutive levels, in
// increasing order of positional distance (ties toward smaller bin index).
// Matched minima extend a curve; unmatched old minima end theirs; unmatched
// new minima (discretization artifacts) start fresh curves. The result is
// sorted by (first position, birth_step).
std::vector<MinimaCurve> track_curves(const ScaleSpacePlane& plane);

// Length histogram of a curve set. An empty set yields an empty histogram
// (n = 0), the caller's signal that the input had no trackable minima.
LengthHistogram curve_lengths(const std::vector<MinimaCurve>& curves, int l_max);

} // namespace scalemodes
