#include "scalemodes/curve_tracking.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <tuple>

namespace scalemodes {

int matching_window(double t_next) {
    return std::max(2, static_cast<int>(std::ceil(std::sqrt(t_next))));
}

std::vector<MinimaCurve> track_curves(const ScaleSpacePlane& plane) {
    std::vector<MinimaCurve> curves;
    // Active minima at the current step: (position, curve index), position-sorted.
    std::vector<std::pair<int, int>> active;

    for (int pos : plane.levels[0].minima) {
        active.emplace_back(pos, static_cast<int>(curves.size()));
        curves.push_back({0, {pos}});
    }

    struct Candidate {
        int dist, cur_pos, next_pos, active_idx, next_idx;
    };

    for (int k = 0; k < plane.grid.n_steps; ++k) {
        const std::vector<int>& next = plane.levels[k + 1].minima;
        const int window = matching_window(plane.grid.scale(k + 1));

        std::vector<Candidate> candidates;
        for (std::size_t a = 0; a < active.size(); ++a) {
            const int p = active[a].first;
            auto lo = std::lower_bound(next.begin(), next.end(), p - window);
            for (auto it = lo; it != next.end() && *it <= p + window; ++it)
                candidates.push_back({std::abs(*it - p), p, *it, static_cast<int>(a),
                                      static_cast<int>(it - next.begin())});
        }
        std::sort(candidates.begin(), candidates.end(),
                  [](const Candidate& l, const Candidate& r) {
                      return std::tie(l.dist, l.cur_pos, l.next_pos) <
                             std::tie(r.dist, r.cur_pos, r.next_pos);
                  });

        std::vector<char> active_used(active.size(), 0), next_used(next.size(), 0);
        std::vector<std::pair<int, int>> new_active;
        for (const Candidate& c : candidates) {
            if (active_used[c.active_idx] || next_used[c.next_idx]) continue;
            active_used[c.active_idx] = next_used[c.next_idx] = 1;
            const int ci = active[c.active_idx].second;
            curves[ci].positions.push_back(c.next_pos);
            new_active.emplace_back(c.next_pos, ci);
        }
        for (std::size_t j = 0; j < next.size(); ++j) {
            if (next_used[j]) continue;
            new_active.emplace_back(next[j], static_cast<int>(curves.size()));
            curves.push_back({k + 1, {next[j]}});
        }
        std::sort(new_active.begin(), new_active.end());
        active = std::move(new_active);
    }

    std::sort(curves.begin(), curves.end(), [](const MinimaCurve& a, const MinimaCurve& b) {
        return std::tie(a.positions.front(), a.birth_step) <
               std::tie(b.positions.front(), b.birth_step);
    });
    return curves;
}

LengthHistogram curve_lengths(const std::vector<MinimaCurve>& curves, int l_max) {
    if (l_max < 1)
        throw std::invalid_argument("curve_lengths: l_max must be at least 1");

    LengthHistogram hist;
    hist.l_max = l_max;
    hist.counts.assign(static_cast<std::size_t>(l_max) + 1, 0);
    for (const MinimaCurve& c : curves) {
        if (c.length() < 1 || c.length() > l_max)
            throw std::invalid_argument("curve length outside [1, l_max]");
        ++hist.counts[c.length()];
        ++hist.n;
    }
    return hist;
}

} // namespace scalemodes
