#pragma once

#include <vector>

namespace scalemodes {

// A 1D histogram (or spectrum): nonnegative real counts over bins 0..x_max.
struct Histogram {
    std::vector<double> counts;

    Histogram() = default;
    explicit Histogram(std::vector<double> c);

    int n_bins() const { return static_cast<int>(counts.size()); }
    int x_max() const { return n_bins() - 1; }
    double total() const;
};

} // namespace scalemodes
