#include "scalemodes/histogram.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace scalemodes {

Histogram::Histogram(std::vector<double> c) : counts(std::move(c)) {
    if (counts.size() < 3)
        throw std::invalid_argument("histogram needs at least 3 bins, got " +
                                    std::to_string(counts.size()));
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (!std::isfinite(counts[i]) || counts[i] < 0.0)
            throw std::invalid_argument("histogram count at bin " + std::to_string(i) +
                                        " must be finite and nonnegative");
    }
}

double Histogram::total() const {
    return std::accumulate(counts.begin(), counts.end(), 0.0);
}

} // namespace scalemodes
