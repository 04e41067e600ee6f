#include "scalemodes/thresholding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace scalemodes {

namespace {

constexpr double pi = 3.14159265358979323846;

void require_epsilon(double epsilon) {
    if (!(epsilon > 0.0 && epsilon <= 1.0))
        throw std::invalid_argument("epsilon must lie in (0, 1], got " + std::to_string(epsilon));
}

// --- two-class 1D k-means -------------------------------------------------
//
// On sorted data the two clusters are always a prefix/suffix split (ties at
// the midpoint go to the lower cluster), so Lloyd iterations only move the
// split index.

double cluster_centroid(const std::vector<double>& xs, std::size_t lo, std::size_t hi,
                        KMeansNorm norm) {
    // xs sorted; cluster is xs[lo..hi).
    if (norm == KMeansNorm::L2) {
        double sum = 0.0;
        for (std::size_t i = lo; i < hi; ++i) sum += xs[i];
        return sum / static_cast<double>(hi - lo);
    }
    const std::size_t count = hi - lo;
    const std::size_t mid = lo + count / 2;
    return count % 2 ? xs[mid] : 0.5 * (xs[mid - 1] + xs[mid]);
}

double cluster_cost(const std::vector<double>& xs, std::size_t lo, std::size_t hi,
                    double centroid, KMeansNorm norm) {
    double cost = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
        const double d = xs[i] - centroid;
        cost += norm == KMeansNorm::L2 ? d * d : std::fabs(d);
    }
    return cost;
}

struct LloydOutcome {
    std::size_t split = 0;              // xs[0..split) low, xs[split..n) high
    double c_low = 0.0, c_high = 0.0;
    double objective = 0.0;
};

LloydOutcome run_lloyd(const std::vector<double>& xs, double c1, double c2, KMeansNorm norm) {
    const std::size_t n = xs.size();
    if (c1 > c2) std::swap(c1, c2);

    std::size_t prev_split = n + 1;     // sentinel: no assignment yet
    std::size_t split = 0;
    for (int iter = 0; iter < 100; ++iter) {
        const double mid = 0.5 * (c1 + c2);
        split = static_cast<std::size_t>(
            std::upper_bound(xs.begin(), xs.end(), mid) - xs.begin());

        if (split == 0) {               // low cluster empty: reseed at the farthest point
            c1 = (c2 - xs.front() >= xs.back() - c2) ? xs.front() : xs.back();
            if (c1 > c2) std::swap(c1, c2);
            prev_split = n + 1;
            continue;
        }
        if (split == n) {               // high cluster empty
            c2 = (c1 - xs.front() >= xs.back() - c1) ? xs.front() : xs.back();
            if (c1 > c2) std::swap(c1, c2);
            prev_split = n + 1;
            continue;
        }
        if (split == prev_split) break;
        prev_split = split;
        c1 = cluster_centroid(xs, 0, split, norm);
        c2 = cluster_centroid(xs, split, n, norm);
    }
    if (split == 0 || split == n)
        throw std::logic_error("k-means failed to produce two nonempty clusters");

    LloydOutcome out;
    out.split = split;
    out.c_low = cluster_centroid(xs, 0, split, norm);
    out.c_high = cluster_centroid(xs, split, n, norm);
    out.objective = cluster_cost(xs, 0, split, out.c_low, norm) +
                    cluster_cost(xs, split, n, out.c_high, norm);
    return out;
}

// Centroids and cost of the partition xs[0..s) | xs[s..n).
LloydOutcome split_outcome(const std::vector<double>& xs, std::size_t s, KMeansNorm norm) {
    const std::size_t n = xs.size();
    LloydOutcome out;
    out.split = s;
    out.c_low = cluster_centroid(xs, 0, s, norm);
    out.c_high = cluster_centroid(xs, s, n, norm);
    out.objective = cluster_cost(xs, 0, s, out.c_low, norm) +
                    cluster_cost(xs, s, n, out.c_high, norm);
    return out;
}

ThresholdResult degenerate_result(const std::string& note) {
    ThresholdResult r;
    r.threshold = 0.0;
    r.degenerate = true;
    r.note = note;
    return r;
}

} // namespace

double erf_inv(double y) {
    if (!(std::fabs(y) < 1.0))
        throw std::invalid_argument("erf_inv argument must lie in (-1, 1)");
    if (y == 0.0) return 0.0;

    // Winitzki-style rational initial guess, good to ~1e-4.
    const double a = 0.147;
    const double ln1my2 = std::log1p(-y * y);
    const double term = 2.0 / (pi * a) + 0.5 * ln1my2;
    double x = std::copysign(std::sqrt(std::sqrt(term * term - ln1my2 / a) - term), y);

    // Newton on erf(x) - y; derivative is 2/sqrt(pi)*exp(-x^2).
    const double half_sqrt_pi = 0.5 * std::sqrt(pi);
    for (int i = 0; i < 6; ++i) {
        const double err = std::erf(x) - y;
        if (err == 0.0) break;
        x -= err * half_sqrt_pi * std::exp(x * x);
    }
    return x;
}

ThresholdResult threshold_uniform(double l_max, double epsilon) {
    require_epsilon(epsilon);
    ThresholdResult r;
    r.epsilon = epsilon;
    // Smallest admissible T; clamped so T never exceeds l_max (the meaningful
    // set is the same either way since no curve is longer than l_max).
    r.threshold = std::min((1.0 - epsilon) * l_max + 1.0, l_max);
    return r;
}

ThresholdResult threshold_halfnormal(const std::vector<double>& lengths, double l_max,
                                     double epsilon) {
    if (lengths.empty())
        throw std::invalid_argument("half-normal law needs a nonempty length multiset");
    require_epsilon(epsilon);
    for (double l : lengths)
        if (!(l > 0.0))
            throw std::invalid_argument("curve lengths must be positive");

    const double mean = std::accumulate(lengths.begin(), lengths.end(), 0.0) /
                        static_cast<double>(lengths.size());
    const double sigma = std::sqrt(pi / 2.0) * mean;
    const double scale = sigma * std::sqrt(2.0);
    const double arg = std::erf(l_max / scale) - epsilon;

    ThresholdResult r;
    r.epsilon = epsilon;
    r.sigma = sigma;
    if (arg < 0.0) {
        // epsilon exceeds the whole tail mass: no admissible threshold.
        r = degenerate_result("epsilon too large for the fitted half-normal tail");
        r.epsilon = epsilon;
        r.sigma = sigma;
        return r;
    }
    r.threshold = scale * erf_inv(arg);
    return r;
}

ThresholdResult threshold_empirical(const LengthHistogram& hist, double epsilon) {
    if (hist.empty())
        throw std::invalid_argument("empirical law needs a nonempty length histogram");
    require_epsilon(epsilon);

    const double target = (1.0 - epsilon) * static_cast<double>(hist.n);
    ThresholdResult r;
    r.epsilon = epsilon;
    std::int64_t cumulative = 0;
    for (int k = 1; k <= hist.l_max; ++k) {
        cumulative += hist.counts[k];
        if (static_cast<double>(cumulative) >= target) {
            r.threshold = k;
            return r;
        }
    }
    r.threshold = hist.l_max;           // unreachable for valid histograms
    return r;
}

ThresholdResult threshold_otsu(const LengthHistogram& hist) {
    if (hist.empty())
        throw std::invalid_argument("Otsu needs a nonempty length histogram");

    std::int64_t total_count = hist.n;
    std::int64_t total_sum = 0;
    int distinct = 0;
    for (int k = 1; k <= hist.l_max; ++k) {
        if (hist.counts[k] > 0) ++distinct;
        total_sum += hist.counts[k] * k;
    }
    if (distinct < 2)
        return degenerate_result("all curve lengths identical; no two-class separation");

    ThresholdResult r;
    r.between_class_variance.assign(static_cast<std::size_t>(hist.l_max), 0.0);

    double best = -1.0;
    int best_t = 1;
    std::int64_t count1 = 0, sum1 = 0;
    for (int t = 1; t <= hist.l_max - 1; ++t) {
        count1 += hist.counts[t];
        sum1 += hist.counts[t] * t;
        const std::int64_t count2 = total_count - count1;
        double variance = 0.0;
        if (count1 > 0 && count2 > 0) {
            const double w1 = static_cast<double>(count1) / static_cast<double>(total_count);
            const double w2 = static_cast<double>(count2) / static_cast<double>(total_count);
            const double mu1 = static_cast<double>(sum1) / static_cast<double>(count1);
            const double mu2 = static_cast<double>(total_sum - sum1) / static_cast<double>(count2);
            variance = w1 * w2 * (mu1 - mu2) * (mu1 - mu2);
        }
        r.between_class_variance[t] = variance;
        if (variance > best) {
            best = variance;
            best_t = t;
        }
    }
    r.threshold = best_t;
    return r;
}

ThresholdResult cluster_kmeans(const std::vector<double>& lengths, KMeansNorm norm,
                               KMeansInit init, int restarts, std::uint64_t seed) {
    if (lengths.size() < 2)
        throw std::invalid_argument("k-means needs at least 2 lengths");
    if (restarts < 1)
        throw std::invalid_argument("k-means needs at least 1 restart");

    std::vector<double> xs(lengths);
    std::sort(xs.begin(), xs.end());
    if (xs.front() == xs.back())
        return degenerate_result("all curve lengths identical; no two-class separation");

    const std::size_t n = xs.size();

    // In 1D the optimal two-class partition is a split of the sorted values,
    // so scanning every split yields the global optimum of the clustering
    // objective. The Lloyd runs below can tie this baseline but never beat
    // it; seeding `best` with the scan winner makes the returned solution
    // exact and, on objective ties, independent of the seed.
    LloydOutcome best = split_outcome(xs, 1, norm);
    for (std::size_t s = 2; s < n; ++s) {
        const LloydOutcome cand = split_outcome(xs, s, norm);
        if (cand.objective < best.objective) best = cand;
    }

    if (init == KMeansInit::Uniform) {
        const double range = xs.back() - xs.front();
        const double c1 = xs.front() + 0.25 * range;
        const double c2 = xs.front() + 0.75 * range;
        const LloydOutcome out = run_lloyd(xs, c1, c2, norm);
        if (out.objective < best.objective) best = out;
    } else {
        for (int r = 0; r < restarts; ++r) {
            std::mt19937_64 rng(seed + static_cast<std::uint64_t>(r));
            const double c1 = xs[rng() % n];
            double c2 = c1;
            while (c2 == c1) c2 = xs[rng() % n];
            const LloydOutcome out = run_lloyd(xs, c1, c2, norm);
            if (out.objective < best.objective) best = out;
        }
    }

    ThresholdResult r;
    r.threshold = 0.5 * (xs[best.split - 1] + xs[best.split]);
    r.centroid_low = best.c_low;
    r.centroid_high = best.c_high;
    r.weight_low = static_cast<double>(best.split) / static_cast<double>(n);
    r.weight_high = static_cast<double>(n - best.split) / static_cast<double>(n);
    r.objective = best.objective;
    return r;
}

std::vector<std::size_t> select_meaningful(const std::vector<MinimaCurve>& curves,
                                           const ThresholdResult& result) {
    std::vector<std::size_t> meaningful;
    for (std::size_t i = 0; i < curves.size(); ++i)
        if (static_cast<double>(curves[i].length()) > result.threshold)
            meaningful.push_back(i);
    return meaningful;
}

} // namespace scalemodes
