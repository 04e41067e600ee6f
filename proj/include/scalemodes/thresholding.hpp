#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scalemodes/curve_tracking.hpp"

namespace scalemodes {

enum class ThresholdRule { UniformLaw, HalfNormalLaw, EmpiricalLaw, Otsu, KMeans };

enum class KMeansNorm { L1, L2 };
enum class KMeansInit { Random, Uniform };

struct ThresholdMethod {
    ThresholdRule rule = ThresholdRule::Otsu;
    KMeansNorm norm = KMeansNorm::L2;
    KMeansInit init = KMeansInit::Random;
    int restarts = 10;
};

// Decision threshold on curve lengths. A curve is meaningful iff L_i > threshold.
struct ThresholdResult {
    double threshold = 0.0;
    bool degenerate = false;            // no statistical separation; all curves meaningful
    std::string note;                   // diagnostic for degenerate / special cases

    std::optional<double> epsilon;      // probabilistic laws only
    std::optional<double> sigma;        // half-normal scale estimate
    std::vector<double> between_class_variance; // Otsu: sigma_B^2 indexed by candidate T
    std::optional<double> centroid_low, centroid_high;  // k-means final centroids
    std::optional<double> weight_low, weight_high;      // k-means class weight fractions
    std::optional<double> objective;    // k-means best objective
};

// Inverse error function on (-1,1): rational initial guess refined by Newton
// iterations on std::erf. |erf(erf_inv(y)) - y| <= 1e-9.
double erf_inv(double y);

// Uniform background law: T = (1-eps)*L_max + 1, clamped to L_max.
ThresholdResult threshold_uniform(double l_max, double epsilon);

// Half-normal background law fitted to the lengths: sigma = sqrt(pi/2)*mean,
// T = sigma*sqrt(2)*erf_inv(erf(L_max/(sigma*sqrt(2))) - eps). An eps too
// large for the erf domain degenerates to T = 0 (all meaningful).
ThresholdResult threshold_halfnormal(const std::vector<double>& lengths, double l_max,
                                     double epsilon);

// Empirical law: smallest integer T whose cumulative length-histogram mass
// reaches (1-eps)*n.
ThresholdResult threshold_empirical(const LengthHistogram& hist, double epsilon);

// Otsu: exhaustive sweep of integer T in [1, L_max-1] maximizing the
// between-class variance W1*W2*(mu1-mu2)^2; ties broken toward smaller T.
ThresholdResult threshold_otsu(const LengthHistogram& hist);

// Two-class 1D k-means on the raw length multiset (Lloyd runs to assignment
// fixpoint, <=100 iterations; `restarts` seeded restarts for random init,
// uniform init runs once). Because the optimal 1D two-class partition is a
// sorted split, an exhaustive split scan joins the candidates, so the
// returned objective is the global optimum. T = midpoint between the
// clusters' facing extremes.
ThresholdResult cluster_kmeans(const std::vector<double>& lengths, KMeansNorm norm,
                               KMeansInit init, int restarts, std::uint64_t seed);

// Indices of meaningful curves (L_i > threshold), preserving curve order.
std::vector<std::size_t> select_meaningful(const std::vector<MinimaCurve>& curves,
                                           const ThresholdResult& result);

} // namespace scalemodes
