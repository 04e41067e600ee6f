#include "scalemodes/image.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace scalemodes {

namespace {

constexpr std::size_t min_pixels_for_subdivision = 64;

void require_valid(int width, int height, std::size_t actual, std::size_t expected,
                   const char* kind) {
    if (width <= 0 || height <= 0)
        throw std::invalid_argument(std::string(kind) + " image dimensions must be positive");
    if (actual != expected)
        throw std::invalid_argument(std::string(kind) + " pixel buffer size mismatch");
}

// Class index of a bin value: j iff b_j <= v < b_{j+1} with b_0 = 0.
int class_of(const std::vector<int>& boundaries, int v) {
    return static_cast<int>(std::upper_bound(boundaries.begin(), boundaries.end(), v) -
                            boundaries.begin());
}

// Partition pixel indices into classes by segmenting the 256-bin histogram of
// their `bins` values. Empty classes are dropped.
std::vector<std::vector<int>> segment_by_bins(const std::vector<int>& members,
                                              const std::vector<int>& bins,
                                              const DetectionConfig& cfg) {
    std::vector<double> counts(256, 0.0);
    for (int i : members) counts[bins[i]] += 1.0;

    const ModeSet ms = detect_modes(Histogram(counts), cfg);
    std::vector<std::vector<int>> classes(ms.boundaries.size() + 1);
    for (int i : members) classes[class_of(ms.boundaries, bins[i])].push_back(i);
    classes.erase(std::remove_if(classes.begin(), classes.end(),
                                 [](const std::vector<int>& c) { return c.empty(); }),
                  classes.end());
    return classes;
}

std::vector<std::vector<int>> refine_classes(const std::vector<std::vector<int>>& classes,
                                             const std::vector<int>& bins,
                                             const DetectionConfig& cfg) {
    std::vector<std::vector<int>> refined;
    for (const std::vector<int>& cls : classes) {
        if (cls.size() < min_pixels_for_subdivision) {
            refined.push_back(cls);
            continue;
        }
        for (std::vector<int>& sub : segment_by_bins(cls, bins, cfg))
            refined.push_back(std::move(sub));
    }
    return refined;
}

} // namespace

HsvPixel rgb_to_hsv(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    const int mx = std::max({r, g, b});
    const int mn = std::min({r, g, b});
    const int delta = mx - mn;

    HsvPixel p;
    p.v = mx / 255.0;
    p.s = mx == 0 ? 0.0 : static_cast<double>(delta) / mx;
    if (delta == 0) return p;           // gray: hue 0 by convention

    double h;
    if (mx == r)
        h = std::fmod((g - b) / static_cast<double>(delta), 6.0);
    else if (mx == g)
        h = (b - r) / static_cast<double>(delta) + 2.0;
    else
        h = (r - g) / static_cast<double>(delta) + 4.0;
    h *= 60.0;
    if (h < 0.0) h += 360.0;
    p.h = h;
    return p;
}

std::array<std::uint8_t, 3> hsv_to_rgb(const HsvPixel& p) {
    const double c = p.v * p.s;
    const double hp = p.h / 60.0;
    const double x = c * (1.0 - std::fabs(std::fmod(hp, 2.0) - 1.0));
    double r = 0.0, g = 0.0, b = 0.0;
    if (hp < 1.0)      { r = c; g = x; }
    else if (hp < 2.0) { r = x; g = c; }
    else if (hp < 3.0) { g = c; b = x; }
    else if (hp < 4.0) { g = x; b = c; }
    else if (hp < 5.0) { r = x; b = c; }
    else               { r = c; b = x; }
    const double m = p.v - c;
    auto to8 = [](double u) {
        return static_cast<std::uint8_t>(std::lround(std::clamp(u, 0.0, 1.0) * 255.0));
    };
    return {to8(r + m), to8(g + m), to8(b + m)};
}

Histogram gray_histogram(const GrayImage& img) {
    require_valid(img.width, img.height, img.pixels.size(),
                  static_cast<std::size_t>(img.width) * img.height, "gray");
    std::vector<double> counts(256, 0.0);
    for (std::uint8_t v : img.pixels) counts[v] += 1.0;
    return Histogram(std::move(counts));
}

GraySegmentation segment_gray(const GrayImage& img, const DetectionConfig& cfg) {
    GraySegmentation seg;
    seg.modes = detect_modes(gray_histogram(img), cfg);

    const std::vector<int>& bounds = seg.modes.boundaries;
    const int n_classes = static_cast<int>(bounds.size()) + 1;

    seg.labels.resize(img.pixels.size());
    std::vector<double> sums(n_classes, 0.0);
    std::vector<std::int64_t> counts(n_classes, 0);
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
        const int j = class_of(bounds, img.pixels[i]);
        seg.labels[i] = j;
        sums[j] += img.pixels[i];
        ++counts[j];
    }

    seg.class_means.resize(n_classes);
    for (int j = 0; j < n_classes; ++j) {
        if (counts[j] > 0) {
            seg.class_means[j] = sums[j] / static_cast<double>(counts[j]);
        } else {
            // Empty class: fall back to the midpoint of its gray range.
            const int lo = j == 0 ? 0 : bounds[j - 1];
            const int hi = j == n_classes - 1 ? 256 : bounds[j];
            seg.class_means[j] = 0.5 * (lo + hi - 1);
        }
    }

    seg.rendered.width = img.width;
    seg.rendered.height = img.height;
    seg.rendered.pixels.resize(img.pixels.size());
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
        const long v = std::lround(seg.class_means[seg.labels[i]]);
        seg.rendered.pixels[i] = static_cast<std::uint8_t>(std::clamp(v, 0L, 255L));
    }
    return seg;
}

ColorReduction reduce_colors(const RgbImage& img, const DetectionConfig& cfg,
                             ColorHierarchy hierarchy) {
    require_valid(img.width, img.height, img.pixels.size(),
                  3 * static_cast<std::size_t>(img.width) * img.height, "rgb");

    const int npix = img.width * img.height;
    std::vector<int> vbin(npix), sbin(npix), hbin(npix);
    for (int i = 0; i < npix; ++i) {
        const std::uint8_t r = img.pixels[3 * i], g = img.pixels[3 * i + 1],
                           b = img.pixels[3 * i + 2];
        const int mx = std::max({r, g, b});
        const int mn = std::min({r, g, b});
        vbin[i] = mx;                   // V*255 is exactly the max channel
        sbin[i] = mx == 0 ? 0
                          : static_cast<int>(std::lround(255.0 * (mx - mn) / mx));
        const double hue = rgb_to_hsv(r, g, b).h;
        hbin[i] = std::min(255, static_cast<int>(hue * 256.0 / 360.0));
    }

    std::vector<int> all(npix);
    for (int i = 0; i < npix; ++i) all[i] = i;
    std::vector<std::vector<int>> classes = segment_by_bins(all, vbin, cfg);
    if (hierarchy == ColorHierarchy::ValueSaturationHue) {
        classes = refine_classes(classes, sbin, cfg);
        classes = refine_classes(classes, hbin, cfg);
    }

    // Seed the RGB k-means with the class mean colors.
    std::vector<std::array<double, 3>> centroids;
    centroids.reserve(classes.size());
    for (const std::vector<int>& cls : classes) {
        std::array<double, 3> c{0.0, 0.0, 0.0};
        for (int i : cls)
            for (int ch = 0; ch < 3; ++ch) c[ch] += img.pixels[3 * i + ch];
        for (int ch = 0; ch < 3; ++ch) c[ch] /= static_cast<double>(cls.size());
        centroids.push_back(c);
    }

    ColorReduction out;
    std::vector<int> labels(npix, 0);
    auto assign_and_cost = [&](double* cost_out) {
        double cost = 0.0;
        for (int i = 0; i < npix; ++i) {
            double best = -1.0;
            int best_c = 0;
            for (std::size_t c = 0; c < centroids.size(); ++c) {
                double d = 0.0;
                for (int ch = 0; ch < 3; ++ch) {
                    const double diff = img.pixels[3 * i + ch] - centroids[c][ch];
                    d += diff * diff;
                }
                if (best < 0.0 || d < best) {
                    best = d;
                    best_c = static_cast<int>(c);
                }
            }
            labels[i] = best_c;
            cost += best;
        }
        *cost_out = cost;
    };

    for (int iter = 0; iter < 50; ++iter) {
        double cost = 0.0;
        assign_and_cost(&cost);
        out.objective_history.push_back(cost);

        std::vector<std::array<double, 3>> sums(centroids.size(), {0.0, 0.0, 0.0});
        std::vector<std::int64_t> counts(centroids.size(), 0);
        for (int i = 0; i < npix; ++i) {
            for (int ch = 0; ch < 3; ++ch) sums[labels[i]][ch] += img.pixels[3 * i + ch];
            ++counts[labels[i]];
        }

        bool dropped = false;
        std::vector<std::array<double, 3>> next;
        double max_shift = 0.0;
        for (std::size_t c = 0; c < centroids.size(); ++c) {
            if (counts[c] == 0) {       // cluster lost all pixels: drop it
                dropped = true;
                continue;
            }
            std::array<double, 3> nc;
            double shift = 0.0;
            for (int ch = 0; ch < 3; ++ch) {
                nc[ch] = sums[c][ch] / static_cast<double>(counts[c]);
                const double d = nc[ch] - centroids[c][ch];
                shift += d * d;
            }
            max_shift = std::max(max_shift, std::sqrt(shift));
            next.push_back(nc);
        }
        centroids = std::move(next);
        if (!dropped && max_shift < 0.5) break;
    }

    // Final consistent assignment against the converged centroids.
    double final_cost = 0.0;
    assign_and_cost(&final_cost);
    out.objective_history.push_back(final_cost);

    out.palette.colors.reserve(centroids.size());
    for (const std::array<double, 3>& c : centroids) {
        std::array<std::uint8_t, 3> col;
        for (int ch = 0; ch < 3; ++ch)
            col[ch] = static_cast<std::uint8_t>(std::lround(std::clamp(c[ch], 0.0, 255.0)));
        out.palette.colors.push_back(col);
    }
    out.palette.labels = labels;

    out.image.width = img.width;
    out.image.height = img.height;
    out.image.pixels.resize(img.pixels.size());
    for (int i = 0; i < npix; ++i) {
        const std::array<std::uint8_t, 3>& col = out.palette.colors[labels[i]];
        for (int ch = 0; ch < 3; ++ch) out.image.pixels[3 * i + ch] = col[ch];
    }
    return out;
}

} // namespace scalemodes
