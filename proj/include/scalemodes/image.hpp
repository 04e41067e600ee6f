#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "scalemodes/histogram.hpp"
#include "scalemodes/mode_detection.hpp"

namespace scalemodes {

struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;   // row-major, width*height

    std::size_t size() const { return pixels.size(); }
};

struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;   // row-major, 3 bytes per pixel

    std::size_t pixel_count() const { return pixels.size() / 3; }
};

struct HsvPixel {
    double h = 0.0;                     // degrees in [0, 360)
    double s = 0.0;                     // [0, 1]
    double v = 0.0;                     // [0, 1]
};

// Standard hexagonal RGB -> HSV. Gray pixels (s = 0) report h = 0.
HsvPixel rgb_to_hsv(std::uint8_t r, std::uint8_t g, std::uint8_t b);

// Inverse conversion, mainly for round-trip checks.
std::array<std::uint8_t, 3> hsv_to_rgb(const HsvPixel& p);

// 256-bin gray-level histogram of an image.
Histogram gray_histogram(const GrayImage& img);

struct GraySegmentation {
    ModeSet modes;
    std::vector<int> labels;            // per-pixel class index
    std::vector<double> class_means;    // mean gray level per class
    GrayImage rendered;                 // every pixel replaced by its class mean
};

// Segment a grayscale image by detecting modes of its histogram. A pixel of
// value v belongs to class j iff b_j <= v < b_{j+1} with b_0 = 0 and
// b_{m+1} = 256.
GraySegmentation segment_gray(const GrayImage& img, const DetectionConfig& cfg);

enum class ColorHierarchy { ValueOnly, ValueSaturationHue };

struct Palette {
    std::vector<std::array<std::uint8_t, 3>> colors;
    std::vector<int> labels;            // per-pixel palette index
};

struct ColorReduction {
    RgbImage image;                     // input repainted with palette colors
    Palette palette;
    std::vector<double> objective_history; // RGB k-means objective per iteration
};

// Reduce an image's colors: segment the V histogram (optionally refining each
// class by S then H), seed an RGB k-means with the class mean colors, and
// repaint with the converged palette.
ColorReduction reduce_colors(const RgbImage& img, const DetectionConfig& cfg,
                             ColorHierarchy hierarchy);

} // namespace scalemodes
