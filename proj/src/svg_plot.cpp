#include "scalemodes/svg_plot.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

namespace scalemodes {

namespace {

constexpr double canvas_w = 900.0;
constexpr double canvas_h = 560.0;
constexpr double margin_left = 70.0;
constexpr double margin_right = 20.0;
constexpr double margin_top = 40.0;
constexpr double margin_bottom = 50.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

} // namespace

std::string render_svg_plot(const Histogram& h, const ModeSet& modes) {
    const int n = h.n_bins();
    const double plot_w = canvas_w - margin_left - margin_right;
    const double plot_h = canvas_h - margin_top - margin_bottom;
    const double y_max = std::max(1e-12, *std::max_element(h.counts.begin(), h.counts.end()));

    // Bin i occupies [x(i), x(i+1)); boundaries land on bin left edges.
    auto x_of = [&](double bin) { return margin_left + plot_w * bin / n; };
    auto y_of = [&](double count) { return margin_top + plot_h * (1.0 - count / y_max); };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(canvas_w) +
           "\" height=\"" + num(canvas_h) + "\" viewBox=\"0 0 " + num(canvas_w) + " " +
           num(canvas_h) + "\">\n";
    svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    svg += "  <g fill=\"#b7c8e0\" stroke=\"none\">\n";
    for (int i = 0; i < n; ++i) {
        const double x0 = x_of(i);
        const double y0 = y_of(h.counts[i]);
        svg += "    <rect x=\"" + num(x0) + "\" y=\"" + num(y0) + "\" width=\"" +
               num(plot_w / n) + "\" height=\"" + num(margin_top + plot_h - y0) + "\"/>\n";
    }
    svg += "  </g>\n";

    svg += "  <polyline fill=\"none\" stroke=\"#2b5f9e\" stroke-width=\"1.5\" points=\"";
    for (int i = 0; i < n; ++i) {
        if (i) svg += " ";
        svg += num(x_of(i + 0.5)) + "," + num(y_of(h.counts[i]));
    }
    svg += "\"/>\n";

    for (int b : modes.boundaries) {
        const double x = x_of(b);
        svg += "  <line class=\"boundary\" x1=\"" + num(x) + "\" y1=\"" + num(margin_top) +
               "\" x2=\"" + num(x) + "\" y2=\"" + num(margin_top + plot_h) +
               "\" stroke=\"#c23b22\" stroke-width=\"1.5\" stroke-dasharray=\"6,3\"/>\n";
        svg += "  <text x=\"" + num(x + 3.0) + "\" y=\"" + num(margin_top + 14.0) +
               "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#c23b22\">" +
               std::to_string(b) + "</text>\n";
    }

    // Axes with min / max tick labels.
    svg += "  <g stroke=\"#333333\" stroke-width=\"1\">\n";
    svg += "    <line x1=\"" + num(margin_left) + "\" y1=\"" + num(margin_top + plot_h) +
           "\" x2=\"" + num(margin_left + plot_w) + "\" y2=\"" + num(margin_top + plot_h) +
           "\"/>\n";
    svg += "    <line x1=\"" + num(margin_left) + "\" y1=\"" + num(margin_top) + "\" x2=\"" +
           num(margin_left) + "\" y2=\"" + num(margin_top + plot_h) + "\"/>\n";
    svg += "  </g>\n";
    svg += "  <g font-family=\"sans-serif\" font-size=\"12\" fill=\"#333333\">\n";
    svg += "    <text x=\"" + num(margin_left) + "\" y=\"" + num(canvas_h - margin_bottom + 16.0) +
           "\">0</text>\n";
    svg += "    <text x=\"" + num(margin_left + plot_w - 24.0) + "\" y=\"" +
           num(canvas_h - margin_bottom + 16.0) + "\">" + std::to_string(n - 1) + "</text>\n";
    svg += "    <text x=\"" + num(margin_left - 6.0) + "\" y=\"" + num(margin_top + plot_h) +
           "\" text-anchor=\"end\">0</text>\n";
    svg += "    <text x=\"" + num(margin_left - 6.0) + "\" y=\"" + num(margin_top + 10.0) +
           "\" text-anchor=\"end\">" + num(y_max) + "</text>\n";
    svg += "    <text x=\"" + num(margin_left + plot_w / 2.0 - 8.0) + "\" y=\"" +
           num(canvas_h - 12.0) + "\">bin</text>\n";
    svg += "    <text x=\"" + num(14.0) + "\" y=\"" + num(margin_top + plot_h / 2.0) +
           "\" transform=\"rotate(-90 14 " + num(margin_top + plot_h / 2.0) +
           ")\">count</text>\n";
    svg += "  </g>\n";
    svg += "</svg>\n";
    return svg;
}

} // namespace scalemodes
