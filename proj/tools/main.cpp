#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "scalemodes/histogram_csv.hpp"
#include "scalemodes/image.hpp"
#include "scalemodes/mode_detection.hpp"
#include "scalemodes/netpbm.hpp"
#include "scalemodes/report.hpp"
#include "scalemodes/svg_plot.hpp"

namespace {

using namespace scalemodes;

struct CommonOpts {
    std::string input;
    std::string method = "otsu";
    std::string epsilon = "auto";
    std::string init = "random";
    std::uint64_t seed = 0;
    int restarts = 10;
};

const std::vector<std::string> method_names = {"otsu",       "kmeans-l2", "kmeans-l1",
                                               "halfnormal", "empirical", "uniform"};

DetectionConfig make_config(const CommonOpts& o) {
    DetectionConfig cfg;
    if (o.method == "uniform") cfg.method.rule = ThresholdRule::UniformLaw;
    else if (o.method == "halfnormal") cfg.method.rule = ThresholdRule::HalfNormalLaw;
    else if (o.method == "empirical") cfg.method.rule = ThresholdRule::EmpiricalLaw;
    else if (o.method == "otsu") cfg.method.rule = ThresholdRule::Otsu;
    else if (o.method == "kmeans-l2") cfg.method.rule = ThresholdRule::KMeans;
    else if (o.method == "kmeans-l1") {
        cfg.method.rule = ThresholdRule::KMeans;
        cfg.method.norm = KMeansNorm::L1;
    } else {
        throw CLI::ValidationError("--method", "unknown method '" + o.method + "'");
    }
    if (o.epsilon != "auto") {
        double eps = 0.0;
        std::size_t pos = 0;
        try {
            eps = std::stod(o.epsilon, &pos);
        } catch (const std::exception&) {
            pos = std::string::npos;
        }
        if (pos != o.epsilon.size() || !(eps > 0.0) || eps > 1.0)
            throw CLI::ValidationError("--epsilon",
                                       "expected 'auto' or a value in (0, 1], got '" +
                                           o.epsilon + "'");
        cfg.epsilon = eps;
    }
    if (o.init == "uniform") cfg.method.init = KMeansInit::Uniform;
    else if (o.init != "random")
        throw CLI::ValidationError("--init", "expected 'random' or 'uniform', got '" + o.init +
                                                 "'");
    if (o.restarts < 1) throw CLI::ValidationError("--restarts", "must be >= 1");
    cfg.method.restarts = o.restarts;
    cfg.seed = o.seed;
    return cfg;
}

void add_common(CLI::App* cmd, CommonOpts* o, bool full) {
    cmd->add_option("--input", o->input, "input file")->required();
    cmd->add_option("--method", o->method,
                    "threshold rule: otsu|kmeans-l2|kmeans-l1|halfnormal|empirical|uniform")
        ->check(CLI::IsMember(method_names));
    if (full) {
        cmd->add_option("--epsilon", o->epsilon, "meaningfulness level: auto or a value in (0,1]");
        cmd->add_option("--init", o->init, "k-means init: random|uniform")
            ->check(CLI::IsMember({"random", "uniform"}));
        cmd->add_option("--seed", o->seed, "RNG seed for k-means restarts");
        cmd->add_option("--restarts", o->restarts, "k-means restarts");
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw std::runtime_error("write failed: '" + path + "'");
}

int run_detect(const CommonOpts& o, const std::string& output, const std::string& plot) {
    const DetectionConfig cfg = make_config(o);
    const Histogram h = read_histogram_csv(o.input);

    const auto t0 = std::chrono::steady_clock::now();
    const ModeSet ms = detect_modes(h, cfg);
    const auto t1 = std::chrono::steady_clock::now();
    const double runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    const RunReport report =
        make_run_report(o.input, h, ms, o.method, ms.threshold.epsilon, runtime_ms);
    write_report_file(output, report);
    if (!plot.empty()) write_text_file(plot, render_svg_plot(h, ms));

    std::cout << ms.boundaries.size() << " boundaries, threshold T=" << ms.threshold.threshold
              << " (" << o.method << "); report written to " << output << "\n";
    return 0;
}

int run_segment_gray(const CommonOpts& o, const std::string& output, const std::string& labels) {
    const DetectionConfig cfg = make_config(o);
    const GrayImage img = read_pgm(o.input);
    const GraySegmentation seg = segment_gray(img, cfg);

    write_pgm(seg.rendered, output);
    if (!labels.empty()) {
        std::string csv;
        for (int y = 0; y < img.height; ++y) {
            for (int x = 0; x < img.width; ++x) {
                if (x) csv += ',';
                csv += std::to_string(seg.labels[static_cast<std::size_t>(y) * img.width + x]);
            }
            csv += '\n';
        }
        write_text_file(labels, csv);
    }

    std::cout << seg.class_means.size() << " classes (" << seg.modes.boundaries.size()
              << " boundaries); segmented image written to " << output << "\n";
    return 0;
}

int run_reduce_colors(const CommonOpts& o, const std::string& hierarchy, const std::string& output,
                      const std::string& palette) {
    const DetectionConfig cfg = make_config(o);
    const ColorHierarchy h = hierarchy == "vsh" ? ColorHierarchy::ValueSaturationHue
                                                : ColorHierarchy::ValueOnly;
    const RgbImage img = read_ppm(o.input);
    const ColorReduction red = reduce_colors(img, cfg, h);

    write_ppm(red.image, output);
    if (!palette.empty()) {
        std::string csv = "index,r,g,b\n";
        for (std::size_t i = 0; i < red.palette.colors.size(); ++i) {
            const auto& c = red.palette.colors[i];
            csv += std::to_string(i) + ',' + std::to_string(c[0]) + ',' + std::to_string(c[1]) +
                   ',' + std::to_string(c[2]) + '\n';
        }
        write_text_file(palette, csv);
    }

    std::cout << red.palette.colors.size() << " palette colors; reduced image written to "
              << output << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"histogram mode detection via scale-space minima persistence"};
    app.require_subcommand(1);

    CommonOpts detect_opts;
    std::string detect_output, detect_plot;
    CLI::App* detect = app.add_subcommand("detect", "detect modes in a histogram CSV");
    add_common(detect, &detect_opts, true);
    detect->add_option("--output", detect_output, "JSON report path")->required();
    detect->add_option("--plot", detect_plot, "optional SVG plot path");

    CommonOpts seg_opts;
    std::string seg_output, seg_labels;
    CLI::App* seg = app.add_subcommand("segment-gray", "segment a PGM image by gray-level modes");
    add_common(seg, &seg_opts, true);
    seg->add_option("--output", seg_output, "segmented PGM path")->required();
    seg->add_option("--labels", seg_labels, "optional per-pixel label CSV path");

    CommonOpts red_opts;
    std::string red_hierarchy = "v", red_output, red_palette;
    CLI::App* red = app.add_subcommand("reduce-colors", "reduce a PPM image's colors");
    add_common(red, &red_opts, true);
    red->add_option("--hierarchy", red_hierarchy, "channel cascade: v (V only) or vsh (V,S,H)")
        ->check(CLI::IsMember({"v", "vsh"}));
    red->add_option("--output", red_output, "reduced PPM path")->required();
    red->add_option("--palette", red_palette, "optional palette CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {      // --help and friends
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (detect->parsed()) return run_detect(detect_opts, detect_output, detect_plot);
        if (seg->parsed()) return run_segment_gray(seg_opts, seg_output, seg_labels);
        if (red->parsed()) return run_reduce_colors(red_opts, red_hierarchy, red_output,
                                                    red_palette);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
