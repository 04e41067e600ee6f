#include <string>

#include "doctest.h"

#include "scalemodes/mode_detection.hpp"
#include "scalemodes/report.hpp"
#include "scalemodes/svg_plot.hpp"
#include "test_support.hpp"

using namespace scalemodes;
using test_support::TempDir;
using test_support::three_bump_histogram;

namespace {

RunReport sample_report() {
    const Histogram h = three_bump_histogram(1);
    DetectionConfig cfg;
    const ModeSet ms = detect_modes(h, cfg);
    return make_run_report("bumps.csv", h, ms, "otsu", std::nullopt, 12.5);
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t at = text.find(needle); at != std::string::npos;
         at = text.find(needle, at + needle.size()))
        ++n;
    return n;
}

} // namespace

TEST_CASE("report keys appear in a fixed order") {
    const std::string json = write_report_json(sample_report());
    const char* keys[] = {"\"input\"",  "\"n_bins\"",      "\"method\"",
                          "\"epsilon\"", "\"threshold_T\"", "\"curves\"",
                          "\"boundaries\"", "\"modes\"",    "\"runtime_ms\""};
    std::size_t prev = 0;
    for (const char* key : keys) {
        const std::size_t at = json.find(key);
        REQUIRE(at != std::string::npos);
        CHECK(at > prev);
        prev = at;
    }
}

TEST_CASE("reports round trip through json") {
    const RunReport r = sample_report();
    const RunReport back = read_report_json(write_report_json(r));
    CHECK(back.input == r.input);
    CHECK(back.n_bins == r.n_bins);
    CHECK(back.method == r.method);
    CHECK(back.epsilon == r.epsilon);
    CHECK(back.threshold_t == r.threshold_t);
    CHECK(back.boundaries == r.boundaries);
    CHECK(back.modes == r.modes);
    CHECK(back.runtime_ms == r.runtime_ms);
    REQUIRE(back.curves.size() == r.curves.size());
    for (std::size_t i = 0; i < r.curves.size(); ++i) {
        CHECK(back.curves[i].position == r.curves[i].position);
        CHECK(back.curves[i].birth_step == r.curves[i].birth_step);
        CHECK(back.curves[i].length == r.curves[i].length);
        CHECK(back.curves[i].meaningful == r.curves[i].meaningful);
    }

    // Repeated serialization of the same report is byte-identical.
    CHECK(write_report_json(r) == write_report_json(sample_report()));
}

TEST_CASE("floats are printed with at most nine significant digits") {
    RunReport r = sample_report();
    r.threshold_t = 102.123456789123;
    r.runtime_ms = 0.123456789123456;
    const std::string json = write_report_json(r);
    CHECK(json.find("102.123457") != std::string::npos);
    CHECK(json.find("0.123456789") != std::string::npos);
    CHECK(json.find("123456789123") == std::string::npos);
}

TEST_CASE("epsilon serializes as null when absent and a number when present") {
    RunReport r = sample_report();
    CHECK(write_report_json(r).find("\"epsilon\": null") != std::string::npos);

    r.epsilon = 0.0625;
    const std::string json = write_report_json(r);
    CHECK(json.find("\"epsilon\": 0.0625") != std::string::npos);
    CHECK(*read_report_json(json).epsilon == 0.0625);
}

TEST_CASE("an empty boundary set serializes as an empty array") {
    RunReport r = sample_report();
    r.boundaries.clear();
    r.modes = {{0, 255}};
    r.curves.clear();
    const std::string json = write_report_json(r);
    CHECK(json.find("\"boundaries\": []") != std::string::npos);
    CHECK(read_report_json(json).boundaries.empty());
}

TEST_CASE("malformed report json is rejected") {
    CHECK_THROWS_AS(read_report_json("not json at all"), std::runtime_error);
    CHECK_THROWS_AS(read_report_json("{}"), std::runtime_error);
    CHECK_THROWS_AS(read_report_json("{\"input\": 3}"), std::runtime_error);

    RunReport r = sample_report();
    std::string json = write_report_json(r);
    const std::size_t at = json.find("\"n_bins\"");
    json.replace(at, 8, "\"nbins__\"");
    CHECK_THROWS_AS(read_report_json(json), std::runtime_error);
}

TEST_CASE("report files round trip on disk") {
    const TempDir tmp;
    const RunReport r = sample_report();
    write_report_file(tmp.file("r.json"), r);
    const RunReport back = read_report_file(tmp.file("r.json"));
    CHECK(back.boundaries == r.boundaries);
    CHECK_THROWS_AS(read_report_file(tmp.file("missing.json")), std::runtime_error);
}

TEST_CASE("svg plots draw one marker line per boundary") {
    const Histogram h = three_bump_histogram(1);
    DetectionConfig cfg;
    const ModeSet ms = detect_modes(h, cfg);
    REQUIRE(ms.boundaries.size() == 2);

    const std::string svg = render_svg_plot(h, ms);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(count_occurrences(svg, "class=\"boundary\"") == 2);

    // identical input, identical bytes
    CHECK(render_svg_plot(h, ms) == svg);
}

TEST_CASE("svg plots for a modeless histogram have no boundary markers") {
    const Histogram h(std::vector<double>(16, 2.0));
    DetectionConfig cfg;
    const ModeSet ms = detect_modes(h, cfg);
    const std::string svg = render_svg_plot(h, ms);
    CHECK(count_occurrences(svg, "class=\"boundary\"") == 0);
    CHECK(svg.find("<polyline") != std::string::npos);
}
