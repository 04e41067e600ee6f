#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"

#include "scalemodes/mode_detection.hpp"
#include "test_support.hpp"

using namespace scalemodes;
using test_support::random_histogram;
using test_support::three_bump_histogram;
using test_support::three_bump_valley_hi;
using test_support::three_bump_valley_lo;

namespace {

const std::uint64_t pinned_seed = 1; // three_bump_histogram realization used below

DetectionConfig config_for(ThresholdRule rule) {
    DetectionConfig cfg;
    cfg.method.rule = rule;
    return cfg;
}

void check_mode_set_invariants(const ModeSet& ms, int n_bins) {
    REQUIRE(ms.modes.size() == ms.boundaries.size() + 1);
    REQUIRE(ms.meaningful.size() == ms.curves.size());
    CHECK(ms.modes.front()[0] == 0);
    CHECK(ms.modes.back()[1] == n_bins - 1);
    for (std::size_t j = 0; j < ms.boundaries.size(); ++j) {
        CHECK(ms.boundaries[j] > 0);
        CHECK(ms.boundaries[j] < n_bins - 1);
        if (j) CHECK(ms.boundaries[j] > ms.boundaries[j - 1]);
        CHECK(ms.modes[j][1] == ms.boundaries[j]);     // shared endpoints
        CHECK(ms.modes[j + 1][0] == ms.boundaries[j]);
    }
}

} // namespace

TEST_CASE("a constant histogram yields no boundaries under any method") {
    const Histogram h(std::vector<double>(64, 3.0));
    for (const ThresholdRule rule : {ThresholdRule::Otsu, ThresholdRule::KMeans,
                                     ThresholdRule::HalfNormalLaw, ThresholdRule::EmpiricalLaw,
                                     ThresholdRule::UniformLaw}) {
        const ModeSet ms = detect_modes(h, config_for(rule));
        CHECK(ms.boundaries.empty());
        REQUIRE(ms.modes.size() == 1);
        CHECK(ms.modes[0] == std::array<int, 2>{0, 63});
        CHECK(ms.curves.empty());
        CHECK(ms.threshold.degenerate);
        CHECK(!ms.threshold.note.empty());
    }
}

TEST_CASE("the three-bump mixture recovers both valleys") {
    const Histogram h = three_bump_histogram(pinned_seed);
    for (const ThresholdRule rule :
         {ThresholdRule::Otsu, ThresholdRule::KMeans, ThresholdRule::HalfNormalLaw}) {
        const ModeSet ms = detect_modes(h, config_for(rule));
        check_mode_set_invariants(ms, 256);
        REQUIRE(ms.boundaries.size() == 2);
        CHECK(std::fabs(ms.boundaries[0] - three_bump_valley_lo) <= 2.0);
        CHECK(std::fabs(ms.boundaries[1] - three_bump_valley_hi) <= 2.0);
    }
}

TEST_CASE("auto epsilon is one over the number of curves") {
    const Histogram h = three_bump_histogram(pinned_seed);
    const ModeSet ms = detect_modes(h, config_for(ThresholdRule::HalfNormalLaw));
    REQUIRE(!ms.curves.empty());
    REQUIRE(ms.threshold.epsilon.has_value());
    CHECK(*ms.threshold.epsilon ==
          doctest::Approx(1.0 / static_cast<double>(ms.curves.size())));
}

TEST_CASE("a single-valley histogram keeps its lone curve under every method") {
    const Histogram h({9.0, 1.0, 9.0});
    for (const ThresholdRule rule : {ThresholdRule::Otsu, ThresholdRule::KMeans,
                                     ThresholdRule::HalfNormalLaw, ThresholdRule::EmpiricalLaw,
                                     ThresholdRule::UniformLaw}) {
        const ModeSet ms = detect_modes(h, config_for(rule));
        REQUIRE(ms.curves.size() == 1);
        CHECK(ms.threshold.degenerate);
        CHECK(ms.threshold.threshold == 0.0);
        CHECK(ms.meaningful == std::vector<bool>{true});
        CHECK(ms.boundaries == std::vector<int>{1});
        REQUIRE(ms.modes.size() == 2);
        CHECK(ms.modes[0] == std::array<int, 2>{0, 1});
        CHECK(ms.modes[1] == std::array<int, 2>{1, 2});
    }
}

TEST_CASE("boundaries come from curve positions at their birth step") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 10; ++trial) {
        const Histogram h = random_histogram(rng, 48);
        const ModeSet ms = detect_modes(h, config_for(ThresholdRule::Otsu));
        check_mode_set_invariants(ms, 48);
        for (const int b : ms.boundaries) {
            const bool is_birth_position =
                std::any_of(ms.curves.begin(), ms.curves.end(),
                            [&](const MinimaCurve& c) { return c.positions.front() == b; });
            CHECK(is_birth_position);
        }
    }
}

TEST_CASE("positive scaling never moves a boundary") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 10; ++trial) {
        const Histogram h = random_histogram(rng, 128, 1000000);
        DetectionConfig cfg = config_for(ThresholdRule::KMeans);
        cfg.seed = 7;
        const std::vector<int> base = detect_modes(h, cfg).boundaries;
        for (const double alpha : {0.1, 3.0, 1000.0}) {
            std::vector<double> scaled = h.counts;
            for (double& c : scaled) c *= alpha;
            CHECK(detect_modes(Histogram(scaled), cfg).boundaries == base);
        }
    }
}

TEST_CASE("boundaries are exactly the meaningful curves' birth positions") {
    const Histogram h = three_bump_histogram(pinned_seed);
    for (const ThresholdRule rule : {ThresholdRule::UniformLaw, ThresholdRule::HalfNormalLaw,
                                     ThresholdRule::EmpiricalLaw, ThresholdRule::Otsu,
                                     ThresholdRule::KMeans}) {
        const ModeSet ms = detect_modes(h, config_for(rule));
        REQUIRE(ms.meaningful.size() == ms.curves.size());
        std::vector<int> expected;
        for (std::size_t i = 0; i < ms.curves.size(); ++i) {
            CHECK(ms.meaningful[i] ==
                  (static_cast<double>(ms.curves[i].length()) > ms.threshold.threshold));
            if (ms.meaningful[i]) expected.push_back(ms.curves[i].positions.front());
        }
        std::sort(expected.begin(), expected.end());
        expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
        CHECK(ms.boundaries == expected);
    }
}

TEST_CASE("detection is reproducible for a fixed seed") {
    const Histogram h = three_bump_histogram(pinned_seed);
    DetectionConfig cfg = config_for(ThresholdRule::KMeans);
    cfg.seed = 42;
    const ModeSet a = detect_modes(h, cfg);
    const ModeSet b = detect_modes(h, cfg);
    CHECK(a.boundaries == b.boundaries);
    CHECK(a.threshold.threshold == b.threshold.threshold);
    CHECK(a.meaningful == b.meaningful);
}

TEST_CASE("config epsilon must lie in (0, 1]") {
    const Histogram h({9.0, 1.0, 9.0});
    DetectionConfig cfg = config_for(ThresholdRule::EmpiricalLaw);
    cfg.epsilon = 0.0;
    CHECK_THROWS_AS(detect_modes(h, cfg), std::invalid_argument);
    cfg.epsilon = 1.5;
    CHECK_THROWS_AS(detect_modes(h, cfg), std::invalid_argument);
    cfg.epsilon = 1.0;
    CHECK_NOTHROW(detect_modes(h, cfg));
}

TEST_CASE("mode supports expand boundaries into a tiling") {
    CHECK(modes_from_boundaries({}, 256) ==
          std::vector<std::array<int, 2>>{{0, 255}});
    CHECK(modes_from_boundaries({100}, 256) ==
          std::vector<std::array<int, 2>>({{0, 100}, {100, 255}}));
    CHECK(modes_from_boundaries({84, 172}, 256) ==
          std::vector<std::array<int, 2>>({{0, 84}, {84, 172}, {172, 255}}));

    CHECK_THROWS_AS(modes_from_boundaries({172, 84}, 256), std::invalid_argument);
    CHECK_THROWS_AS(modes_from_boundaries({84, 84}, 256), std::invalid_argument);
    CHECK_THROWS_AS(modes_from_boundaries({0}, 256), std::invalid_argument);
    CHECK_THROWS_AS(modes_from_boundaries({255}, 256), std::invalid_argument);
    CHECK_THROWS_AS(modes_from_boundaries({}, 2), std::invalid_argument);
}
