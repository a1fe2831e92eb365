// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "flexsector/rng.hpp"
#include "flexsector/userdist.hpp"
#include "testutil.hpp"

using namespace flexsector;

TEST_CASE("background and hotspots overlay additively") {
    CHECK(build_intensities(4, 1.0, {}).lambdas == std::vector<double>{1, 1, 1, 1});

    const HotspotSpec wrap{3, 2, 5.0};
    CHECK(build_intensities(4, 0.0, {{wrap}}).lambdas ==
          std::vector<double>{5, 0, 0, 5});

    const HotspotSpec front{0, 1, 2.0};
    CHECK(build_intensities(4, 1.0, {{front}}).lambdas ==
          std::vector<double>{3, 1, 1, 1});

    // Overlapping windows add.
    const std::vector<HotspotSpec> pair = {{0, 2, 1.0}, {1, 2, 1.0}};
    CHECK(build_intensities(3, 0.0, pair).lambdas == std::vector<double>{1, 2, 1});
}

TEST_CASE("hotspot validation") {
    CHECK_THROWS(build_intensities(4, 1.0, {{HotspotSpec{4, 1, 1.0}}}));
    CHECK_THROWS(build_intensities(4, 1.0, {{HotspotSpec{0, 0, 1.0}}}));
    CHECK_THROWS(build_intensities(4, 1.0, {{HotspotSpec{0, 5, 1.0}}}));
    CHECK_THROWS(build_intensities(4, 1.0, {{HotspotSpec{0, 1, -1.0}}}));
    CHECK_THROWS(build_intensities(4, -0.5, {}));
    CHECK_THROWS(build_intensities(0, 1.0, {}));
}

TEST_CASE("sector averages sum the covered bins") {
    const Scenario sc = test::small_scenario(3, 4, 12);
    BinIntensities uniform;
    uniform.lambdas.assign(12, 1.0);
    for (int r = 0; r < sc.bins_per_sector; ++r) {
        for (int m = 1; m <= 3; ++m) {
            CHECK(sector_lambda(uniform, sc, Rotation{r}, m) == doctest::Approx(4.0));
        }
    }

    BinIntensities ramp;
    for (int b = 0; b < 12; ++b) ramp.lambdas.push_back(10.0 + b);
    CHECK(sector_lambda(ramp, sc, Rotation{1}, 1) ==
          doctest::Approx(ramp.lambdas[1] + ramp.lambdas[2] + ramp.lambdas[3] +
                          ramp.lambdas[4]));

    BinIntensities zeros;
    zeros.lambdas.assign(12, 0.0);
    CHECK(sector_lambda(zeros, sc, Rotation{0}, 2) == 0.0);
}

TEST_CASE("lambda vector conserves the total for every rotation") {
    const Scenario sc = test::small_scenario(3, 4, 12);
    CounterRng rng(99, 0);
    BinIntensities bins;
    for (int b = 0; b < 12; ++b) bins.lambdas.push_back(5.0 * rng.next_uniform());
    const double total = bins.total();
    for (int r = 0; r < sc.num_bins; ++r) {
        const std::vector<double> vec = lambda_vector(bins, sc, Rotation{r});
        double sum = 0.0;
        for (double v : vec) sum += v;
        CHECK(test::rel_diff(sum, total) < 1e-12);
    }
}

TEST_CASE("a single occupied bin lands in exactly one sector") {
    const Scenario sc = test::small_scenario(3, 4, 12);
    BinIntensities bins;
    bins.lambdas.assign(12, 0.0);
    bins.lambdas[7] = 4.25;
    for (int r = 0; r < sc.bins_per_sector; ++r) {
        const std::vector<double> vec = lambda_vector(bins, sc, Rotation{r});
        int nonzero = 0;
        for (double v : vec) {
            if (v != 0.0) {
                ++nonzero;
                CHECK(v == doctest::Approx(4.25));
            }
        }
        CHECK(nonzero == 1);
    }
}

TEST_CASE("rotating the bins and the sectors together changes nothing") {
    const Scenario sc = test::small_scenario(3, 4, 12);
    CounterRng rng(7, 0);
    BinIntensities bins;
    for (int b = 0; b < 12; ++b) bins.lambdas.push_back(rng.next_uniform());
    BinIntensities shifted;
    shifted.lambdas.resize(12);
    for (int b = 0; b < 12; ++b) {
        shifted.lambdas[static_cast<std::size_t>((b + 1) % 12)] = bins.lambdas[b];
    }
    for (int r = 0; r + 1 < sc.bins_per_sector; ++r) {
        CHECK(lambda_vector(bins, sc, Rotation{r}) ==
              lambda_vector(shifted, sc, Rotation{r + 1}));
    }
}

TEST_CASE("sample variance uses the M-1 divisor") {
    // Both published anchors hold only with the M-1 divisor (the M divisor
    // would give about 513 and 65).
    CHECK(lambda_variance(std::vector<double>{64, 26, 10}) ==
          doctest::Approx(769.3333333333).epsilon(1e-9));
    CHECK(lambda_variance(std::vector<double>{38, 22, 40}) ==
          doctest::Approx(97.3333333333).epsilon(1e-9));
    CHECK(lambda_variance(std::vector<double>{3.7, 3.7, 3.7, 3.7}) == 0.0);
    CHECK_THROWS(lambda_variance(std::vector<double>{1.0}));
}

TEST_CASE("bin count must match the scenario") {
    const Scenario sc = test::small_scenario(3, 4, 12);
    BinIntensities bins;
    bins.lambdas.assign(10, 1.0);
    CHECK_THROWS(sector_lambda(bins, sc, Rotation{0}, 1));
}
