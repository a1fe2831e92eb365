// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "flexsector/montecarlo.hpp"
#include "testutil.hpp"

using namespace flexsector;

TEST_CASE("inverse-CDF distance map hits the endpoints and the median") {
    CHECK(distance_from_uniform(0.0, 20.0, 100.0) == doctest::Approx(20.0));
    CHECK(distance_from_uniform(1.0, 20.0, 100.0) == doctest::Approx(100.0));
    CHECK(distance_from_uniform(0.5, 0.0, 100.0) ==
          doctest::Approx(100.0 / std::sqrt(2.0)));
    CHECK_THROWS(distance_from_uniform(0.5, 100.0, 20.0));
}

TEST_CASE("sampled distances follow the annulus law") {
    const double d_min = 20.0;
    const double d_max = 100.0;
    CounterRng rng(61, 0);
    std::vector<double> samples(1'000'000);
    for (double& d : samples) {
        d = sample_distance(rng, d_min, d_max);
        REQUIRE(d >= d_min);
        REQUIRE(d <= d_max);
    }
    const double ks = test::ks_statistic(std::move(samples), [&](double d) {
        return (d * d - d_min * d_min) / (d_max * d_max - d_min * d_min);
    });
    CHECK(ks < 0.002);
}

TEST_CASE("sector realizations have the right moments") {
    CounterRng empty_rng(67, 0);
    const Realization none = sample_sector_realization(empty_rng, 0.0, 20.0, 100.0);
    CHECK(none.user_count == 0);
    CHECK(none.distances.empty());
    CHECK(none.fading.empty());

    CounterRng rng(71, 0);
    const double lambda = 7.0;
    const int n = 200'000;
    double count_sum = 0.0;
    double fading_sum = 0.0;
    std::int64_t fading_n = 0;
    for (int i = 0; i < n; ++i) {
        const Realization real = sample_sector_realization(rng, lambda, 20.0, 100.0);
        CHECK(real.distances.size() == static_cast<std::size_t>(real.user_count));
        CHECK(real.fading.size() == static_cast<std::size_t>(real.user_count));
        count_sum += real.user_count;
        for (double f : real.fading) {
            fading_sum += f;
            ++fading_n;
        }
    }
    const double mean_count = count_sum / n;
    const double count_sigma = std::sqrt(lambda / n);
    CHECK(std::abs(mean_count - lambda) < 3.0 * count_sigma);

    const double mean_fading = fading_sum / static_cast<double>(fading_n);
    const double fading_sigma = 1.0 / std::sqrt(static_cast<double>(fading_n));
    CHECK(std::abs(mean_fading - 1.0) < 3.0 * fading_sigma);
}

TEST_CASE("estimates are bit-identical across thread counts and reruns") {
    const Scenario sc = test::reference_scenario();
    const RateTarget target = RateTarget::from_rate(0.7);
    MCConfig cfg;
    cfg.realizations = 40'000;
    cfg.seed = 4242;
    cfg.stream_id = 9;

    cfg.threads = 1;
    const MCEstimate serial = mc_sector_avg_power(sc, 12.0, 100, target, cfg);
    cfg.threads = 4;
    const MCEstimate parallel = mc_sector_avg_power(sc, 12.0, 100, target, cfg);
    CHECK(serial.mean == parallel.mean);
    CHECK(serial.std_error == parallel.std_error);

    const MCEstimate again = mc_sector_avg_power(sc, 12.0, 100, target, cfg);
    CHECK(again.mean == parallel.mean);

    cfg.stream_id = 10;  // a different stream must differ
    const MCEstimate other = mc_sector_avg_power(sc, 12.0, 100, target, cfg);
    CHECK(other.mean != parallel.mean);
}

TEST_CASE("zero rate needs zero power") {
    const Scenario sc = test::reference_scenario();
    MCConfig cfg;
    cfg.realizations = 1000;
    cfg.seed = 1;
    const MCEstimate est =
        mc_sector_avg_power(sc, 10.0, 100, RateTarget::from_rate(0.0), cfg);
    CHECK(est.mean == 0.0);
}

TEST_CASE("plain estimator brackets the exact closed form") {
    const Scenario sc = test::reference_scenario();
    const PowerConstants pc = derive_constants(sc);
    const RateTarget target = RateTarget::from_rate(0.7);
    MCConfig cfg;
    cfg.realizations = 1'000'000;
    cfg.seed = 77;
    cfg.stream_id = 0;
    const double lambda = 20.0;
    const MCEstimate est = mc_sector_avg_power(sc, lambda, 100, target, cfg);
    const double exact =
        sector_avg_power(pc, 3, 100.0, lambda, target, PowerVariant::exact);
    CHECK(std::abs(est.mean - exact) <= 3.0 * est.std_error);
}

TEST_CASE("tilted estimator nails the exact closed form") {
    const Scenario sc = test::reference_scenario();
    const PowerConstants pc = derive_constants(sc);
    const RateTarget target = RateTarget::from_rate(0.7);
    MCConfig cfg;
    cfg.realizations = 200'000;
    cfg.seed = 78;
    for (double lambda : {5.0, 20.0}) {
        const MCEstimate est = mc_sector_avg_power_tilted(sc, lambda, 100, target, cfg);
        const double exact =
            sector_avg_power(pc, 3, 100.0, lambda, target, PowerVariant::exact);
        CHECK(test::rel_diff(est.mean, exact) < 0.01);
        CHECK(std::abs(est.mean - exact) <= 4.0 * est.std_error);
    }
}

TEST_CASE("estimate scales inversely with the antenna count") {
    const Scenario sc = test::reference_scenario();
    const RateTarget target = RateTarget::from_rate(0.7);
    MCConfig cfg;
    cfg.realizations = 100'000;
    cfg.seed = 79;
    std::vector<double> means;
    for (int n_m : {50, 100, 200}) {
        cfg.stream_id = static_cast<std::uint64_t>(n_m);
        means.push_back(mc_sector_avg_power_tilted(sc, 15.0, n_m, target, cfg).mean);
    }
    CHECK(means[0] / means[1] == doctest::Approx(2.0).epsilon(0.02));
    CHECK(means[1] / means[2] == doctest::Approx(2.0).epsilon(0.02));
}

TEST_CASE("outage at the minimum power sits at the target probability") {
    const Scenario sc = test::reference_scenario();
    const RateTarget target = RateTarget::from_rate(0.7);
    MCConfig cfg;
    cfg.realizations = 1'000'000;
    cfg.seed = 80;
    const double outage = mc_outage_probability(sc, 4, 100, 60.0, target, cfg);
    const double sigma = std::sqrt(0.01 * 0.99 / 1e6);
    CHECK(std::abs(outage - 0.01) < 3.0 * sigma);
}

TEST_CASE("halving the power doubles the exponent in the outage law") {
    const Scenario sc = test::reference_scenario();
    const RateTarget target = RateTarget::from_rate(0.7);
    const PowerConstants pc = derive_constants(sc);
    MCConfig cfg;
    cfg.realizations = 1'000'000;
    cfg.seed = 81;
    const double outage =
        mc_outage_probability(sc, 4, 100, 60.0, target, cfg, 0.5);
    const double expected = -std::expm1(-2.0 * pc.tau);
    const double sigma = std::sqrt(expected * (1 - expected) / 1e6);
    CHECK(std::abs(outage - expected) < 3.0 * sigma);
}

TEST_CASE("outage edge cases") {
    const Scenario sc = test::reference_scenario();
    const RateTarget target = RateTarget::from_rate(0.7);
    MCConfig cfg;
    cfg.realizations = 10'000;
    cfg.seed = 82;
    CHECK(mc_outage_probability(sc, 4, 100, 60.0, target, cfg, 1e12) ==
          doctest::Approx(0.0));
    CHECK(mc_outage_probability(sc, 4, 100, 60.0, RateTarget::from_rate(0.0),
                                cfg) == 0.0);
    CHECK_THROWS(mc_outage_probability(sc, 0, 100, 60.0, target, cfg));

    MCConfig bad;
    bad.realizations = 0;
    CHECK_THROWS(mc_sector_avg_power(sc, 5.0, 100, target, bad));
}
