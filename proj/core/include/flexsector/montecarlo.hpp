// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "flexsector/powermodel.hpp"
#include "flexsector/rng.hpp"
#include "flexsector/scenario.hpp"

namespace flexsector {

/// Controls one Monte-Carlo estimation run. Identical (seed, stream_id,
/// realizations) always reproduce the estimate bit for bit, independent of
/// the thread count: realization i draws from substream i and partial sums
/// are combined in fixed chunk order.
struct MCConfig {
    std::int64_t realizations = 1'000'000;
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;
    int threads = 0;  // 0 selects the hardware concurrency
};

/// One sampled sector state: user count, horizontal distances, fading draws.
struct Realization {
    int user_count = 0;
    std::vector<double> distances;
    std::vector<double> fading;
};

/// Inverse-CDF map from a uniform variate to a horizontal distance on the
/// annulus (uniform in area).
double distance_from_uniform(double u, double d_min, double d_max);

double sample_distance(CounterRng& rng, double d_min, double d_max);

/// Draws the user count (Poisson), then the distances, then the unit-mean
/// exponential fading values, in that fixed order.
Realization sample_sector_realization(CounterRng& rng, double lambda_m,
                                      double d_min, double d_max);

struct MCEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::int64_t realizations = 0;
};

/// Plain-Monte-Carlo estimate of the average sector transmit power: the mean
/// over realizations of the summed per-user powers, empty realizations
/// contributing zero. The per-realization value grows like 2^{K*rate}, so
/// the estimator's relative error degrades quickly in lambda_m * snr; use
/// the tilted estimator when tight agreement is needed.
MCEstimate mc_sector_avg_power(const Scenario& sc, double lambda_m,
                               int antennas_in_sector, RateTarget target,
                               const MCConfig& cfg);

/// Importance-sampled estimate of the same expectation: user counts are
/// drawn from the exponentially tilted Poisson with mean lambda*(1+snr) and
/// reweighted by the exact likelihood ratio. Unbiased for any tilt; this
/// tilt makes the weighted integrand nearly flat, so the relative standard
/// error stays near 1/sqrt(K*n) even where the plain estimator is useless.
/// Only the Poisson law itself enters the weights, keeping the estimator an
/// oracle that is independent of the closed-form expressions it checks.
MCEstimate mc_sector_avg_power_tilted(const Scenario& sc, double lambda_m,
                                      int antennas_in_sector, RateTarget target,
                                      const MCConfig& cfg);

/// Empirical outage frequency over fading draws for one user at distance
/// d_k in a sector with a fixed user count, transmitting at power_scale
/// times the minimum power meeting the outage budget with equality.
double mc_outage_probability(const Scenario& sc, int users_in_sector,
                             int antennas_in_sector, double d_k,
                             RateTarget target, const MCConfig& cfg,
                             double power_scale = 1.0);

}  // namespace flexsector
