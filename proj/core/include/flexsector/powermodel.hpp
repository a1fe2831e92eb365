// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "flexsector/scenario.hpp"

namespace flexsector {

inline constexpr double kSpeedOfLight = 299792458.0;  // [m/s]

/// Radio constants shared by every closed-form power expression.
struct PowerConstants {
    double tau = 0.0;         // -ln(1 - max_outage)
    double beta0 = 0.0;       // channel power gain at 1 m
    double nu0 = 0.0;         // distance-averaged path loss over the annulus
    double noise_watt = 0.0;  // sigma^2 in watts
};

/// A common throughput target together with its required SNR 2^rate - 1.
/// Construct through from_rate so the pair can never drift apart.
struct RateTarget {
    double rate = 0.0;  // [bps/Hz]
    double snr = 0.0;   // 2^rate - 1

    static RateTarget from_rate(double rate_bps_hz);
};

/// Which form of the per-sector average power to evaluate. The `paper`
/// variant is e^{snr*lambda}/gamma_m; `exact` carries the expectation of
/// 2^{K*rate} - 1 through without dropping the -1, which is what the
/// Monte-Carlo estimator converges to. They differ by 1/gamma_m, a gap that
/// vanishes exponentially in snr*lambda.
enum class PowerVariant { paper, exact };

/// Distance-averaged path loss: the mean of (d^2 + H^2)^{alpha/2} / beta0
/// over a uniform-in-area user on the [d_min, d_max] annulus, in closed form.
double path_loss_average(double d_min, double d_max, double height,
                         double pathloss_exponent, double beta0);

PowerConstants derive_constants(const Scenario& sc);

/// Average received SNR in a sector with antennas_in_sector antennas at unit
/// transmit power: tau*M*N_m / (nu0*sigma^2).
double average_snr(const PowerConstants& pc, int num_sectors,
                   double antennas_in_sector);

/// Minimum transmit power for one user at horizontal distance d_k meeting the
/// outage budget with equality when its sector serves users_in_sector users.
double per_user_power(const PowerConstants& pc, int num_sectors,
                      int antennas_in_sector, int users_in_sector, double d_k,
                      double height, double pathloss_exponent, RateTarget target);

/// Minimum average transmit power of one sector with average user count
/// lambda_m (closed form).
double sector_avg_power(const PowerConstants& pc, int num_sectors,
                        double antennas_in_sector, double lambda_m,
                        RateTarget target,
                        PowerVariant variant = PowerVariant::paper);

/// Sum of sector_avg_power over all sectors for an integer allocation.
double total_power(const PowerConstants& pc, int num_sectors,
                   std::span<const int> allocation,
                   std::span<const double> lambdas, RateTarget target,
                   PowerVariant variant = PowerVariant::paper);

/// Lower bound on the total average transmit power: the value attained by an
/// equal user split lambda_sum/M with continuous equal allocation N/M.
double power_lower_bound(const PowerConstants& pc, int num_sectors,
                         int total_antennas, double lambda_sum,
                         RateTarget target);

/// Upper bound on the achievable common throughput for a power budget.
/// Returns 0 when the budget sits at or below the single-user floor
/// (log argument <= 1); the bound is then vacuous.
double throughput_upper_bound(const PowerConstants& pc, int num_sectors,
                              int total_antennas, double lambda_sum,
                              double max_power_watt);

}  // namespace flexsector
