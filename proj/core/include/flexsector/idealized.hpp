// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "flexsector/powermodel.hpp"

namespace flexsector {

/// A per-sector split of the total average user count, with the Lagrange
/// multiplier that produced it when a water-filling solve is involved.
struct UserDistributionPlan {
    std::vector<double> lambdas;
    double multiplier = 0.0;
};

/// Total average transmit power when the antenna allocation is relaxed to
/// its continuous optimum for the given user split:
/// nu0*sigma^2/(tau*M*N) * (sum_m exp(snr/2 * lambda_m))^2, evaluated in
/// log space.
double ideal_total_power(const PowerConstants& pc, int num_sectors,
                         int total_antennas, std::span<const double> lambdas,
                         double snr);

/// Joint optimum over user split and continuous allocation: both equal
/// across sectors, attaining the total-power lower bound.
struct IdealOptimum {
    UserDistributionPlan plan;
    std::vector<double> continuous_antennas;
    double total_power_watt = 0.0;
};

IdealOptimum joint_ideal_optimum(const PowerConstants& pc, const Scenario& sc,
                                 double lambda_sum, double snr);

/// Optimal user split under a fixed antenna allocation, expressed through
/// the per-sector average SNRs. Water-filling: sectors with larger SNR take
/// more users, weak sectors may be shut out entirely. The multiplier is
/// located by bisection on its logarithm.
UserDistributionPlan waterfilling_user_distribution(const PowerConstants& pc,
                                                    std::span<const double> sector_snrs,
                                                    double lambda_sum, double snr);

}  // namespace flexsector
