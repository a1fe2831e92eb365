// SPDX-License-Identifier: Apache-2.0
#include "flexsector/idealized.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace flexsector {

double ideal_total_power(const PowerConstants& pc, int num_sectors,
                         int total_antennas, std::span<const double> lambdas,
                         double snr) {
    if (total_antennas < 1) throw std::invalid_argument("need at least one antenna");
    if (lambdas.size() != static_cast<std::size_t>(num_sectors)) {
        throw std::invalid_argument("lambda vector length must equal num_sectors");
    }
    double max_exp = -std::numeric_limits<double>::infinity();
    for (double l : lambdas) max_exp = std::max(max_exp, 0.5 * snr * l);
    double acc = 0.0;
    for (double l : lambdas) acc += std::exp(0.5 * snr * l - max_exp);
    // log of (sum exp)^2 = 2*(max_exp + log(acc))
    const double log_sq = 2.0 * (max_exp + std::log(acc));
    const double scale = pc.nu0 * pc.noise_watt /
                         (pc.tau * static_cast<double>(num_sectors) *
                          static_cast<double>(total_antennas));
    return scale * std::exp(log_sq);
}

IdealOptimum joint_ideal_optimum(const PowerConstants& pc, const Scenario& sc,
                                 double lambda_sum, double snr) {
    const double m = static_cast<double>(sc.num_sectors);
    IdealOptimum opt;
    opt.plan.lambdas.assign(static_cast<std::size_t>(sc.num_sectors),
                            lambda_sum / m);
    opt.continuous_antennas.assign(static_cast<std::size_t>(sc.num_sectors),
                                   static_cast<double>(sc.total_antennas) / m);
    opt.total_power_watt =
        power_lower_bound(pc, sc.num_sectors, sc.total_antennas, lambda_sum,
                          RateTarget{std::log2(1.0 + snr), snr});
    return opt;
}

UserDistributionPlan waterfilling_user_distribution(const PowerConstants& pc,
                                                    std::span<const double> sector_snrs,
                                                    double lambda_sum, double snr) {
    (void)pc;  // the split depends on the radio only through the sector SNRs
    if (lambda_sum <= 0.0) throw std::invalid_argument("lambda_sum must be positive");
    if (snr <= 0.0) throw std::invalid_argument("snr must be positive");
    const std::size_t m = sector_snrs.size();
    if (m == 0) throw std::invalid_argument("no sectors");
    for (double g : sector_snrs) {
        if (!(g > 0.0)) throw std::invalid_argument("sector SNRs must be positive");
    }

    // Sector m is active once log(mu) exceeds t_m = log(snr/gamma_m); above
    // that the constraint sum grows linearly in log(mu) with slope equal to
    // the number of active sectors.
    std::vector<double> threshold(m);
    double t_min = std::numeric_limits<double>::infinity();
    double t_max = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
        threshold[i] = std::log(snr / sector_snrs[i]);
        t_min = std::min(t_min, threshold[i]);
        t_max = std::max(t_max, threshold[i]);
    }
    const double target = snr * lambda_sum;
    auto constraint_sum = [&](double t) {
        double s = 0.0;
        for (double th : threshold) s += std::max(t - th, 0.0);
        return s;
    };

    // Bracket: at t_min every sector sits exactly at threshold (sum zero);
    // grow the upper end geometrically until the sum clears the target.
    double lo = t_min;
    double span = std::max(1.0, t_max - t_min);
    double hi = t_min + span;
    while (constraint_sum(hi) < target) {
        span *= 2.0;
        hi = t_min + span;
    }
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (constraint_sum(mid) < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double t = 0.5 * (lo + hi);

    UserDistributionPlan plan;
    plan.multiplier = std::exp(t);
    plan.lambdas.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        plan.lambdas[i] = std::max(t - threshold[i], 0.0) / snr;
    }
    return plan;
}

}  // namespace flexsector
