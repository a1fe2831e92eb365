// SPDX-License-Identifier: Apache-2.0
#include "flexsector/powermodel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace flexsector {

RateTarget RateTarget::from_rate(double rate_bps_hz) {
    if (rate_bps_hz < 0.0) throw std::invalid_argument("rate must be non-negative");
    return RateTarget{rate_bps_hz, std::exp2(rate_bps_hz) - 1.0};
}

double path_loss_average(double d_min, double d_max, double height,
                         double pathloss_exponent, double beta0) {
    const double e = pathloss_exponent / 2.0 + 1.0;
    const double hi = d_max * d_max + height * height;
    const double lo = d_min * d_min + height * height;
    return (std::pow(hi, e) - std::pow(lo, e)) /
           (beta0 * (d_max * d_max - d_min * d_min) * e);
}

PowerConstants derive_constants(const Scenario& sc) {
    PowerConstants pc;
    pc.tau = -std::log1p(-sc.max_outage);
    const double k = 4.0 * std::numbers::pi * sc.carrier_freq / kSpeedOfLight;
    pc.beta0 = 1.0 / (k * k);
    pc.nu0 = path_loss_average(sc.d_min, sc.d_max, sc.height,
                               sc.pathloss_exponent, pc.beta0);
    pc.noise_watt = sc.noise_power_watt();
    return pc;
}

double average_snr(const PowerConstants& pc, int num_sectors,
                   double antennas_in_sector) {
    if (antennas_in_sector < 0.0) {
        throw std::invalid_argument("antenna count must be non-negative");
    }
    return pc.tau * static_cast<double>(num_sectors) * antennas_in_sector /
           (pc.nu0 * pc.noise_watt);
}

double per_user_power(const PowerConstants& pc, int num_sectors,
                      int antennas_in_sector, int users_in_sector, double d_k,
                      double height, double pathloss_exponent,
                      RateTarget target) {
    if (antennas_in_sector < 1) {
        throw std::invalid_argument("sector needs at least one antenna");
    }
    if (users_in_sector < 1) {
        throw std::invalid_argument("per-user power undefined for an empty sector");
    }
    const double k = static_cast<double>(users_in_sector);
    const double dist_factor =
        std::pow(d_k * d_k + height * height, pathloss_exponent / 2.0);
    return pc.noise_watt * (std::exp2(k * target.rate) - 1.0) * dist_factor /
           (pc.tau * static_cast<double>(antennas_in_sector) *
            static_cast<double>(num_sectors) * pc.beta0 * k);
}

double sector_avg_power(const PowerConstants& pc, int num_sectors,
                        double antennas_in_sector, double lambda_m,
                        RateTarget target, PowerVariant variant) {
    if (antennas_in_sector <= 0.0) {
        throw std::invalid_argument("sector needs at least one antenna");
    }
    if (lambda_m < 0.0) throw std::invalid_argument("lambda_m must be non-negative");
    const double gamma_m = average_snr(pc, num_sectors, antennas_in_sector);
    const double x = target.snr * lambda_m;
    return variant == PowerVariant::paper ? std::exp(x) / gamma_m
                                          : std::expm1(x) / gamma_m;
}

double total_power(const PowerConstants& pc, int num_sectors,
                   std::span<const int> allocation,
                   std::span<const double> lambdas, RateTarget target,
                   PowerVariant variant) {
    if (allocation.size() != static_cast<std::size_t>(num_sectors) ||
        lambdas.size() != allocation.size()) {
        throw std::invalid_argument("allocation/lambda length must equal num_sectors");
    }
    double sum = 0.0;
    for (std::size_t m = 0; m < allocation.size(); ++m) {
        sum += sector_avg_power(pc, num_sectors, allocation[m], lambdas[m], target,
                                variant);
    }
    return sum;
}

double power_lower_bound(const PowerConstants& pc, int num_sectors,
                         int total_antennas, double lambda_sum,
                         RateTarget target) {
    const double m = static_cast<double>(num_sectors);
    return m * pc.nu0 * pc.noise_watt /
           (pc.tau * static_cast<double>(total_antennas)) *
           std::exp(target.snr * lambda_sum / m);
}

double throughput_upper_bound(const PowerConstants& pc, int num_sectors,
                              int total_antennas, double lambda_sum,
                              double max_power_watt) {
    const double m = static_cast<double>(num_sectors);
    const double arg = max_power_watt * static_cast<double>(total_antennas) *
                       pc.tau / (m * pc.nu0 * pc.noise_watt);
    if (!(arg > 1.0)) return 0.0;  // power budget below the single-user floor
    if (lambda_sum <= 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return std::log2(1.0 + m / lambda_sum * std::log(arg));
}

}  // namespace flexsector
