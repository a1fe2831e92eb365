// SPDX-License-Identifier: Apache-2.0
#include "flexsector/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace flexsector {

double distance_from_uniform(double u, double d_min, double d_max) {
    if (d_min < 0.0 || !(d_min < d_max)) {
        throw std::invalid_argument("need 0 <= d_min < d_max");
    }
    return std::sqrt(d_min * d_min + u * (d_max * d_max - d_min * d_min));
}

double sample_distance(CounterRng& rng, double d_min, double d_max) {
    return distance_from_uniform(rng.next_uniform(), d_min, d_max);
}

Realization sample_sector_realization(CounterRng& rng, double lambda_m,
                                      double d_min, double d_max) {
    Realization out;
    out.user_count = rng.next_poisson(lambda_m);
    out.distances.resize(static_cast<std::size_t>(out.user_count));
    for (double& d : out.distances) d = sample_distance(rng, d_min, d_max);
    out.fading.resize(static_cast<std::size_t>(out.user_count));
    for (double& f : out.fading) f = rng.next_exponential();
    return out;
}

namespace {

struct ChunkSums {
    double sum = 0.0;
    double sum_sq = 0.0;
};

constexpr std::int64_t kChunk = 1 << 16;

// Mean and standard error of value(i) over i in [0, n). Work is split into
// fixed-size chunks claimed by worker threads; chunk partials are combined
// in index order, so the result does not depend on the thread count.
template <typename ValueFn>
MCEstimate reduce_realizations(std::int64_t n, int threads, ValueFn&& value) {
    if (n < 1) throw std::invalid_argument("need at least one realization");
    const std::int64_t num_chunks = (n + kChunk - 1) / kChunk;
    std::vector<ChunkSums> partials(static_cast<std::size_t>(num_chunks));

    int workers = threads > 0 ? threads
                              : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    workers = static_cast<int>(
        std::min<std::int64_t>(workers, num_chunks));

    std::atomic<std::int64_t> next_chunk{0};
    auto run = [&]() {
        for (;;) {
            const std::int64_t c = next_chunk.fetch_add(1);
            if (c >= num_chunks) return;
            const std::int64_t begin = c * kChunk;
            const std::int64_t end = std::min(n, begin + kChunk);
            ChunkSums acc;
            for (std::int64_t i = begin; i < end; ++i) {
                const double v = value(i);
                acc.sum += v;
                acc.sum_sq += v * v;
            }
            partials[static_cast<std::size_t>(c)] = acc;
        }
    };
    if (workers == 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t) pool.emplace_back(run);
        for (auto& th : pool) th.join();
    }

    double sum = 0.0;
    double sum_sq = 0.0;
    for (const ChunkSums& c : partials) {
        sum += c.sum;
        sum_sq += c.sum_sq;
    }
    MCEstimate est;
    est.realizations = n;
    est.mean = sum / static_cast<double>(n);
    if (n > 1) {
        const double var =
            std::max(0.0, (sum_sq - sum * sum / static_cast<double>(n)) /
                              static_cast<double>(n - 1));
        est.std_error = std::sqrt(var / static_cast<double>(n));
    }
    return est;
}

}  // namespace

MCEstimate mc_sector_avg_power(const Scenario& sc, double lambda_m,
                               int antennas_in_sector, RateTarget target,
                               const MCConfig& cfg) {
    if (antennas_in_sector < 1) {
        throw std::invalid_argument("sector needs at least one antenna");
    }
    const PowerConstants pc = derive_constants(sc);
    const CounterRng base(cfg.seed, cfg.stream_id);
    auto value = [&](std::int64_t i) {
        CounterRng rng = base.substream(static_cast<std::uint64_t>(i));
        const Realization real =
            sample_sector_realization(rng, lambda_m, sc.d_min, sc.d_max);
        double p = 0.0;
        for (double d : real.distances) {
            p += per_user_power(pc, sc.num_sectors, antennas_in_sector,
                                real.user_count, d, sc.height,
                                sc.pathloss_exponent, target);
        }
        return p;
    };
    return reduce_realizations(cfg.realizations, cfg.threads, value);
}

MCEstimate mc_sector_avg_power_tilted(const Scenario& sc, double lambda_m,
                                      int antennas_in_sector, RateTarget target,
                                      const MCConfig& cfg) {
    if (antennas_in_sector < 1) {
        throw std::invalid_argument("sector needs at least one antenna");
    }
    const PowerConstants pc = derive_constants(sc);
    const double tilted_mean = lambda_m * (1.0 + target.snr);
    const double scale = pc.noise_watt /
                         (pc.tau * static_cast<double>(antennas_in_sector) *
                          static_cast<double>(sc.num_sectors) * pc.beta0);
    const CounterRng base(cfg.seed, cfg.stream_id);
    // The likelihood ratio against Poisson(lambda) splits into the constant
    // exp(lambda*snr), applied after the reduction, and (1+snr)^-K, which
    // cancels the exponential growth of 2^{K*rate} - 1 inside each value.
    auto value = [&](std::int64_t i) {
        CounterRng rng = base.substream(static_cast<std::uint64_t>(i));
        const int k = rng.next_poisson(tilted_mean);
        if (k == 0) return 0.0;
        double dist_sum = 0.0;
        for (int u = 0; u < k; ++u) {
            const double d = sample_distance(rng, sc.d_min, sc.d_max);
            dist_sum += std::pow(d * d + sc.height * sc.height,
                                 sc.pathloss_exponent / 2.0);
        }
        const double damped_gain =
            1.0 - std::exp2(-static_cast<double>(k) * target.rate);
        return scale * damped_gain * dist_sum / static_cast<double>(k);
    };
    MCEstimate est = reduce_realizations(cfg.realizations, cfg.threads, value);
    const double growth = std::exp(lambda_m * target.snr);
    est.mean *= growth;
    est.std_error *= growth;
    return est;
}

double mc_outage_probability(const Scenario& sc, int users_in_sector,
                             int antennas_in_sector, double d_k,
                             RateTarget target, const MCConfig& cfg,
                             double power_scale) {
    if (users_in_sector < 1) {
        throw std::invalid_argument("outage needs at least one user");
    }
    if (!(power_scale > 0.0)) {
        throw std::invalid_argument("power_scale must be positive");
    }
    if (target.rate == 0.0) return 0.0;  // zero rate never outages
    const PowerConstants pc = derive_constants(sc);
    const double power =
        power_scale * per_user_power(pc, sc.num_sectors, antennas_in_sector,
                                     users_in_sector, d_k, sc.height,
                                     sc.pathloss_exponent, target);
    if (std::isinf(power)) return 0.0;
    const double k = static_cast<double>(users_in_sector);
    const double path_gain =
        pc.beta0 * std::pow(d_k * d_k + sc.height * sc.height,
                            -sc.pathloss_exponent / 2.0);
    // Outage occurs when the fading draw falls below this deterministic
    // threshold (tau/power_scale when the power sits at the minimum).
    const double threshold =
        pc.noise_watt * (std::exp2(k * target.rate) - 1.0) /
        (power * static_cast<double>(antennas_in_sector) *
         static_cast<double>(sc.num_sectors) * path_gain * k);

    const CounterRng base(cfg.seed, cfg.stream_id);
    auto value = [&](std::int64_t i) {
        CounterRng rng = base.substream(static_cast<std::uint64_t>(i));
        return rng.next_exponential() < threshold ? 1.0 : 0.0;
    };
    return reduce_realizations(cfg.realizations, cfg.threads, value).mean;
}

}  // namespace flexsector
