// SPDX-License-Identifier: Apache-2.0
#include "flexsector/userdist.hpp"

#include <numeric>
#include <stdexcept>

namespace flexsector {

double BinIntensities::total() const {
    return std::accumulate(lambdas.begin(), lambdas.end(), 0.0);
}

BinIntensities build_intensities(int num_bins, double background_per_bin,
                                 std::span<const HotspotSpec> hotspots) {
    if (num_bins < 1) throw std::invalid_argument("num_bins must be positive");
    if (background_per_bin < 0.0) {
        throw std::invalid_argument("background intensity must be non-negative");
    }
    BinIntensities bins;
    bins.lambdas.assign(static_cast<std::size_t>(num_bins), background_per_bin);
    for (const HotspotSpec& h : hotspots) {
        if (h.start_bin < 0 || h.start_bin >= num_bins) {
            throw std::invalid_argument("hotspot start_bin out of range");
        }
        if (h.span < 1 || h.span > num_bins) {
            throw std::invalid_argument("hotspot span must lie in [1, num_bins]");
        }
        if (h.intensity_per_bin < 0.0) {
            throw std::invalid_argument("hotspot intensity must be non-negative");
        }
        for (int l = 0; l < h.span; ++l) {
            bins.lambdas[static_cast<std::size_t>((h.start_bin + l) % num_bins)] +=
                h.intensity_per_bin;
        }
    }
    return bins;
}

double sector_lambda(const BinIntensities& bins, const Scenario& sc, Rotation r,
                     int sector) {
    if (bins.num_bins() != sc.num_bins) {
        throw std::invalid_argument("bin intensity count does not match scenario");
    }
    const int start = starting_bin(sc, r, sector);
    double sum = 0.0;
    for (int l = 0; l < sc.bins_per_sector; ++l) {
        sum += bins.lambdas[static_cast<std::size_t>((start + l) % sc.num_bins)];
    }
    return sum;
}

std::vector<double> lambda_vector(const BinIntensities& bins, const Scenario& sc,
                                  Rotation r) {
    std::vector<double> out(static_cast<std::size_t>(sc.num_sectors));
    for (int m = 1; m <= sc.num_sectors; ++m) {
        out[static_cast<std::size_t>(m - 1)] = sector_lambda(bins, sc, r, m);
    }
    return out;
}

double lambda_variance(std::span<const double> sector_lambdas) {
    const std::size_t m = sector_lambdas.size();
    if (m < 2) throw std::invalid_argument("variance needs at least two sectors");
    const double mean =
        std::accumulate(sector_lambdas.begin(), sector_lambdas.end(), 0.0) /
        static_cast<double>(m);
    double ss = 0.0;
    for (double v : sector_lambdas) ss += (v - mean) * (v - mean);
    return ss / static_cast<double>(m - 1);
}

}  // namespace flexsector
