// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "flexsector/scenario.hpp"

namespace flexsector {

/// One angular hotspot: a contiguous (wrap-around) window of bins, each
/// receiving an extra intensity_per_bin users on top of the background.
struct HotspotSpec {
    int start_bin = 0;
    int span = 1;
    double intensity_per_bin = 0.0;
};

/// Average user counts per bin (the intensity of each bin's Poisson count).
struct BinIntensities {
    std::vector<double> lambdas;

    double total() const;
    int num_bins() const { return static_cast<int>(lambdas.size()); }
};

/// Background plus hotspot overlays. Overlapping hotspots add.
BinIntensities build_intensities(int num_bins, double background_per_bin,
                                 std::span<const HotspotSpec> hotspots);

/// Average number of users covered by sector m (1-based) under rotation r.
double sector_lambda(const BinIntensities& bins, const Scenario& sc, Rotation r,
                     int sector);

/// Per-sector averages for all M sectors; entries always sum to the total
/// bin intensity (the coverage sets partition the bins).
std::vector<double> lambda_vector(const BinIntensities& bins, const Scenario& sc,
                                  Rotation r);

/// Sample variance (divisor M-1) of the per-sector averages.
double lambda_variance(std::span<const double> sector_lambdas);

}  // namespace flexsector
