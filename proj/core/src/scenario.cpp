// SPDX-License-Identifier: Apache-2.0
#include "flexsector/scenario.hpp"

#include <numbers>
#include <stdexcept>

namespace flexsector {

double Scenario::sector_width() const {
    return 2.0 * std::numbers::pi / static_cast<double>(num_sectors);
}

double Scenario::rotation_step() const {
    return 2.0 * std::numbers::pi / static_cast<double>(num_bins);
}

double Scenario::max_power_watt() const {
    return dbm_to_watt(max_power_dbm);
}

double Scenario::noise_power_watt() const {
    return dbm_to_watt(noise_power_dbm);
}

double dbm_to_watt(double dbm) {
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

double watt_to_dbm(double watt) {
    return 10.0 * std::log10(watt) + 30.0;
}

namespace {

void check_sector_and_rotation(const Scenario& sc, Rotation r, int sector) {
    if (sector < 1 || sector > sc.num_sectors) {
        throw std::out_of_range("sector index out of range: " + std::to_string(sector));
    }
    if (r.index < 0 || r.index >= sc.num_bins) {
        throw std::out_of_range("rotation out of range: " + std::to_string(r.index));
    }
}

}  // namespace

int starting_bin(const Scenario& sc, Rotation r, int sector) {
    check_sector_and_rotation(sc, r, sector);
    return r.index + (sector - 1) * sc.bins_per_sector;
}

std::vector<int> coverage_set(const Scenario& sc, Rotation r, int sector) {
    const int start = starting_bin(sc, r, sector);
    std::vector<int> bins(static_cast<std::size_t>(sc.bins_per_sector));
    for (int l = 0; l < sc.bins_per_sector; ++l) {
        bins[static_cast<std::size_t>(l)] = (start + l) % sc.num_bins;
    }
    return bins;
}

double antenna_gain(const Scenario& sc, bool user_in_sector) {
    if (!user_in_sector) return 0.0;
    return 2.0 * std::numbers::pi / sc.sector_width();
}

std::vector<std::string> validate(const Scenario& sc) {
    std::vector<std::string> violations;
    auto require = [&](bool ok, const std::string& msg) {
        if (!ok) violations.push_back(msg);
    };
    require(sc.num_sectors >= 1, "num_sectors must be a positive integer");
    require(sc.bins_per_sector >= 1, "bins_per_sector must be a positive integer");
    require(sc.num_bins >= 1, "num_bins must be a positive integer");
    if (sc.num_sectors >= 1 && sc.bins_per_sector >= 1) {
        require(sc.num_bins == sc.bins_per_sector * sc.num_sectors,
                "B != L*M: num_bins must equal bins_per_sector*num_sectors");
    }
    require(sc.total_antennas >= sc.num_sectors,
            "total_antennas must be at least num_sectors");
    require(sc.max_outage > 0.0 && sc.max_outage < 1.0,
            "max_outage must lie strictly inside (0,1)");
    require(sc.d_min > 0.0, "d_min must be positive");
    require(sc.d_min < sc.d_max, "d_min < d_max required");
    require(sc.height >= 0.0, "height must be non-negative");
    require(sc.pathloss_exponent > 0.0, "pathloss_exponent must be positive");
    require(sc.carrier_freq > 0.0, "carrier_freq must be positive");
    require(sc.bisection_tolerance > 0.0, "bisection_tolerance must be positive");
    return violations;
}

}  // namespace flexsector
