// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <string>
#include <vector>

namespace flexsector {

/// Full system configuration for one flexible-sector base station.
///
/// Powers are stored in dBm exactly as they appear in configuration files;
/// use the *_watt() accessors for the linear-power values every internal
/// formula works with. Angular quantities (sector width, rotation step) are
/// always derived from the counts and never stored.
struct Scenario {
    int num_sectors = 0;             // M
    int bins_per_sector = 0;         // L
    int num_bins = 0;                // B, must equal L*M
    int total_antennas = 0;          // N
    double max_power_dbm = 0.0;      // total transmit power budget
    double max_outage = 0.0;         // allowed outage probability, in (0,1)
    double noise_power_dbm = 0.0;
    double d_min = 0.0;              // inner coverage radius [m]
    double d_max = 0.0;              // outer coverage radius [m]
    double height = 0.0;             // antenna reference height [m]
    double pathloss_exponent = 0.0;
    double carrier_freq = 0.0;       // [Hz]
    double bisection_tolerance = 0.0;  // rate search accuracy [bps/Hz]

    double sector_width() const;     // 2*pi/M
    double rotation_step() const;    // 2*pi/B
    double max_power_watt() const;
    double noise_power_watt() const;
};

/// Sector rotation: index of the bin holding the first sector edge.
/// The optimizer only searches 0..L-1; rotations of L and beyond merely
/// relabel sectors, so geometry routines accept any index in 0..B-1.
struct Rotation {
    int index = 0;
};

double dbm_to_watt(double dbm);
double watt_to_dbm(double watt);

/// Starting bin of sector m (1-based) under rotation r: r + (m-1)*L.
/// Not reduced modulo B; coverage_set applies the reduction.
int starting_bin(const Scenario& sc, Rotation r, int sector);

/// The L bin indices covered by sector m (1-based) under rotation r, in
/// ascending offset order. The M coverage sets partition {0..B-1}.
std::vector<int> coverage_set(const Scenario& sc, Rotation r, int sector);

/// Effective directional antenna gain: 2*pi/Phi = M towards covered users,
/// zero elsewhere.
double antenna_gain(const Scenario& sc, bool user_in_sector);

/// Checks every structural invariant and returns one message per violation.
/// An empty result guarantees the preconditions of all downstream modules.
std::vector<std::string> validate(const Scenario& sc);

}  // namespace flexsector
