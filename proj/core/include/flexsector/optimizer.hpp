// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "flexsector/powermodel.hpp"
#include "flexsector/scenario.hpp"
#include "flexsector/userdist.hpp"

namespace flexsector {

/// Integer antenna counts per sector. Entries are at least one each and sum
/// to at most the total budget.
struct AntennaAllocation {
    std::vector<int> counts;

    int total() const;
};

enum class Scheme {
    joint,               // rotation search + antenna allocation
    antenna_only,        // allocation at fixed rotation 0
    rotation_only,       // rotation search at fixed equal allocation
    fixed,               // rotation 0, equal allocation
    variance_heuristic,  // variance-minimizing rotation, allocation once
    esm,                 // exhaustive search over rotations and allocations
};

std::string scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);

/// Result of one throughput maximization run.
struct Solution {
    Rotation r_star{};
    AntennaAllocation n_star;
    double common_rate = 0.0;        // [bps/Hz]
    double total_power_watt = 0.0;   // power of the returned solution
    std::vector<double> lambda_at_r; // per-sector averages at r_star
    int iterations = 0;              // bisection steps taken
    Scheme scheme = Scheme::joint;
    bool budget_infeasible = false;  // power floor at zero rate already exceeds budget
    int unused_antennas = 0;         // left over by the integer allocation
    std::vector<int> empty_sectors;  // 1-based sectors with zero average users
};

/// Continuous antenna split: each sector receives a share of N proportional
/// to exp(snr/2 * lambda_m). Evaluated in log space (max exponent subtracted)
/// so widely spread lambdas cannot overflow.
std::vector<double> continuous_allocation(std::span<const double> lambdas, int total_antennas,
                                          double snr);

/// Integer antenna split: one antenna per sector up front, then the floor of
/// the continuous shares of the remaining N-M. Up to M-1 antennas can stay
/// unallocated; they are not redistributed.
AntennaAllocation integer_allocation(std::span<const double> lambdas, int total_antennas,
                                     int num_sectors, double snr);

/// One power-minimizing subproblem solve at a fixed rate target.
struct MinPowerResult {
    Rotation r{};
    AntennaAllocation allocation;
    double total_power_watt = 0.0;
    std::vector<double> lambdas;
};

/// Minimum total power to hit `target`, per scheme. Rotation ties break
/// towards the smallest index so runs are deterministic.
MinPowerResult min_power_for_rate(const Scenario& sc, const BinIntensities& bins,
                                  RateTarget target, Scheme scheme,
                                  PowerVariant variant = PowerVariant::paper);

/// Bisection search for the maximum common throughput under the power budget.
/// Accepts any scheme, including the variance heuristic and the exhaustive
/// oracle as feasibility solvers.
Solution maximize_common_throughput(const Scenario& sc, const BinIntensities& bins,
                                    Scheme scheme,
                                    PowerVariant variant = PowerVariant::paper);

/// Rotation minimizing the sample variance of the per-sector user averages;
/// ties break towards the smallest rotation.
Rotation variance_min_rotation(const Scenario& sc, const BinIntensities& bins);

/// Variance-minimizing rotation followed by a single allocation and power
/// evaluation at that rotation.
MinPowerResult low_complexity_min_power(const Scenario& sc, const BinIntensities& bins,
                                        RateTarget target,
                                        PowerVariant variant = PowerVariant::paper);

/// Exhaustive search over every rotation and every composition of N into M
/// positive integer parts.
struct EsmResult {
    Rotation r{};
    AntennaAllocation allocation;
    double total_power_watt = 0.0;
    std::vector<double> lambdas;
    std::uint64_t evaluated = 0;  // compositions evaluated across rotations
};

/// Number of compositions of N antennas into M positive sector counts,
/// i.e. C(N-1, M-1). Saturates at the uint64 maximum.
std::uint64_t composition_count(int total_antennas, int num_sectors);

EsmResult esm_oracle(const Scenario& sc, const BinIntensities& bins, RateTarget target,
                     PowerVariant variant = PowerVariant::paper,
                     std::uint64_t combination_cap = 10'000'000);

}  // namespace flexsector
