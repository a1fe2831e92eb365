// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flexsector/scenario.hpp"
#include "flexsector/userdist.hpp"

namespace flexsector {

/// User-distribution part of a scenario file. Hotspot weights are per-bin
/// intensities; when lambda_sum is present they are treated as ratio weights
/// and rescaled so background plus hotspots total exactly lambda_sum. An
/// explicit per-bin list overrides the builder entirely.
struct UserModel {
    double background_per_bin = 0.0;
    std::vector<HotspotSpec> hotspots;  // intensity_per_bin holds the weight
    std::optional<double> lambda_sum;
    std::optional<std::vector<double>> explicit_bins;
};

struct CaseConfig {
    Scenario scenario;
    UserModel users;
};

/// Parses the flat key-value scenario format. One `key value...` pair per
/// line, `#` comments, keys named exactly after the Scenario fields plus
/// `background_intensity`, repeated `hotspot <start_bin> <span> <weight>`
/// lines, optional `lambda_sum` and optional `bin_intensities v0 v1 ...`.
CaseConfig parse_config(std::string_view text);

CaseConfig load_config(const std::string& path);

/// Canonical serialization; parse_config(serialize_config(c)) round-trips.
std::string serialize_config(const CaseConfig& cfg);

/// The configuration every tool falls back to when no file is given:
/// three sectors of ten bins, 300 antennas, 40 dBm budget, 24 GHz carrier,
/// one percent outage, 100 users split between a uniform background and
/// three hotspots with per-bin weights in ratio 1:2:4.
CaseConfig default_config();

/// Per-bin intensities implied by the config (ratio normalization applied,
/// explicit list honored). Throws when the model is inconsistent with the
/// scenario geometry or the requested totals.
BinIntensities resolve_intensities(const CaseConfig& cfg);

/// FNV-1a hash of the canonical serialization, as fixed-width hex. Every
/// experiment CSV row echoes this so outputs stay traceable to configs.
std::string scenario_hash(const CaseConfig& cfg);

}  // namespace flexsector
