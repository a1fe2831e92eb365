// SPDX-License-Identifier: Apache-2.0
#include "flexsector/config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace flexsector {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) tokens.emplace_back(line.substr(start, i - start));
    }
    return tokens;
}

double parse_number(const std::string& tok, const std::string& key) {
    try {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error("config: bad numeric value '" + tok + "' for key '" +
                                 key + "'");
    }
}

int parse_int(const std::string& tok, const std::string& key) {
    const double v = parse_number(tok, key);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v) {
        throw std::runtime_error("config: key '" + key + "' needs an integer, got '" +
                                 tok + "'");
    }
    return i;
}

// 17 significant digits round-trip doubles exactly.
std::string number_repr(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

}  // namespace

CaseConfig parse_config(std::string_view text) {
    CaseConfig cfg;
    std::vector<std::string> seen;
    auto mark = [&](const std::string& key) {
        for (const std::string& s : seen) {
            if (s == key) {
                throw std::runtime_error("config: duplicate key '" + key + "'");
            }
        }
        seen.push_back(key);
    };

    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const std::vector<std::string> tok = tokenize(line);
        if (tok.empty()) continue;
        const std::string& key = tok[0];
        auto need = [&](std::size_t n) {
            if (tok.size() != n + 1) {
                throw std::runtime_error("config line " + std::to_string(line_no) +
                                         ": key '" + key + "' expects " +
                                         std::to_string(n) + " value(s)");
            }
        };
        if (key == "num_sectors") { need(1); mark(key); cfg.scenario.num_sectors = parse_int(tok[1], key); }
        else if (key == "bins_per_sector") { need(1); mark(key); cfg.scenario.bins_per_sector = parse_int(tok[1], key); }
        else if (key == "num_bins") { need(1); mark(key); cfg.scenario.num_bins = parse_int(tok[1], key); }
        else if (key == "total_antennas") { need(1); mark(key); cfg.scenario.total_antennas = parse_int(tok[1], key); }
        else if (key == "max_power_dbm") { need(1); mark(key); cfg.scenario.max_power_dbm = parse_number(tok[1], key); }
        else if (key == "max_outage") { need(1); mark(key); cfg.scenario.max_outage = parse_number(tok[1], key); }
        else if (key == "noise_power_dbm") { need(1); mark(key); cfg.scenario.noise_power_dbm = parse_number(tok[1], key); }
        else if (key == "d_min") { need(1); mark(key); cfg.scenario.d_min = parse_number(tok[1], key); }
        else if (key == "d_max") { need(1); mark(key); cfg.scenario.d_max = parse_number(tok[1], key); }
        else if (key == "height") { need(1); mark(key); cfg.scenario.height = parse_number(tok[1], key); }
        else if (key == "pathloss_exponent") { need(1); mark(key); cfg.scenario.pathloss_exponent = parse_number(tok[1], key); }
        else if (key == "carrier_freq") { need(1); mark(key); cfg.scenario.carrier_freq = parse_number(tok[1], key); }
        else if (key == "bisection_tolerance") { need(1); mark(key); cfg.scenario.bisection_tolerance = parse_number(tok[1], key); }
        else if (key == "background_intensity") { need(1); mark(key); cfg.users.background_per_bin = parse_number(tok[1], key); }
        else if (key == "lambda_sum") { need(1); mark(key); cfg.users.lambda_sum = parse_number(tok[1], key); }
        else if (key == "hotspot") {
            need(3);
            HotspotSpec h;
            h.start_bin = parse_int(tok[1], key);
            h.span = parse_int(tok[2], key);
            h.intensity_per_bin = parse_number(tok[3], key);
            cfg.users.hotspots.push_back(h);
        } else if (key == "bin_intensities") {
            mark(key);
            if (tok.size() < 2) {
                throw std::runtime_error("config: bin_intensities needs values");
            }
            std::vector<double> bins;
            for (std::size_t i = 1; i < tok.size(); ++i) {
                bins.push_back(parse_number(tok[i], key));
            }
            cfg.users.explicit_bins = std::move(bins);
        } else {
            throw std::runtime_error("config line " + std::to_string(line_no) +
                                     ": unknown key '" + key + "'");
        }
    }
    return cfg;
}

CaseConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string serialize_config(const CaseConfig& cfg) {
    std::ostringstream out;
    const Scenario& sc = cfg.scenario;
    out << "num_sectors " << sc.num_sectors << '\n'
        << "bins_per_sector " << sc.bins_per_sector << '\n'
        << "num_bins " << sc.num_bins << '\n'
        << "total_antennas " << sc.total_antennas << '\n'
        << "max_power_dbm " << number_repr(sc.max_power_dbm) << '\n'
        << "max_outage " << number_repr(sc.max_outage) << '\n'
        << "noise_power_dbm " << number_repr(sc.noise_power_dbm) << '\n'
        << "d_min " << number_repr(sc.d_min) << '\n'
        << "d_max " << number_repr(sc.d_max) << '\n'
        << "height " << number_repr(sc.height) << '\n'
        << "pathloss_exponent " << number_repr(sc.pathloss_exponent) << '\n'
        << "carrier_freq " << number_repr(sc.carrier_freq) << '\n'
        << "bisection_tolerance " << number_repr(sc.bisection_tolerance) << '\n'
        << "background_intensity " << number_repr(cfg.users.background_per_bin)
        << '\n';
    if (cfg.users.lambda_sum) {
        out << "lambda_sum " << number_repr(*cfg.users.lambda_sum) << '\n';
    }
    for (const HotspotSpec& h : cfg.users.hotspots) {
        out << "hotspot " << h.start_bin << ' ' << h.span << ' '
            << number_repr(h.intensity_per_bin) << '\n';
    }
    if (cfg.users.explicit_bins) {
        out << "bin_intensities";
        for (double v : *cfg.users.explicit_bins) out << ' ' << number_repr(v);
        out << '\n';
    }
    return out.str();
}

CaseConfig default_config() {
    CaseConfig cfg;
    cfg.scenario.num_sectors = 3;
    cfg.scenario.bins_per_sector = 10;
    cfg.scenario.num_bins = 30;
    cfg.scenario.total_antennas = 300;
    cfg.scenario.max_power_dbm = 40.0;
    cfg.scenario.max_outage = 0.01;
    cfg.scenario.noise_power_dbm = -114.0;
    cfg.scenario.d_min = 20.0;
    cfg.scenario.d_max = 100.0;
    cfg.scenario.height = 20.0;
    cfg.scenario.pathloss_exponent = 2.5;
    cfg.scenario.carrier_freq = 24e9;
    cfg.scenario.bisection_tolerance = 1e-4;
    cfg.users.background_per_bin = 1.0;
    cfg.users.lambda_sum = 100.0;
    cfg.users.hotspots = {
        {0, 3, 1.0},
        {3, 4, 2.0},
        {15, 6, 4.0},
    };
    return cfg;
}

BinIntensities resolve_intensities(const CaseConfig& cfg) {
    const int num_bins = cfg.scenario.num_bins;
    if (cfg.users.explicit_bins) {
        if (static_cast<int>(cfg.users.explicit_bins->size()) != num_bins) {
            throw std::runtime_error(
                "bin_intensities length does not match num_bins");
        }
        BinIntensities bins;
        bins.lambdas = *cfg.users.explicit_bins;
        for (double v : bins.lambdas) {
            if (v < 0.0) throw std::runtime_error("bin intensities must be >= 0");
        }
        return bins;
    }
    std::vector<HotspotSpec> hotspots = cfg.users.hotspots;
    if (cfg.users.lambda_sum) {
        const double background =
            cfg.users.background_per_bin * static_cast<double>(num_bins);
        const double hotspot_mass = *cfg.users.lambda_sum - background;
        if (hotspot_mass < -1e-9) {
            throw std::runtime_error(
                "lambda_sum is smaller than the background alone");
        }
        double weight_mass = 0.0;
        for (const HotspotSpec& h : hotspots) {
            weight_mass += h.intensity_per_bin * static_cast<double>(h.span);
        }
        if (weight_mass > 0.0) {
            const double scale = std::max(0.0, hotspot_mass) / weight_mass;
            for (HotspotSpec& h : hotspots) h.intensity_per_bin *= scale;
        } else if (hotspot_mass > 1e-9) {
            throw std::runtime_error(
                "lambda_sum exceeds the background but no hotspot carries weight");
        }
    }
    return build_intensities(num_bins, cfg.users.background_per_bin, hotspots);
}

std::string scenario_hash(const CaseConfig& cfg) {
    const std::string canon = serialize_config(cfg);
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    char buf[17];
    static const char* hex = "0123456789abcdef";
    for (int i = 15; i >= 0; --i) {
        buf[i] = hex[h & 0xF];
        h >>= 4;
    }
    buf[16] = '\0';
    return std::string(buf);
}

}  // namespace flexsector
