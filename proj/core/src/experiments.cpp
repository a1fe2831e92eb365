// SPDX-License-Identifier: Apache-2.0
#include "flexsector/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "flexsector/csv.hpp"
#include "flexsector/idealized.hpp"

namespace flexsector {

std::string experiment_kind_name(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::validate_theorem1: return "validate_theorem1";
        case ExperimentKind::case_study: return "case_study";
        case ExperimentKind::sweep_power: return "sweep_power";
        case ExperimentKind::sweep_antennas: return "sweep_antennas";
        case ExperimentKind::sweep_users: return "sweep_users";
        case ExperimentKind::sweep_sectors: return "sweep_sectors";
        case ExperimentKind::sweep_background_ratio: return "sweep_background_ratio";
        case ExperimentKind::sweep_hotspots: return "sweep_hotspots";
        case ExperimentKind::oracle_compare: return "oracle_compare";
    }
    throw std::invalid_argument("unknown experiment kind");
}

ExperimentKind experiment_kind_from_name(const std::string& name) {
    for (ExperimentKind k :
         {ExperimentKind::validate_theorem1, ExperimentKind::case_study,
          ExperimentKind::sweep_power, ExperimentKind::sweep_antennas,
          ExperimentKind::sweep_users, ExperimentKind::sweep_sectors,
          ExperimentKind::sweep_background_ratio, ExperimentKind::sweep_hotspots,
          ExperimentKind::oracle_compare}) {
        if (experiment_kind_name(k) == name) return k;
    }
    throw std::invalid_argument("unknown experiment kind: " + name);
}

CaseConfig load_spec_config(const ExperimentSpec& spec) {
    if (spec.scenario_path.empty()) return default_config();
    return load_config(spec.scenario_path);
}

std::vector<int> randomize_hotspot_starts(CounterRng& rng, int num_bins,
                                          int num_hotspots) {
    if (num_bins < 1) throw std::invalid_argument("num_bins must be positive");
    if (num_hotspots < 0) throw std::invalid_argument("negative hotspot count");
    std::vector<int> starts(static_cast<std::size_t>(num_hotspots));
    for (int& s : starts) {
        s = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(num_bins)));
    }
    return starts;
}

BinIntensities randomized_instance(const CaseConfig& cfg, CounterRng& rng) {
    CaseConfig inst = cfg;
    const std::vector<int> starts = randomize_hotspot_starts(
        rng, cfg.scenario.num_bins, static_cast<int>(cfg.users.hotspots.size()));
    for (std::size_t i = 0; i < starts.size(); ++i) {
        inst.users.hotspots[i].start_bin = starts[i];
    }
    return resolve_intensities(inst);
}

namespace {

std::string join_ints(const std::vector<int>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ';';
        out << v[i];
    }
    return out.str();
}

std::string join_doubles(const std::vector<double>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ';';
        out << csv_number(v[i]);
    }
    return out.str();
}

std::string default_output(const ExperimentSpec& spec) {
    return spec.output_path.empty() ? experiment_kind_name(spec.kind) + ".csv"
                                    : spec.output_path;
}

// Per-scheme averages over `samples` instances of `cfg` with randomized
// hotspot starts. All schemes see the same instance set so comparisons are
// paired.
std::vector<SchemeAverage> averaged_point(const CaseConfig& cfg,
                                          const std::vector<Scheme>& schemes,
                                          int samples, const CounterRng& base,
                                          PowerVariant variant) {
    std::vector<std::vector<double>> rates(schemes.size());
    std::vector<SchemeAverage> out(schemes.size());
    for (std::size_t s = 0; s < schemes.size(); ++s) {
        out[s].scheme = schemes[s];
        rates[s].reserve(static_cast<std::size_t>(samples));
    }
    for (int i = 0; i < samples; ++i) {
        CounterRng rng = base.substream(static_cast<std::uint64_t>(i));
        const BinIntensities bins = randomized_instance(cfg, rng);
        for (std::size_t s = 0; s < schemes.size(); ++s) {
            const Solution sol =
                maximize_common_throughput(cfg.scenario, bins, schemes[s], variant);
            rates[s].push_back(sol.common_rate);
            out[s].mean_power_watt += sol.total_power_watt;
            if (sol.budget_infeasible) ++out[s].infeasible_count;
        }
    }
    for (std::size_t s = 0; s < schemes.size(); ++s) {
        double mean = 0.0;
        for (double r : rates[s]) mean += r;
        mean /= static_cast<double>(samples);
        double ss = 0.0;
        for (double r : rates[s]) ss += (r - mean) * (r - mean);
        out[s].mean_rate = mean;
        out[s].std_rate =
            samples > 1 ? std::sqrt(ss / static_cast<double>(samples - 1)) : 0.0;
        out[s].mean_power_watt /= static_cast<double>(samples);
    }
    return out;
}

void require_valid(const Scenario& sc) {
    const std::vector<std::string> violations = validate(sc);
    if (!violations.empty()) {
        std::string msg = "invalid scenario:";
        for (const std::string& v : violations) msg += "\n  " + v;
        throw std::runtime_error(msg);
    }
}

double upper_bound_for(const CaseConfig& cfg, double lambda_sum) {
    const PowerConstants pc = derive_constants(cfg.scenario);
    return throughput_upper_bound(pc, cfg.scenario.num_sectors,
                                  cfg.scenario.total_antennas, lambda_sum,
                                  cfg.scenario.max_power_watt());
}

void run_validate_theorem1(const ExperimentSpec& spec, const CaseConfig& cfg,
                           const std::string& out_path) {
    const std::vector<double> lambda_grid = {5, 10, 15, 20, 25, 30};
    const std::vector<int> antenna_grid = {60, 100, 140};
    const RateTarget target = RateTarget::from_rate(0.7);
    const PowerConstants pc = derive_constants(cfg.scenario);
    const std::string hash = scenario_hash(cfg);

    CsvWriter csv(out_path,
                  {"lambda_m", "n_m", "rate", "estimate", "stderr",
                   "closed_form_paper", "closed_form_exact", "scenario_hash"});
    int cell = 0;
    for (double lambda : lambda_grid) {
        for (int n_m : antenna_grid) {
            MCConfig mc;
            mc.realizations = spec.mc_realizations;
            mc.seed = spec.seed;
            mc.stream_id = 1000 + static_cast<std::uint64_t>(cell++);
            mc.threads = spec.threads;
            const MCEstimate est =
                spec.sampler == McSampler::tilted
                    ? mc_sector_avg_power_tilted(cfg.scenario, lambda, n_m, target, mc)
                    : mc_sector_avg_power(cfg.scenario, lambda, n_m, target, mc);
            const double paper = sector_avg_power(pc, cfg.scenario.num_sectors, n_m,
                                                  lambda, target,
                                                  PowerVariant::paper);
            const double exact = sector_avg_power(pc, cfg.scenario.num_sectors, n_m,
                                                  lambda, target,
                                                  PowerVariant::exact);
            csv.row({csv_number(lambda), csv_number(n_m), csv_number(target.rate),
                     csv_number(est.mean), csv_number(est.std_error),
                     csv_number(paper), csv_number(exact), hash});
        }
    }
}

void run_case_study(const ExperimentSpec& spec, const CaseConfig& cfg,
                    const std::string& out_path) {
    const BinIntensities bins = resolve_intensities(cfg);
    const std::string hash = scenario_hash(cfg);
    const std::vector<double> at_zero =
        lambda_vector(bins, cfg.scenario, Rotation{0});

    CsvWriter csv(out_path, {"key", "value"});
    csv.row({"scenario_hash", hash});
    csv.row({"lambda_sum", csv_number(bins.total())});
    csv.row({"lambda_at_r0", join_doubles(at_zero)});
    csv.row({"variance_at_r0", csv_number(lambda_variance(at_zero))});
    csv.row({"upper_bound", csv_number(upper_bound_for(cfg, bins.total()))});

    std::cout << "case study (scenario " << hash << ")\n";
    std::cout << "  lambda(0) = " << join_doubles(at_zero)
              << "  variance = " << csv_number(lambda_variance(at_zero)) << "\n";
    for (Scheme scheme : spec.schemes) {
        const Solution sol =
            maximize_common_throughput(cfg.scenario, bins, scheme, spec.variant);
        const std::string name = scheme_name(scheme);
        csv.row({name + ".r_star", csv_number(sol.r_star.index)});
        csv.row({name + ".R_star", csv_number(sol.common_rate)});
        csv.row({name + ".power_watt", csv_number(sol.total_power_watt)});
        csv.row({name + ".n_star", join_ints(sol.n_star.counts)});
        csv.row({name + ".lambda_at_r", join_doubles(sol.lambda_at_r)});
        csv.row({name + ".variance_at_r", csv_number(lambda_variance(sol.lambda_at_r))});
        csv.row({name + ".iterations", csv_number(sol.iterations)});
        csv.row({name + ".unused_antennas", csv_number(sol.unused_antennas)});
        csv.row({name + ".infeasible", sol.budget_infeasible ? "1" : "0"});
        std::cout << "  " << name << ": r*=" << sol.r_star.index
                  << " R*=" << csv_number(sol.common_rate)
                  << " n*=" << join_ints(sol.n_star.counts)
                  << " lambda(r*)=" << join_doubles(sol.lambda_at_r)
                  << " var=" << csv_number(lambda_variance(sol.lambda_at_r)) << "\n";
    }
}

void run_sweep_power(const ExperimentSpec& spec, const CaseConfig& cfg,
                     const std::string& out_path) {
    const std::vector<double> grid = {30, 32, 34, 36, 38, 40, 42, 44, 46};
    const BinIntensities bins = resolve_intensities(cfg);
    const std::string hash = scenario_hash(cfg);
    CsvWriter csv(out_path,
                  {"max_power_dbm", "scheme", "R_star", "upper_bound", "r_star",
                   "power_watt", "iterations", "infeasible", "scenario_hash"});
    for (double dbm : grid) {
        CaseConfig point = cfg;
        point.scenario.max_power_dbm = dbm;
        for (Scheme scheme : spec.schemes) {
            const Solution sol = maximize_common_throughput(point.scenario, bins,
                                                            scheme, spec.variant);
            csv.row({csv_number(dbm), scheme_name(scheme),
                     csv_number(sol.common_rate),
                     csv_number(upper_bound_for(point, bins.total())),
                     csv_number(sol.r_star.index),
                     csv_number(sol.total_power_watt), csv_number(sol.iterations),
                     sol.budget_infeasible ? "1" : "0", hash});
        }
    }
}

void write_averaged_rows(CsvWriter& csv, double x, const CaseConfig& point,
                         const ExperimentSpec& spec, const CounterRng& base,
                         const std::string& hash) {
    require_valid(point.scenario);
    const std::vector<SchemeAverage> stats = averaged_point(
        point, spec.schemes, spec.averaging_samples, base, spec.variant);
    const BinIntensities probe = resolve_intensities(point);
    const double ub = upper_bound_for(point, probe.total());
    for (const SchemeAverage& s : stats) {
        csv.row({csv_number(x), scheme_name(s.scheme), csv_number(spec.averaging_samples),
                 csv_number(s.mean_rate), csv_number(s.std_rate),
                 csv_number(s.mean_power_watt), csv_number(ub),
                 csv_number(s.infeasible_count), hash});
    }
}

constexpr std::initializer_list<const char*> kAveragedHeader = {
    "x",         "scheme",          "samples",     "mean_R_star",
    "std_R_star", "mean_power_watt", "upper_bound", "infeasible_count",
    "scenario_hash"};

void run_sweep_antennas(const ExperimentSpec& spec, const CaseConfig& cfg,
                        const std::string& out_path) {
    const std::vector<int> grid = {60, 120, 180, 240, 300, 360};
    const std::string hash = scenario_hash(cfg);
    const CounterRng base(spec.seed, 2);
    CsvWriter csv(out_path, kAveragedHeader);
    int idx = 0;
    for (int n : grid) {
        CaseConfig point = cfg;
        point.scenario.total_antennas = n;
        write_averaged_rows(csv, n, point, spec,
                            base.substream(static_cast<std::uint64_t>(idx++)), hash);
    }
}

void run_sweep_users(const ExperimentSpec& spec, const CaseConfig& cfg,
                     const std::string& out_path) {
    const std::vector<double> grid = {40, 60, 80, 100, 120, 140};
    const std::string hash = scenario_hash(cfg);
    const CounterRng base(spec.seed, 3);
    CsvWriter csv(out_path, kAveragedHeader);
    int idx = 0;
    for (double lambda_sum : grid) {
        CaseConfig point = cfg;
        if (point.users.explicit_bins) {
            double total = 0.0;
            for (double v : *point.users.explicit_bins) total += v;
            if (total <= 0.0) throw std::runtime_error("explicit bins sum to zero");
            for (double& v : *point.users.explicit_bins) v *= lambda_sum / total;
        } else {
            point.users.lambda_sum = lambda_sum;
        }
        write_averaged_rows(csv, lambda_sum, point, spec,
                            base.substream(static_cast<std::uint64_t>(idx++)), hash);
    }
}

void run_sweep_sectors(const ExperimentSpec& spec, const CaseConfig& cfg,
                       const std::string& out_path) {
    constexpr int kBins = 60;  // shared bin count keeps the rotation step fixed
    const std::vector<int> grid = {2, 3, 4, 5, 6};
    const std::string hash = scenario_hash(cfg);
    const CounterRng base(spec.seed, 4);
    CsvWriter csv(out_path, kAveragedHeader);
    int idx = 0;
    for (int m : grid) {
        CaseConfig point = cfg;
        point.scenario.num_sectors = m;
        point.scenario.num_bins = kBins;
        point.scenario.bins_per_sector = kBins / m;
        point.users.explicit_bins.reset();
        write_averaged_rows(csv, m, point, spec,
                            base.substream(static_cast<std::uint64_t>(idx++)), hash);
    }
}

void run_sweep_background_ratio(const ExperimentSpec& spec, const CaseConfig& cfg,
                                const std::string& out_path) {
    const std::vector<double> grid = {0.1, 0.2, 0.3, 0.4, 0.5,
                                      0.6, 0.7, 0.8, 0.9, 1.0};
    const double lambda_sum = cfg.users.lambda_sum.value_or(100.0);
    const std::string hash = scenario_hash(cfg);
    const CounterRng base(spec.seed, 5);
    CsvWriter csv(out_path, kAveragedHeader);
    int idx = 0;
    for (double ratio : grid) {
        CaseConfig point = cfg;
        point.users.explicit_bins.reset();
        point.users.lambda_sum = lambda_sum;
        point.users.background_per_bin =
            ratio * lambda_sum / static_cast<double>(cfg.scenario.num_bins);
        write_averaged_rows(csv, ratio, point, spec,
                            base.substream(static_cast<std::uint64_t>(idx++)), hash);
    }
}

void run_sweep_hotspots(const ExperimentSpec& spec, const CaseConfig& cfg,
                        const std::string& out_path) {
    const std::vector<int> grid = {0, 1, 2, 3, 4, 5, 6, 7, 8};
    const double lambda_sum = cfg.users.lambda_sum.value_or(100.0);
    const std::string hash = scenario_hash(cfg);
    const CounterRng base(spec.seed, 6);
    CsvWriter csv(out_path, kAveragedHeader);
    int idx = 0;
    for (int n_hot : grid) {
        // Fixed total user load: per-bin hotspot weight stays at twice the
        // background, so the background shrinks as hotspots are added.
        CaseConfig point = cfg;
        point.users.explicit_bins.reset();
        point.users.lambda_sum.reset();
        const double bg = lambda_sum / (static_cast<double>(cfg.scenario.num_bins) +
                                        2.0 * static_cast<double>(n_hot));
        point.users.background_per_bin = bg;
        point.users.hotspots.assign(static_cast<std::size_t>(n_hot),
                                    HotspotSpec{0, 1, 2.0 * bg});
        write_averaged_rows(csv, n_hot, point, spec,
                            base.substream(static_cast<std::uint64_t>(idx++)), hash);
    }
}

void run_oracle_compare(const ExperimentSpec& spec, const CaseConfig& cfg,
                        const std::string& out_path) {
    const std::string hash = scenario_hash(cfg);
    const CounterRng base(spec.seed, 7);
    CsvWriter csv(out_path,
                  {"instance", "total_antennas", "bins_per_sector", "rate_target",
                   "power_twostep_watt", "power_esm_watt", "power_gap_pct",
                   "rate_joint", "rate_esm", "rate_diff", "scenario_hash"});
    for (int i = 0; i < spec.averaging_samples; ++i) {
        CounterRng rng = base.substream(static_cast<std::uint64_t>(i));
        CaseConfig inst = cfg;
        inst.scenario.num_sectors = 3;
        inst.scenario.total_antennas = 3 + static_cast<int>(rng.next_below(10));
        inst.scenario.bins_per_sector = 1 + static_cast<int>(rng.next_below(4));
        inst.scenario.num_bins = 3 * inst.scenario.bins_per_sector;
        BinIntensities bins;
        bins.lambdas.resize(static_cast<std::size_t>(inst.scenario.num_bins));
        for (double& v : bins.lambdas) v = 1.5 * rng.next_uniform();

        const PowerConstants pc = derive_constants(inst.scenario);
        const double ub =
            throughput_upper_bound(pc, 3, inst.scenario.total_antennas,
                                   bins.total(), inst.scenario.max_power_watt());
        const RateTarget target = RateTarget::from_rate(0.5 * ub);
        const MinPowerResult two_step = min_power_for_rate(
            inst.scenario, bins, target, Scheme::joint, spec.variant);
        const EsmResult esm = esm_oracle(inst.scenario, bins, target, spec.variant);
        const Solution joint = maximize_common_throughput(inst.scenario, bins,
                                                          Scheme::joint,
                                                          spec.variant);
        const Solution via_esm = maximize_common_throughput(inst.scenario, bins,
                                                            Scheme::esm,
                                                            spec.variant);
        const double gap_pct = 100.0 *
                               (two_step.total_power_watt - esm.total_power_watt) /
                               esm.total_power_watt;
        csv.row({csv_number(i), csv_number(inst.scenario.total_antennas),
                 csv_number(inst.scenario.bins_per_sector), csv_number(target.rate),
                 csv_number(two_step.total_power_watt),
                 csv_number(esm.total_power_watt), csv_number(gap_pct),
                 csv_number(joint.common_rate), csv_number(via_esm.common_rate),
                 csv_number(joint.common_rate - via_esm.common_rate), hash});
    }
}

}  // namespace

std::vector<SchemeAverage> average_throughput(const ExperimentSpec& spec) {
    const CaseConfig cfg = load_spec_config(spec);
    require_valid(cfg.scenario);
    const CounterRng base(spec.seed, 1);
    return averaged_point(cfg, spec.schemes, spec.averaging_samples, base,
                          spec.variant);
}

int run_experiment(const ExperimentSpec& spec) {
    try {
        if (spec.averaging_samples < 1) {
            throw std::invalid_argument("averaging_samples must be at least 1");
        }
        const CaseConfig cfg = load_spec_config(spec);
        require_valid(cfg.scenario);
        const std::string out_path = default_output(spec);
        switch (spec.kind) {
            case ExperimentKind::validate_theorem1:
                run_validate_theorem1(spec, cfg, out_path);
                break;
            case ExperimentKind::case_study:
                run_case_study(spec, cfg, out_path);
                break;
            case ExperimentKind::sweep_power:
                run_sweep_power(spec, cfg, out_path);
                break;
            case ExperimentKind::sweep_antennas:
                run_sweep_antennas(spec, cfg, out_path);
                break;
            case ExperimentKind::sweep_users:
                run_sweep_users(spec, cfg, out_path);
                break;
            case ExperimentKind::sweep_sectors:
                run_sweep_sectors(spec, cfg, out_path);
                break;
            case ExperimentKind::sweep_background_ratio:
                run_sweep_background_ratio(spec, cfg, out_path);
                break;
            case ExperimentKind::sweep_hotspots:
                run_sweep_hotspots(spec, cfg, out_path);
                break;
            case ExperimentKind::oracle_compare:
                run_oracle_compare(spec, cfg, out_path);
                break;
        }
        std::fprintf(stderr, "[%s] wrote %s (seed %llu)\n",
                     experiment_kind_name(spec.kind).c_str(), out_path.c_str(),
                     static_cast<unsigned long long>(spec.seed));
        return 0;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}

}  // namespace flexsector
