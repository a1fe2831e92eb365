// SPDX-License-Identifier: Apache-2.0
//
// Batch experiment runner for the flexible-sector base-station model. One
// subcommand per experiment kind; every run is deterministic for a fixed
// seed and emits a CSV whose rows carry the resolved scenario hash.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flexsector/experiments.hpp"

namespace {

flexsector::ExperimentSpec g_spec;

void add_common_options(CLI::App* cmd, std::string& schemes_csv,
                        std::string& variant, std::string& sampler) {
    cmd->add_option("--scenario", g_spec.scenario_path,
                    "Scenario file (flat key-value); omit for the built-in default");
    cmd->add_option("--out", g_spec.output_path,
                    "Output CSV path (default: <kind>.csv)");
    cmd->add_option("--seed", g_spec.seed, "Base seed for all randomness");
    cmd->add_option("--samples", g_spec.averaging_samples,
                    "Instances per sweep point")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--mc-realizations", g_spec.mc_realizations,
                    "Monte-Carlo realizations per estimate")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--schemes", schemes_csv,
                    "Comma-separated scheme list (joint,antenna_only,"
                    "rotation_only,fixed,variance_heuristic,esm)");
    cmd->add_option("--variant", variant, "Closed-form variant: paper|exact")
        ->check(CLI::IsMember({"paper", "exact"}));
    cmd->add_option("--mc-sampler", sampler,
                    "Monte-Carlo estimator: tilted|plain")
        ->check(CLI::IsMember({"tilted", "plain"}));
    cmd->add_option("--threads", g_spec.threads,
                    "Worker threads for Monte-Carlo runs (0 = all cores)");
}

std::vector<flexsector::Scheme> parse_schemes(const std::string& csv) {
    std::vector<flexsector::Scheme> out;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        const std::size_t comma = csv.find(',', pos);
        const std::string name = csv.substr(
            pos, comma == std::string::npos ? csv.size() - pos : comma - pos);
        if (!name.empty()) out.push_back(flexsector::scheme_from_name(name));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw CLI::ValidationError("--schemes", "empty scheme list");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"flexsector: flexible-sector base-station planning experiments"};
    app.require_subcommand(1);

    std::string schemes_csv;
    std::string variant = "paper";
    std::string sampler = "tilted";

    using flexsector::ExperimentKind;
    for (ExperimentKind kind :
         {ExperimentKind::validate_theorem1, ExperimentKind::case_study,
          ExperimentKind::sweep_power, ExperimentKind::sweep_antennas,
          ExperimentKind::sweep_users, ExperimentKind::sweep_sectors,
          ExperimentKind::sweep_background_ratio, ExperimentKind::sweep_hotspots,
          ExperimentKind::oracle_compare}) {
        CLI::App* cmd = app.add_subcommand(flexsector::experiment_kind_name(kind),
                                           "Run the " +
                                               flexsector::experiment_kind_name(kind) +
                                               " experiment");
        add_common_options(cmd, schemes_csv, variant, sampler);
        cmd->callback([kind]() { g_spec.kind = kind; });
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (!schemes_csv.empty()) g_spec.schemes = parse_schemes(schemes_csv);
        g_spec.variant = variant == "exact" ? flexsector::PowerVariant::exact
                                            : flexsector::PowerVariant::paper;
        g_spec.sampler = sampler == "plain" ? flexsector::McSampler::plain
                                            : flexsector::McSampler::tilted;
        if (const char* env_seed = std::getenv("FLEXSECTOR_SEED")) {
            g_spec.seed = std::strtoull(env_seed, nullptr, 10);
            std::fprintf(stderr, "seed overridden by FLEXSECTOR_SEED=%s\n",
                         env_seed);
        }
        return flexsector::run_experiment(g_spec);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
