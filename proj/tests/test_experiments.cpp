// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "flexsector/experiments.hpp"
#include "testutil.hpp"

using namespace flexsector;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string temp_path(const char* name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

int count_lines(const std::string& text) {
    int n = 0;
    for (char c : text) n += c == '\n';
    return n;
}

}  // namespace

TEST_CASE("hotspot starts are uniform, in range, and seed stable") {
    CounterRng rng(91, 0);
    CHECK(randomize_hotspot_starts(rng, 30, 0).empty());

    CounterRng a(92, 0);
    CounterRng b(92, 0);
    CHECK(randomize_hotspot_starts(a, 30, 5) == randomize_hotspot_starts(b, 30, 5));

    const int bins = 30;
    const int draws = 100'000;
    std::vector<int> hist(bins, 0);
    CounterRng c(93, 0);
    for (int i = 0; i < draws; ++i) {
        const std::vector<int> s = randomize_hotspot_starts(c, bins, 1);
        REQUIRE(s[0] >= 0);
        REQUIRE(s[0] < bins);
        ++hist[static_cast<std::size_t>(s[0])];
    }
    const double expected = static_cast<double>(draws) / bins;
    double chi2 = 0.0;
    for (int h : hist) {
        chi2 += (h - expected) * (h - expected) / expected;
    }
    CHECK(chi2 < 49.588);  // chi-square 99th percentile, 29 degrees of freedom
}

TEST_CASE("randomized instances keep the configured user mass") {
    const CaseConfig cfg = default_config();
    CounterRng rng(94, 0);
    for (int i = 0; i < 20; ++i) {
        const BinIntensities bins = randomized_instance(cfg, rng);
        CHECK(test::rel_diff(bins.total(), 100.0) < 1e-9);
    }
}

TEST_CASE("a single averaging sample reproduces the direct solve") {
    ExperimentSpec spec;
    spec.averaging_samples = 1;
    spec.schemes = {Scheme::joint};
    const std::vector<SchemeAverage> stats = average_throughput(spec);
    REQUIRE(stats.size() == 1);
    CHECK(stats[0].std_rate == 0.0);

    // Replicate the instance stream by hand.
    const CaseConfig cfg = default_config();
    CounterRng rng = CounterRng(spec.seed, 1).substream(0);
    const BinIntensities bins = randomized_instance(cfg, rng);
    const Solution sol = maximize_common_throughput(cfg.scenario, bins, Scheme::joint);
    CHECK(stats[0].mean_rate == sol.common_rate);
}

TEST_CASE("averaged schemes order as expected and respect the bound") {
    ExperimentSpec spec;
    spec.averaging_samples = 20;
    const std::vector<SchemeAverage> stats = average_throughput(spec);
    REQUIRE(stats.size() == 4);
    const double joint = stats[0].mean_rate;
    const double antenna = stats[1].mean_rate;
    const double rotation = stats[2].mean_rate;
    const double fixed = stats[3].mean_rate;
    CHECK(joint >= rotation);
    CHECK(rotation >= fixed);
    CHECK(joint >= antenna);
    CHECK(antenna >= fixed);

    const CaseConfig cfg = default_config();
    const PowerConstants pc = derive_constants(cfg.scenario);
    const double ub = throughput_upper_bound(pc, 3, 300, 100.0,
                                             cfg.scenario.max_power_watt());
    for (const SchemeAverage& s : stats) CHECK(s.mean_rate <= ub);
}

TEST_CASE("experiment CSVs are byte identical across reruns") {
    ExperimentSpec spec;
    spec.kind = ExperimentKind::sweep_power;
    spec.schemes = {Scheme::joint, Scheme::fixed};
    spec.output_path = temp_path("flexsector_sweep_a.csv");
    REQUIRE(run_experiment(spec) == 0);
    const std::string first = slurp(spec.output_path);

    spec.output_path = temp_path("flexsector_sweep_b.csv");
    REQUIRE(run_experiment(spec) == 0);
    CHECK(slurp(spec.output_path) == first);

    // 9 budget points x 2 schemes + header.
    CHECK(count_lines(first) == 9 * 2 + 1);
    CHECK(first.rfind("max_power_dbm,scheme,R_star,", 0) == 0);
}

TEST_CASE("theorem validation table has the full grid") {
    ExperimentSpec spec;
    spec.kind = ExperimentKind::validate_theorem1;
    spec.mc_realizations = 2000;  // smoke-test scale
    spec.output_path = temp_path("flexsector_thm1.csv");
    REQUIRE(run_experiment(spec) == 0);
    const std::string csv = slurp(spec.output_path);
    CHECK(count_lines(csv) == 6 * 3 + 1);
    CHECK(csv.rfind("lambda_m,n_m,rate,estimate,stderr,closed_form_paper,"
                    "closed_form_exact,scenario_hash",
                    0) == 0);
}

TEST_CASE("case study emits the headline quantities") {
    ExperimentSpec spec;
    spec.kind = ExperimentKind::case_study;
    spec.schemes = {Scheme::joint};
    spec.output_path = temp_path("flexsector_case.csv");
    REQUIRE(run_experiment(spec) == 0);
    const std::string csv = slurp(spec.output_path);
    CHECK(csv.find("lambda_at_r0,32;50;18") != std::string::npos);
    CHECK(csv.find("variance_at_r0,257.333333333") != std::string::npos);
    CHECK(csv.find("joint.r_star,") != std::string::npos);
    CHECK(csv.find("joint.n_star,") != std::string::npos);
    CHECK(csv.find("scenario_hash,") != std::string::npos);
}

TEST_CASE("hotspot sweep walks the hotspot counts at fixed user mass") {
    ExperimentSpec spec;
    spec.kind = ExperimentKind::sweep_hotspots;
    spec.scenario_path = std::string(FLEXSECTOR_SOURCE_DIR) +
                         "/scenarios/hotspot_sweep.cfg";
    spec.averaging_samples = 3;
    spec.schemes = {Scheme::rotation_only};
    spec.output_path = temp_path("flexsector_hot.csv");
    REQUIRE(run_experiment(spec) == 0);
    const std::string csv = slurp(spec.output_path);
    CHECK(count_lines(csv) == 9 + 1);
    CHECK(csv.find("\n0,rotation_only,") != std::string::npos);
    CHECK(csv.find("\n8,rotation_only,") != std::string::npos);
}

TEST_CASE("oracle comparison emits one row per instance") {
    ExperimentSpec spec;
    spec.kind = ExperimentKind::oracle_compare;
    spec.averaging_samples = 3;
    spec.output_path = temp_path("flexsector_oracle.csv");
    REQUIRE(run_experiment(spec) == 0);
    CHECK(count_lines(slurp(spec.output_path)) == 3 + 1);
}

TEST_CASE("unreadable configs fail with a status, not a crash") {
    ExperimentSpec spec;
    spec.kind = ExperimentKind::case_study;
    spec.scenario_path = "/nonexistent/file.cfg";
    CHECK(run_experiment(spec) == 2);

    ExperimentSpec bad;
    bad.kind = ExperimentKind::case_study;
    bad.averaging_samples = 0;
    CHECK(run_experiment(bad) == 2);
}

TEST_CASE("experiment kind names round trip") {
    for (ExperimentKind k :
         {ExperimentKind::validate_theorem1, ExperimentKind::case_study,
          ExperimentKind::sweep_power, ExperimentKind::sweep_antennas,
          ExperimentKind::sweep_users, ExperimentKind::sweep_sectors,
          ExperimentKind::sweep_background_ratio, ExperimentKind::sweep_hotspots,
          ExperimentKind::oracle_compare}) {
        CHECK(experiment_kind_from_name(experiment_kind_name(k)) == k);
    }
    CHECK_THROWS(experiment_kind_from_name("nope"));
}
