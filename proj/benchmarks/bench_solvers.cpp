// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "flexsector/config.hpp"
#include "flexsector/experiments.hpp"
#include "flexsector/montecarlo.hpp"
#include "flexsector/optimizer.hpp"

using namespace flexsector;

namespace {

BinIntensities reference_bins() {
    return resolve_intensities(default_config());
}

void BM_MinPowerJoint(benchmark::State& state) {
    const Scenario sc = default_config().scenario;
    const BinIntensities bins = reference_bins();
    const RateTarget target = RateTarget::from_rate(0.3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            min_power_for_rate(sc, bins, target, Scheme::joint));
    }
}
BENCHMARK(BM_MinPowerJoint);

void BM_MinPowerVarianceHeuristic(benchmark::State& state) {
    const Scenario sc = default_config().scenario;
    const BinIntensities bins = reference_bins();
    const RateTarget target = RateTarget::from_rate(0.3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(low_complexity_min_power(sc, bins, target));
    }
}
BENCHMARK(BM_MinPowerVarianceHeuristic);

void BM_MaximizeThroughput(benchmark::State& state) {
    const Scenario sc = default_config().scenario;
    const BinIntensities bins = reference_bins();
    const Scheme scheme = static_cast<Scheme>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(maximize_common_throughput(sc, bins, scheme));
    }
}
BENCHMARK(BM_MaximizeThroughput)
    ->Arg(static_cast<int>(Scheme::joint))
    ->Arg(static_cast<int>(Scheme::rotation_only))
    ->Arg(static_cast<int>(Scheme::fixed))
    ->Arg(static_cast<int>(Scheme::variance_heuristic));

void BM_EsmSmall(benchmark::State& state) {
    Scenario sc = default_config().scenario;
    sc.total_antennas = static_cast<int>(state.range(0));
    sc.bins_per_sector = 4;
    sc.num_bins = 12;
    CounterRng rng(1, 0);
    BinIntensities bins;
    bins.lambdas.resize(12);
    for (double& v : bins.lambdas) v = 2.0 * rng.next_uniform();
    const RateTarget target = RateTarget::from_rate(0.3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(esm_oracle(sc, bins, target));
    }
}
BENCHMARK(BM_EsmSmall)->Arg(12)->Arg(24)->Arg(48);

void BM_McSectorPowerTilted(benchmark::State& state) {
    const Scenario sc = default_config().scenario;
    const RateTarget target = RateTarget::from_rate(0.7);
    MCConfig cfg;
    cfg.realizations = state.range(0);
    cfg.seed = 7;
    cfg.threads = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            mc_sector_avg_power_tilted(sc, 20.0, 100, target, cfg));
    }
    state.SetItemsProcessed(state.iterations() * cfg.realizations);
}
BENCHMARK(BM_McSectorPowerTilted)->Arg(10000)->Arg(100000);

void BM_McOutage(benchmark::State& state) {
    const Scenario sc = default_config().scenario;
    MCConfig cfg;
    cfg.realizations = state.range(0);
    cfg.seed = 9;
    cfg.threads = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mc_outage_probability(
            sc, 4, 100, 60.0, RateTarget::from_rate(0.7), cfg));
    }
    state.SetItemsProcessed(state.iterations() * cfg.realizations);
}
BENCHMARK(BM_McOutage)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
