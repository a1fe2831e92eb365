// SPDX-License-Identifier: Apache-2.0
#include "flexsector/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace flexsector {

int AntennaAllocation::total() const {
    return std::accumulate(counts.begin(), counts.end(), 0);
}

std::string scheme_name(Scheme s) {
    switch (s) {
        case Scheme::joint: return "joint";
        case Scheme::antenna_only: return "antenna_only";
        case Scheme::rotation_only: return "rotation_only";
        case Scheme::fixed: return "fixed";
        case Scheme::variance_heuristic: return "variance_heuristic";
        case Scheme::esm: return "esm";
    }
    throw std::invalid_argument("unknown scheme");
}

Scheme scheme_from_name(const std::string& name) {
    for (Scheme s : {Scheme::joint, Scheme::antenna_only, Scheme::rotation_only,
                     Scheme::fixed, Scheme::variance_heuristic, Scheme::esm}) {
        if (scheme_name(s) == name) return s;
    }
    throw std::invalid_argument("unknown scheme: " + name);
}

std::vector<double> continuous_allocation(std::span<const double> lambdas,
                                          int total_antennas, double snr) {
    if (total_antennas < 1) throw std::invalid_argument("need at least one antenna");
    if (snr < 0.0) throw std::invalid_argument("snr must be non-negative");
    const std::size_t m = lambdas.size();
    if (m == 0) throw std::invalid_argument("empty lambda vector");
    std::vector<double> weight(m);
    double max_exp = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
        weight[i] = 0.5 * snr * lambdas[i];
        max_exp = std::max(max_exp, weight[i]);
    }
    double denom = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        weight[i] = std::exp(weight[i] - max_exp);
        denom += weight[i];
    }
    std::vector<double> shares(m);
    for (std::size_t i = 0; i < m; ++i) {
        shares[i] = static_cast<double>(total_antennas) * weight[i] / denom;
    }
    return shares;
}

namespace {

// Floor with a one-nanounit nudge: shares that are exact integers in real
// arithmetic (equal lambdas) must not lose an antenna to representation
// error. The nudge cannot push the total above budget because the continuous
// shares sum to the distributed count exactly.
int floor_share(double x) {
    return static_cast<int>(std::floor(x + 1e-9));
}

std::vector<int> equal_allocation(int total_antennas, int num_sectors) {
    return std::vector<int>(static_cast<std::size_t>(num_sectors),
                            total_antennas / num_sectors);
}

}  // namespace

AntennaAllocation integer_allocation(std::span<const double> lambdas,
                                     int total_antennas, int num_sectors,
                                     double snr) {
    if (lambdas.size() != static_cast<std::size_t>(num_sectors)) {
        throw std::invalid_argument("lambda vector length must equal num_sectors");
    }
    if (total_antennas < num_sectors) {
        throw std::invalid_argument("need at least one antenna per sector");
    }
    const std::vector<double> shares =
        continuous_allocation(lambdas, total_antennas - num_sectors, snr);
    AntennaAllocation alloc;
    alloc.counts.resize(static_cast<std::size_t>(num_sectors));
    for (std::size_t i = 0; i < shares.size(); ++i) {
        alloc.counts[i] = 1 + floor_share(shares[i]);
    }
    return alloc;
}

namespace {

MinPowerResult evaluate_rotation(const Scenario& sc, const PowerConstants& pc,
                                 const BinIntensities& bins, RateTarget target,
                                 PowerVariant variant, Rotation r,
                                 bool optimize_allocation) {
    MinPowerResult res;
    res.r = r;
    res.lambdas = lambda_vector(bins, sc, r);
    if (optimize_allocation) {
        res.allocation = integer_allocation(res.lambdas, sc.total_antennas,
                                            sc.num_sectors, target.snr);
    } else {
        res.allocation.counts = equal_allocation(sc.total_antennas, sc.num_sectors);
    }
    res.total_power_watt = total_power(pc, sc.num_sectors, res.allocation.counts,
                                       res.lambdas, target, variant);
    return res;
}

}  // namespace

MinPowerResult min_power_for_rate(const Scenario& sc, const BinIntensities& bins,
                                  RateTarget target, Scheme scheme,
                                  PowerVariant variant) {
    if (scheme == Scheme::variance_heuristic) {
        return low_complexity_min_power(sc, bins, target, variant);
    }
    if (scheme == Scheme::esm) {
        const EsmResult esm = esm_oracle(sc, bins, target, variant);
        return MinPowerResult{esm.r, esm.allocation, esm.total_power_watt,
                              esm.lambdas};
    }

    const bool search_rotation =
        scheme == Scheme::joint || scheme == Scheme::rotation_only;
    const bool optimize_allocation =
        scheme == Scheme::joint || scheme == Scheme::antenna_only;
    const PowerConstants pc = derive_constants(sc);
    MinPowerResult best;
    bool have_best = false;
    const int rotations = search_rotation ? sc.bins_per_sector : 1;
    for (int r = 0; r < rotations; ++r) {
        MinPowerResult cur = evaluate_rotation(sc, pc, bins, target, variant,
                                               Rotation{r}, optimize_allocation);
        if (!have_best || cur.total_power_watt < best.total_power_watt) {
            best = std::move(cur);
            have_best = true;
        }
    }
    return best;
}

Rotation variance_min_rotation(const Scenario& sc, const BinIntensities& bins) {
    if (sc.num_sectors < 2) {
        throw std::invalid_argument("variance heuristic needs at least two sectors");
    }
    int best_r = 0;
    double best_var = std::numeric_limits<double>::infinity();
    for (int r = 0; r < sc.bins_per_sector; ++r) {
        const double var = lambda_variance(lambda_vector(bins, sc, Rotation{r}));
        if (var < best_var) {
            best_var = var;
            best_r = r;
        }
    }
    return Rotation{best_r};
}

MinPowerResult low_complexity_min_power(const Scenario& sc,
                                        const BinIntensities& bins,
                                        RateTarget target, PowerVariant variant) {
    const Rotation r = variance_min_rotation(sc, bins);
    const PowerConstants pc = derive_constants(sc);
    return evaluate_rotation(sc, pc, bins, target, variant, r, true);
}

std::uint64_t composition_count(int total_antennas, int num_sectors) {
    // C(N-1, M-1) computed stepwise; saturates instead of overflowing.
    const std::uint64_t n = static_cast<std::uint64_t>(total_antennas - 1);
    const std::uint64_t k = static_cast<std::uint64_t>(num_sectors - 1);
    if (k > n) return 0;
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        const std::uint64_t factor = n - k + i;
        if (result > std::numeric_limits<std::uint64_t>::max() / factor) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        result = result * factor / i;
    }
    return result;
}

namespace {

// Strictly increasing cut positions in [1, n-1]; the gaps between
// consecutive cuts are the composition parts. Lexicographic order on cuts
// yields lexicographic order on parts.
bool next_cuts(std::vector<int>& cuts, int n) {
    const int k = static_cast<int>(cuts.size());
    for (int i = k - 1; i >= 0; --i) {
        if (cuts[static_cast<std::size_t>(i)] < n - 1 - (k - 1 - i)) {
            ++cuts[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) {
                cuts[static_cast<std::size_t>(j)] =
                    cuts[static_cast<std::size_t>(j - 1)] + 1;
            }
            return true;
        }
    }
    return false;
}

void cuts_to_parts(const std::vector<int>& cuts, int n, std::vector<int>& parts) {
    int prev = 0;
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        parts[i] = cuts[i] - prev;
        prev = cuts[i];
    }
    parts.back() = n - prev;
}

}  // namespace

EsmResult esm_oracle(const Scenario& sc, const BinIntensities& bins,
                     RateTarget target, PowerVariant variant,
                     std::uint64_t combination_cap) {
    const int n = sc.total_antennas;
    const int m = sc.num_sectors;
    const std::uint64_t per_rotation = composition_count(n, m);
    const std::uint64_t rotations = static_cast<std::uint64_t>(sc.bins_per_sector);
    if (per_rotation == std::numeric_limits<std::uint64_t>::max() ||
        per_rotation > combination_cap / rotations) {
        throw std::runtime_error("exhaustive search would exceed the combination cap");
    }

    const PowerConstants pc = derive_constants(sc);
    EsmResult best;
    bool have_best = false;
    std::vector<int> parts(static_cast<std::size_t>(m));
    std::vector<int> cuts(static_cast<std::size_t>(m - 1));
    for (int r = 0; r < sc.bins_per_sector; ++r) {
        const std::vector<double> lambdas = lambda_vector(bins, sc, Rotation{r});
        std::iota(cuts.begin(), cuts.end(), 1);
        bool more = true;
        while (more) {
            cuts_to_parts(cuts, n, parts);
            ++best.evaluated;
            const double p = total_power(pc, m, parts, lambdas, target, variant);
            if (!have_best || p < best.total_power_watt) {
                best.total_power_watt = p;
                best.r = Rotation{r};
                best.allocation.counts = parts;
                best.lambdas = lambdas;
                have_best = true;
            }
            more = m > 1 && next_cuts(cuts, n);
        }
    }
    return best;
}

Solution maximize_common_throughput(const Scenario& sc, const BinIntensities& bins,
                                    Scheme scheme, PowerVariant variant) {
    const PowerConstants pc = derive_constants(sc);
    const double lambda_sum = bins.total();
    if (lambda_sum <= 0.0) {
        throw std::domain_error("user distribution is empty; throughput unbounded");
    }
    const double p_max = sc.max_power_watt();

    Solution sol;
    sol.scheme = scheme;
    const std::vector<double> at_zero = lambda_vector(bins, sc, Rotation{0});
    for (int m = 1; m <= sc.num_sectors; ++m) {
        if (at_zero[static_cast<std::size_t>(m - 1)] == 0.0) {
            sol.empty_sectors.push_back(m);
        }
    }

    auto adopt = [&](const MinPowerResult& res, double rate) {
        sol.r_star = res.r;
        sol.n_star = res.allocation;
        sol.common_rate = rate;
        sol.total_power_watt = res.total_power_watt;
        sol.lambda_at_r = res.lambdas;
        sol.unused_antennas = sc.total_antennas - res.allocation.total();
    };

    // Power floor: the cheapest way to serve rate zero.
    const MinPowerResult floor =
        min_power_for_rate(sc, bins, RateTarget::from_rate(0.0), scheme, variant);
    adopt(floor, 0.0);
    if (floor.total_power_watt > p_max) {
        sol.budget_infeasible = true;
        return sol;
    }

    double rate_high = throughput_upper_bound(pc, sc.num_sectors, sc.total_antennas,
                                              lambda_sum, p_max);
    if (rate_high <= 0.0) {
        // Bound vacuous although the zero-rate floor fits the budget.
        return sol;
    }

    double rate_low = 0.0;
    const double eps = sc.bisection_tolerance;
    while (rate_high - rate_low > eps) {
        const double mid = 0.5 * (rate_high + rate_low);
        ++sol.iterations;
        const MinPowerResult res =
            min_power_for_rate(sc, bins, RateTarget::from_rate(mid), scheme, variant);
        if (res.total_power_watt <= p_max) {
            rate_low = mid;
            adopt(res, mid);
        } else {
            rate_high = mid;
        }
    }
    return sol;
}

}  // namespace flexsector
