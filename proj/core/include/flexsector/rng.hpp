// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>

namespace flexsector {

namespace detail {

// SplitMix64 finalizer. Passes the usual statistical batteries when driven
// by a Weyl sequence, which is exactly how CounterRng uses it.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

}  // namespace detail

/// Counter-addressable pseudo-random generator.
///
/// Every (seed, stream) pair names an independent sequence and each draw is
/// a pure function of (seed, stream, counter). Deriving per-task substreams
/// instead of sharing one generator keeps results bit-identical no matter
/// how work is scheduled across threads.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : key_(detail::mix64(detail::mix64(seed + detail::kGolden) ^
                             detail::mix64(stream + 0xD1B54A32D192ED03ULL))) {}

    /// Independent generator addressed relative to this one.
    CounterRng substream(std::uint64_t index) const {
        return CounterRng(key_, index);
    }

    std::uint64_t next_u64() {
        counter_ += detail::kGolden;
        return detail::mix64(key_ ^ counter_);
    }

    /// Uniform double in [0, 1).
    double next_uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Unit-mean exponential draw.
    double next_exponential() {
        return -std::log1p(-next_uniform());
    }

    /// Unbiased uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) {
        // Lemire's multiply-shift rejection method.
        std::uint64_t x = next_u64();
        __uint128_t m = static_cast<__uint128_t>(x) * n;
        auto low = static_cast<std::uint64_t>(m);
        if (low < n) {
            const std::uint64_t t = (0 - n) % n;
            while (low < t) {
                x = next_u64();
                m = static_cast<__uint128_t>(x) * n;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    /// Poisson draw by the product-of-uniforms method. Exact, O(lambda);
    /// the running product underflows only beyond lambda ~ 700, far past
    /// anything this model simulates.
    int next_poisson(double lambda) {
        if (lambda <= 0.0) return 0;
        const double limit = std::exp(-lambda);
        int k = 0;
        double p = 1.0;
        do {
            p *= next_uniform();
            ++k;
        } while (p > limit);
        return k - 1;
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace flexsector
