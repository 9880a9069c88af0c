#pragma once

// Seeded randomness with results that do not depend on the standard library
// vendor: std::uniform_int_distribution and std::shuffle are implementation
// defined, so bounded draws and shuffles are done here on top of mt19937_64.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

namespace halfsep {

using Rng = std::mt19937_64;

/// splitmix64 finalizer, used to derive independent per-trial seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

template <typename... Parts>
constexpr std::uint64_t derive_seed(std::uint64_t master, Parts... parts) noexcept {
    std::uint64_t s = mix_seed(master);
    ((s = mix_seed(s ^ static_cast<std::uint64_t>(parts))), ...);
    return s;
}

/// Uniform integer in [0, bound). bound must be > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    // rejection keeps the draw unbiased
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % bound;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline double uniform_in(Rng& rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }

/// Standard normal via Box-Muller.
inline double standard_normal(Rng& rng) {
    double u1 = 0.0;
    while (u1 <= 0.0) u1 = uniform01(rng);
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        auto j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(v[i - 1], v[j]);
    }
}

/// k distinct values from `pool`, in random order. Requires k <= pool.size().
template <typename T>
std::vector<T> sample_without_replacement(std::vector<T> pool, std::size_t k, Rng& rng) {
    for (std::size_t i = 0; i < k; ++i) {
        auto j = i + static_cast<std::size_t>(uniform_below(rng, pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
}

}  // namespace halfsep
