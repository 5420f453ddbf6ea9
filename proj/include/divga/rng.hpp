#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace divga {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer; bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Derives the seed of an independent stream from a base seed and a stream
/// label. For a fixed base the map label -> seed is a bijection, so distinct
/// labels (e.g. run indices) always get distinct streams, and adding more
/// labels later never perturbs existing ones.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t label) noexcept {
    return mix64(mix64(base) ^ mix64(label ^ 0x6a09e667f3bcc909ULL));
}

/// Unbiased uniform integer in [0, n), n >= 1. Rejection sampling on the top
/// of the 64-bit range keeps the modulus exact.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n; // 2^64 mod n
    for (;;) {
        const std::uint64_t x = rng();
        if (x >= threshold)
            return x % n;
    }
}

inline std::size_t uniform_index(Rng& rng, std::size_t n) {
    return static_cast<std::size_t>(uniform_below(rng, n));
}

/// Uniform double in [0, 1), 53-bit resolution.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace divga
