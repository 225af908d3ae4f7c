#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace mm {

/// splitmix64 finalizer; the basis for all seed derivation so batch
/// results do not depend on scheduling or worker count.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) {
    return mix64(root ^ mix64(index + 1));
}

using Rng = std::mt19937_64;

/// Uniform draw from [0, n) by rejection sampling; unlike
/// std::uniform_int_distribution the output is identical across
/// standard-library implementations.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return draw % n;
}

/// Uniform real in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace mm
