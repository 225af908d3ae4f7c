#pragma once

#include <cstdint>
#include <map>

#include "mm/game.hpp"

namespace mm {

/// |MM(c,p)| decomposed by the exact number of distinct colors used.
struct CardinalityByColors {
    std::uint64_t total = 0;
    std::map<int, std::uint64_t> per_color_count;  // i -> C_i, i in [1, min(c,p)]
};

/// Counts codes by distinct-color usage: C_i = C(c,i) * sum over ordered
/// compositions n_1+...+n_i = p (all n_j >= 1) of p!/(n_1!...n_i!).
/// The total provably equals c^p; callers may assert that identity.
/// Throws resource_limit_error on 64-bit overflow.
CardinalityByColors cardinality_by_colors(const GameConfig& config);

}  // namespace mm
