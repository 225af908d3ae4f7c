#pragma once

#include <cstdint>

#include "mm/game.hpp"

namespace mm {

/// Outcome of the exhaustive strategy-tree search.
struct StrategyTreeResult {
    int worst_case_depth = 0;      // queries needed in the worst case
    double expected_depth = 0.0;   // mean queries over all masters
    std::uint64_t node_count = 0;  // distinct consistency states explored
};

inline constexpr std::uint64_t kDefaultTreeCap = 100;

/// Exact minimax over the full game tree: every node minimizes, over all
/// c^p guesses, the deepest reply branch. The final correct guess counts
/// as a query. Among worst-case-optimal guesses the one with the smallest
/// total query count wins, then the lexicographically smallest.
/// Throws resource_limit_error when c^p exceeds `cap`.
StrategyTreeResult optimal_worst_case(const GameConfig& config, std::uint64_t cap = kDefaultTreeCap);

}  // namespace mm
