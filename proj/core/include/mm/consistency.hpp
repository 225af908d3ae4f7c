#pragma once

#include <utility>
#include <vector>

#include "mm/rules.hpp"

namespace mm {

using Turn = std::pair<Code, Feedback>;

/// Codes that would have produced every recorded reply if they were the
/// master; kept in the lexicographic order of the universe they were
/// filtered from. Empty means the history is contradictory.
struct ConsistencySet {
    std::vector<Code> codes;

    std::size_t size() const { return codes.size(); }
    bool empty() const { return codes.empty(); }
};

/// Filters `universe` down to the codes consistent with every turn in
/// `history`. An empty history returns the whole universe.
ConsistencySet consistent_set(const std::vector<Turn>& history, const std::vector<Code>& universe,
                              const GameConfig& config);

}  // namespace mm
