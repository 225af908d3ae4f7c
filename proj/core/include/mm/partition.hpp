#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "mm/rules.hpp"

namespace mm {

/// Sizes of the query partition induced by one guess over a candidate set:
/// how many candidates would reply with each legal feedback class.
struct PartitionTable {
    Code guess;
    std::map<Feedback, std::uint64_t> sizes;  // keyed by every legal class, zeros included

    std::uint64_t max_cell() const;
    std::uint64_t total() const;
    /// Sum of squared cell sizes (the expected-consistency-set numerator).
    std::uint64_t sum_squares() const;
};

/// Partition `candidates` by the reply they would give to `guess`.
/// Candidates must be non-empty.
PartitionTable partition_sizes(const Code& guess, const std::vector<Code>& candidates,
                               const GameConfig& config);

}  // namespace mm
