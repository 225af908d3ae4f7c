#pragma once

#include <cstdint>
#include <vector>

#include "mm/game.hpp"

namespace mm {

/// Fail-fast ceiling on code enumeration; c^p beyond this raises
/// resource_limit_error instead of exhausting memory.
inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// All c^p codes in lexicographic order.
std::vector<Code> enumerate_codes(const GameConfig& config,
                                  std::uint64_t cap = kDefaultEnumerationCap);

/// Position of a code within enumerate_codes' ordering (mixed-radix value,
/// first slot most significant).
std::uint64_t code_index(const Code& code, const GameConfig& config);

Code code_from_index(std::uint64_t index, const GameConfig& config);

/// The p*(c-1) codes differing from `code` in exactly one slot, in
/// deterministic slot-major order. Excludes `code` itself.
std::vector<Code> hamming_neighbors(const Code& code, const GameConfig& config);

}  // namespace mm
