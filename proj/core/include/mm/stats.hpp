#pragma once

#include <cstdint>
#include <vector>

#include "mm/errors.hpp"

namespace mm {

struct SummaryStats {
    std::uint64_t count = 0;
    double mean = 0.0;
    double median = 0.0;
    double std_dev = 0.0;  // population convention (divide by count)
    std::uint64_t max = 0;
};

/// Aggregates per-game query counts. Median averages the two middle
/// elements for even counts. Throws invalid_input on empty input.
SummaryStats summarize(const std::vector<std::uint64_t>& query_counts);

}  // namespace mm
