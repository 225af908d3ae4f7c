#include "mm/stats.hpp"

#include <algorithm>
#include <cmath>

namespace mm {

SummaryStats summarize(const std::vector<std::uint64_t>& query_counts) {
    if (query_counts.empty()) throw invalid_input("summarize requires at least one query count");

    SummaryStats stats;
    stats.count = query_counts.size();
    stats.max = *std::max_element(query_counts.begin(), query_counts.end());

    double sum = 0.0;
    for (std::uint64_t v : query_counts) sum += static_cast<double>(v);
    stats.mean = sum / static_cast<double>(stats.count);

    double sq = 0.0;
    for (std::uint64_t v : query_counts) {
        const double d = static_cast<double>(v) - stats.mean;
        sq += d * d;
    }
    stats.std_dev = std::sqrt(sq / static_cast<double>(stats.count));

    std::vector<std::uint64_t> sorted = query_counts;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t mid = sorted.size() / 2;
    stats.median = sorted.size() % 2 == 1
                       ? static_cast<double>(sorted[mid])
                       : (static_cast<double>(sorted[mid - 1]) + static_cast<double>(sorted[mid])) / 2.0;
    return stats;
}

}  // namespace mm
