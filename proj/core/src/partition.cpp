#include "mm/partition.hpp"

#include <algorithm>

namespace mm {

std::uint64_t PartitionTable::max_cell() const {
    std::uint64_t mx = 0;
    for (const auto& [cls, n] : sizes) mx = std::max(mx, n);
    return mx;
}

std::uint64_t PartitionTable::total() const {
    std::uint64_t sum = 0;
    for (const auto& [cls, n] : sizes) sum += n;
    return sum;
}

std::uint64_t PartitionTable::sum_squares() const {
    std::uint64_t sum = 0;
    for (const auto& [cls, n] : sizes) sum += n * n;
    return sum;
}

PartitionTable partition_sizes(const Code& guess, const std::vector<Code>& candidates,
                               const GameConfig& config) {
    if (candidates.empty()) throw invalid_input("partition_sizes over an empty candidate set");
    validate_code(guess, config);

    PartitionTable table;
    table.guess = guess;
    for (const Feedback& cls : legal_feedback_classes(config.pegs)) table.sizes[cls] = 0;
    for (const Code& master : candidates) ++table.sizes.at(feedback(guess, master, config));
    return table;
}

}  // namespace mm
