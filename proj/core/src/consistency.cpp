#include "mm/consistency.hpp"

namespace mm {

ConsistencySet consistent_set(const std::vector<Turn>& history, const std::vector<Code>& universe,
                              const GameConfig& config) {
    for (const auto& [query, fb] : history)
        if (!is_legal_feedback(fb, config.pegs))
            throw invalid_input("history contains illegal feedback class " + format_feedback(fb));

    ConsistencySet result;
    result.codes.reserve(universe.size());
    for (const Code& candidate : universe) {
        bool keep = true;
        for (const auto& [query, fb] : history) {
            if (feedback(query, candidate, config) != fb) {
                keep = false;
                break;
            }
        }
        if (keep) result.codes.push_back(candidate);
    }
    return result;
}

}  // namespace mm
