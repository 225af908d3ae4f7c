#include "mm/rules.hpp"

#include <algorithm>

namespace mm {

Feedback feedback(const Code& query, const Code& master, const GameConfig& config) {
    validate_code(query, config);
    validate_code(master, config);

    int black = 0;
    // Per-color peg counts over the non-matching positions feed the white count.
    std::vector<int> in_query(config.colors, 0), in_master(config.colors, 0);
    for (int i = 0; i < config.pegs; ++i) {
        if (query.slots[i] == master.slots[i]) {
            ++black;
        } else {
            ++in_query[query.slots[i]];
            ++in_master[master.slots[i]];
        }
    }
    int white = 0;
    for (int color = 0; color < config.colors; ++color)
        white += std::min(in_query[color], in_master[color]);
    return Feedback{black, white};
}

std::vector<Feedback> legal_feedback_classes(int pegs) {
    if (pegs < 1) throw invalid_input("pegs must be >= 1");
    std::vector<Feedback> classes;
    classes.reserve(static_cast<std::size_t>(pegs) * (pegs + 3) / 2);
    for (int b = 0; b <= pegs; ++b)
        for (int w = 0; b + w <= pegs; ++w)
            if (!(b == pegs - 1 && w == 1)) classes.push_back(Feedback{b, w});
    return classes;
}

}  // namespace mm
