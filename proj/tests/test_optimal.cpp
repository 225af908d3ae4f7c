#include <doctest.h>

#include <cmath>
#include <map>

#include "mm/optimal.hpp"
#include "mm/rules.hpp"
#include "mm/enumerate.hpp"

using namespace mm;

namespace {

// Brute-force worst-case depth for MM(2,2): small enough to enumerate the
// whole game tree without memoization, written independently of the
// production search.
int brute_depth(const std::vector<Code>& set, const std::vector<Code>& universe,
                const GameConfig& config) {
    if (set.size() == 1) return 1;
    int best = 1 << 20;
    for (const Code& guess : universe) {
        std::map<Feedback, std::vector<Code>> cells;
        bool hit = false;
        for (const Code& m : set) {
            const Feedback fb = feedback(guess, m, config);
            if (fb.black == config.pegs)
                hit = true;
            else
                cells[fb].push_back(m);
        }
        bool stuck = false;
        for (const auto& [fb, cell] : cells)
            if (!hit && cell.size() == set.size()) stuck = true;
        if (stuck) continue;
        int worst = hit ? 1 : 0;
        for (const auto& [fb, cell] : cells)
            worst = std::max(worst, 1 + brute_depth(cell, universe, config));
        best = std::min(best, worst);
    }
    return best;
}

}  // namespace

TEST_CASE("optimal_worst_case: MM(2,2) agrees with a naive tree search") {
    const GameConfig config(2, 2);
    const auto universe = enumerate_codes(config);
    CHECK(brute_depth(universe, universe, config) == 3);

    const auto result = optimal_worst_case(config);
    CHECK(result.worst_case_depth == 3);
    CHECK(result.worst_case_depth >= static_cast<int>(std::ceil(result.expected_depth)));
    CHECK(result.node_count > 0);
}

TEST_CASE("optimal_worst_case: two-peg theorem values for small c") {
    for (int c = 2; c <= 5; ++c) {
        const auto result = optimal_worst_case(GameConfig(c, 2));
        CHECK(result.worst_case_depth == c / 2 + 2);
    }
}

TEST_CASE("optimal_worst_case: cap enforcement") {
    CHECK_THROWS_AS(optimal_worst_case(GameConfig(6, 4)), resource_limit_error);
    CHECK_THROWS_AS(optimal_worst_case(GameConfig(4, 2), 10), resource_limit_error);
}
