#include "mm/optimal.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "mm/universe.hpp"

namespace mm {
namespace {

struct Outcome {
    int worst = 0;                 // max queries over masters in the set
    std::uint64_t total_queries = 0;  // summed over masters in the set
};

struct TreeSearch {
    const Universe& universe;
    std::unordered_map<std::string, Outcome> memo;

    explicit TreeSearch(const Universe& u) : universe(u) {}

    static std::string key_of(const std::vector<std::uint32_t>& set) {
        return std::string(reinterpret_cast<const char*>(set.data()),
                           set.size() * sizeof(std::uint32_t));
    }

    Outcome solve(const std::vector<std::uint32_t>& set) {
        if (set.size() == 1) return {1, 1};
        const std::string key = key_of(set);
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        const int num_classes = universe.num_classes();
        const int win = universe.winning_class();
        Outcome best{std::numeric_limits<int>::max(), 0};

        std::vector<std::vector<std::uint32_t>> cells(num_classes);
        for (std::uint32_t guess = 0; guess < universe.size(); ++guess) {
            for (auto& cell : cells) cell.clear();
            bool hits_master = false;
            for (std::uint32_t m : set) {
                const int cls = universe.class_of(guess, m);
                if (cls == win)
                    hits_master = true;  // guess == m, solved by this query
                else
                    cells[cls].push_back(m);
            }
            // A guess that fails to split the set makes no progress.
            if (!hits_master && std::ranges::any_of(cells, [&](const auto& cell) {
                    return cell.size() == set.size();
                }))
                continue;

            int worst = hits_master ? 1 : 0;
            std::uint64_t total = hits_master ? 1 : 0;
            bool abandoned = false;
            for (const auto& cell : cells) {
                if (cell.empty()) continue;
                const Outcome sub = solve(cell);
                worst = std::max(worst, 1 + sub.worst);
                total += cell.size() + sub.total_queries;
                if (worst > best.worst) {
                    abandoned = true;
                    break;
                }
            }
            if (abandoned) continue;
            if (worst < best.worst || (worst == best.worst && total < best.total_queries))
                best = {worst, total};
        }
        memo.emplace(key, best);
        return best;
    }
};

}  // namespace

StrategyTreeResult optimal_worst_case(const GameConfig& config, std::uint64_t cap) {
    config.validate_shape();
    if (config.code_space_size_clamped() > cap)
        throw resource_limit_error("game tree for " + std::to_string(config.colors) + "^" +
                                   std::to_string(config.pegs) + " codes exceeds cap " +
                                   std::to_string(cap));

    const auto universe = Universe::build(config);
    std::vector<std::uint32_t> all(universe->size());
    std::iota(all.begin(), all.end(), 0u);

    TreeSearch search(*universe);
    const Outcome root = search.solve(all);

    StrategyTreeResult result;
    result.worst_case_depth = root.worst;
    result.expected_depth = static_cast<double>(root.total_queries) / all.size();
    result.node_count = search.memo.size();  // singleton leaf states are not memoized
    return result;
}

}  // namespace mm
