#pragma once

#include <string>
#include <vector>

#include "mm/solver.hpp"
#include "mm/stats.hpp"

namespace mm {

/// One finished (or turn-capped) game against a truthful code-maker.
struct GameRecord {
    GameConfig config;
    std::string algorithm;
    std::uint64_t seed = 0;
    Code master;
    std::vector<Turn> turns;
    std::uint64_t query_count = 0;
    bool solved = false;

    bool operator==(const GameRecord&) const = default;
};

enum class MasterMode { uniform_random, exhaustive_sweep };

std::string master_mode_name(MasterMode mode);
MasterMode parse_master_mode(const std::string& name);

/// Plays one game to completion (or to config.turn_cap). The seed drives
/// every random draw the solver makes; identical inputs give identical
/// records.
GameRecord play_game(const std::shared_ptr<const Universe>& universe, Algorithm algorithm,
                     const Code& master, std::uint64_t seed, const SolverParams& params = {});

/// Convenience overload that builds the universe itself.
GameRecord play_game(const GameConfig& config, Algorithm algorithm, const Code& master,
                     std::uint64_t seed, const SolverParams& params = {});

struct BatchResult {
    std::vector<GameRecord> records;  // ordered by game index
    SummaryStats stats;
};

/// Runs n_games independent games. Per-game seeds derive from
/// (master_seed, game_index), so results do not depend on worker count or
/// scheduling. Exhaustive sweep requires n_games == c^p and plays every
/// master once, in lexicographic order. workers == 0 picks a hardware
/// default.
BatchResult run_batch(const GameConfig& config, Algorithm algorithm, std::uint64_t n_games,
                      MasterMode master_mode, std::uint64_t master_seed,
                      const SolverParams& params = {}, unsigned workers = 0);

}  // namespace mm
