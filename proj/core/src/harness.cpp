#include "mm/harness.hpp"

#include <algorithm>
#include <thread>

namespace mm {
namespace {

constexpr std::uint64_t kMasterStreamSalt = 0x6D61737465727321ULL;

Code draw_master(const Universe& universe, std::uint64_t game_seed) {
    Rng rng(mix64(game_seed ^ kMasterStreamSalt));
    return universe.codes()[uniform_below(rng, universe.size())];
}

}  // namespace

std::string master_mode_name(MasterMode mode) {
    return mode == MasterMode::uniform_random ? "uniform-random" : "exhaustive-sweep";
}

MasterMode parse_master_mode(const std::string& name) {
    if (name == "uniform-random" || name == "random") return MasterMode::uniform_random;
    if (name == "exhaustive-sweep" || name == "sweep") return MasterMode::exhaustive_sweep;
    throw invalid_input("unknown master mode '" + name + "'");
}

GameRecord play_game(const std::shared_ptr<const Universe>& universe, Algorithm algorithm,
                     const Code& master, std::uint64_t seed, const SolverParams& params) {
    const GameConfig& config = universe->config();
    validate_code(master, config);

    GameRecord record;
    record.config = config;
    record.algorithm = algorithm_name(algorithm);
    record.seed = seed;
    record.master = master;

    SolverState state(universe, params, seed);
    while (record.turns.size() < config.turn_cap) {
        const Code query = next_query(algorithm, state);
        const Feedback reply = feedback(query, master, config);
        record.turns.emplace_back(query, reply);
        if (is_winning_feedback(reply, config.pegs)) {
            record.solved = true;
            break;
        }
        state.observe(query, reply);
    }
    record.query_count = record.turns.size();
    return record;
}

GameRecord play_game(const GameConfig& config, Algorithm algorithm, const Code& master,
                     std::uint64_t seed, const SolverParams& params) {
    return play_game(Universe::build(config), algorithm, master, seed, params);
}

BatchResult run_batch(const GameConfig& config, Algorithm algorithm, std::uint64_t n_games,
                      MasterMode master_mode, std::uint64_t master_seed,
                      const SolverParams& params, unsigned workers) {
    if (n_games < 1) throw invalid_input("n_games must be >= 1");
    const auto universe = Universe::build(config);
    if (master_mode == MasterMode::exhaustive_sweep && n_games != universe->size())
        throw invalid_input("exhaustive sweep needs n_games == c^p == " +
                            std::to_string(universe->size()));

    BatchResult result;
    result.records.resize(n_games);

    auto play_range = [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
            const std::uint64_t game_seed = derive_seed(master_seed, i);
            const Code master = master_mode == MasterMode::exhaustive_sweep
                                    ? universe->codes()[i]
                                    : draw_master(*universe, game_seed);
            result.records[i] = play_game(universe, algorithm, master, game_seed, params);
        }
    };

    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, n_games));
    if (workers <= 1) {
        play_range(0, n_games);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        const std::uint64_t chunk = (n_games + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t begin = w * chunk;
            const std::uint64_t end = std::min<std::uint64_t>(begin + chunk, n_games);
            if (begin < end) threads.emplace_back(play_range, begin, end);
        }
        for (auto& t : threads) t.join();
    }

    std::vector<std::uint64_t> counts;
    counts.reserve(n_games);
    for (const GameRecord& r : result.records) counts.push_back(r.query_count);
    result.stats = summarize(counts);
    return result;
}

}  // namespace mm
