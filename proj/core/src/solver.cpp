#include "mm/solver.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace mm {

Algorithm parse_algorithm(const std::string& name) {
    if (name == "random") return Algorithm::random_search;
    if (name == "knuth") return Algorithm::knuth;
    if (name == "sa") return Algorithm::sa;
    if (name == "merc") return Algorithm::merc;
    throw invalid_input("unknown algorithm '" + name + "' (expected random|knuth|sa|merc)");
}

std::string algorithm_name(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::random_search: return "random";
        case Algorithm::knuth: return "knuth";
        case Algorithm::sa: return "sa";
        case Algorithm::merc: return "merc";
    }
    return "?";
}

SolverState::SolverState(std::shared_ptr<const Universe> universe, const SolverParams& params,
                         std::uint64_t seed)
    : universe_(std::move(universe)), params_(params), rng_(seed) {
    if (params_.alpha <= 0) throw invalid_input("alpha must be positive");
    candidates_.resize(universe_->size());
    std::iota(candidates_.begin(), candidates_.end(), 0u);
    unguessed_ = candidates_;
}

ConsistencySet SolverState::candidates() const {
    ConsistencySet set;
    set.codes.reserve(candidates_.size());
    for (std::uint32_t idx : candidates_) set.codes.push_back(universe_->codes()[idx]);
    return set;
}

void SolverState::observe(const Code& query, const Feedback& reply) {
    if (!is_legal_feedback(reply, config().pegs))
        throw invalid_input("illegal feedback class " + format_feedback(reply));
    const std::uint32_t q = universe_->index_of(query);
    const int cls = universe_->class_id(reply);

    std::vector<std::uint32_t> kept;
    kept.reserve(candidates_.size());
    for (std::uint32_t m : candidates_)
        if (universe_->class_of(q, m) == cls) kept.push_back(m);
    candidates_ = std::move(kept);

    if (auto it = std::find(unguessed_.begin(), unguessed_.end(), q); it != unguessed_.end())
        unguessed_.erase(it);

    history_.emplace_back(query, reply);
    last_query_ = q;
}

void SolverState::retract_last() {
    if (history_.empty()) return;
    std::vector<Turn> shorter(history_.begin(), history_.end() - 1);
    history_.clear();
    candidates_.resize(universe_->size());
    std::iota(candidates_.begin(), candidates_.end(), 0u);
    unguessed_ = candidates_;
    last_query_ = -1;
    for (const auto& [query, reply] : shorter) observe(query, reply);
}

Code default_initial_guess(const GameConfig& config) {
    config.validate_shape();
    Code guess(std::vector<int>(config.pegs, 0));
    for (int i = 0; i < config.pegs; ++i) guess.slots[i] = (i / 2) % config.colors;
    if (config.pegs % 2 == 1 && config.pegs > 1)
        guess.slots[config.pegs - 1] = guess.slots[config.pegs - 2];
    return guess;
}

namespace {

Code opening_guess(SolverState& state) {
    if (state.params().initial_guess_mode == InitialGuessMode::fixed_pairs)
        return default_initial_guess(state.config());
    return state.universe().codes()[uniform_below(state.rng(), state.universe().size())];
}

void require_candidates(const SolverState& state) {
    if (state.candidate_indices().empty())
        throw contradictory_history_error("no code is consistent with the recorded history");
}

}  // namespace

Code random_next(SolverState& state) {
    const auto& pool = state.unguessed_indices();
    if (pool.empty()) throw std::logic_error("random_next: universe exhausted");
    const std::uint32_t idx = pool[uniform_below(state.rng(), pool.size())];
    return state.universe().codes()[idx];
}

Code knuth_next(SolverState& state) {
    if (state.history().empty()) return opening_guess(state);
    require_candidates(state);

    const Universe& universe = state.universe();
    const auto& candidates = state.candidate_indices();
    const bool full_pool = state.params().candidate_pool == CandidatePool::full_universe;

    std::vector<std::uint32_t> counts(universe.num_classes());
    std::uint64_t best_worst = 0;
    std::int64_t best = -1;
    bool best_consistent = false;

    auto evaluate = [&](std::uint32_t guess, bool guess_consistent) {
        std::fill(counts.begin(), counts.end(), 0u);
        for (std::uint32_t m : candidates) ++counts[universe.class_of(guess, m)];
        const std::uint64_t worst = *std::max_element(counts.begin(), counts.end());
        if (best < 0 || worst < best_worst ||
            (worst == best_worst && guess_consistent && !best_consistent)) {
            best_worst = worst;
            best = guess;
            best_consistent = guess_consistent;
        }
    };

    if (full_pool) {
        std::size_t next_candidate = 0;
        for (std::uint32_t g = 0; g < universe.size(); ++g) {
            while (next_candidate < candidates.size() && candidates[next_candidate] < g)
                ++next_candidate;
            const bool consistent =
                next_candidate < candidates.size() && candidates[next_candidate] == g;
            evaluate(g, consistent);
        }
    } else {
        for (std::uint32_t g : candidates) evaluate(g, true);
    }
    return universe.codes()[static_cast<std::uint32_t>(best)];
}

int sa_score(const Code& candidate, const std::vector<Turn>& history, const GameConfig& config) {
    int score = 0;
    for (const auto& [query, recorded] : history) {
        const Feedback would = feedback(query, candidate, config);
        score += std::abs(would.black - recorded.black) + std::abs(would.white - recorded.white);
    }
    return score;
}

double sa_acceptance_probability(int score, double alpha) {
    if (score < 0) throw invalid_input("score must be non-negative");
    if (alpha <= 0) throw invalid_input("alpha must be positive");
    return std::min(1.0, alpha / (score + 1));
}

Code sa_next(SolverState& state) {
    const Universe& universe = state.universe();
    if (state.history().empty())
        return universe.codes()[uniform_below(state.rng(), universe.size())];
    require_candidates(state);

    const auto& candidates = state.candidate_indices();

    // Augmented pool: consistency set plus the Hamming-1 neighborhood of
    // the last query, deduplicated, in index (lexicographic) order.
    std::vector<std::uint32_t> augmented = candidates;
    for (const Code& n : hamming_neighbors(universe.codes()[state.last_query()], state.config()))
        augmented.push_back(universe.index_of(n));
    std::sort(augmented.begin(), augmented.end());
    augmented.erase(std::unique(augmented.begin(), augmented.end()), augmented.end());

    // Draw budget scales with the consistency set: early on, draws are cheap
    // and almost always consistent; late in the game the budget shrinks so the
    // endgame cannot stall on a long run of accepted-but-inconsistent probes.
    const std::uint64_t max_draws = static_cast<std::uint64_t>(candidates.size());
    for (std::uint64_t draw = 0; draw < max_draws; ++draw) {
        const std::uint32_t idx = augmented[uniform_below(state.rng(), augmented.size())];
        if (std::binary_search(candidates.begin(), candidates.end(), idx))
            return universe.codes()[idx];
        const int score = sa_score(universe.codes()[idx], state.history(), state.config());
        if (uniform_unit(state.rng()) < sa_acceptance_probability(score, state.params().alpha))
            return universe.codes()[idx];
    }
    return universe.codes()[candidates.front()];
}

double merc_expected_size(const Code& candidate, const ConsistencySet& candidates,
                          const GameConfig& config) {
    if (candidates.empty()) throw invalid_input("merc_expected_size over an empty candidate set");
    std::map<Feedback, std::uint64_t> cells;
    for (const Code& master : candidates.codes) ++cells[feedback(candidate, master, config)];
    std::uint64_t sum_squares = 0;
    for (const auto& [cls, n] : cells) sum_squares += n * n;
    return static_cast<double>(sum_squares) / static_cast<double>(candidates.size());
}

std::uint64_t merc_selection_weight(SolverState& state, std::uint32_t guess_index) {
    const Universe& universe = state.universe();
    const auto& candidates = state.candidate_indices();
    const int num_classes = universe.num_classes();

    std::vector<std::uint64_t> in_set(num_classes, 0);
    for (std::uint32_t m : candidates) ++in_set[universe.class_of(guess_index, m)];

    std::uint64_t weight = 0;
    if (!universe.full_partition_counts().empty()) {
        const std::uint32_t* full =
            universe.full_partition_counts().data() +
            static_cast<std::size_t>(guess_index) * num_classes;
        for (int cls = 0; cls < num_classes; ++cls) weight += in_set[cls] * full[cls];
    } else {
        std::vector<std::uint64_t> full(num_classes, 0);
        for (std::uint32_t m = 0; m < universe.size(); ++m)
            ++full[universe.class_of(guess_index, m)];
        for (int cls = 0; cls < num_classes; ++cls) weight += in_set[cls] * full[cls];
    }
    return weight;
}

Code merc_next(SolverState& state) {
    if (state.history().empty()) return opening_guess(state);
    require_candidates(state);

    const auto& candidates = state.candidate_indices();
    std::uint64_t best_weight = 0;
    std::int64_t best = -1;
    for (std::uint32_t g : candidates) {
        const std::uint64_t weight = merc_selection_weight(state, g);
        if (best < 0 || weight < best_weight) {
            best_weight = weight;
            best = g;
        }
    }
    return state.universe().codes()[static_cast<std::uint32_t>(best)];
}

Code next_query(Algorithm algorithm, SolverState& state) {
    switch (algorithm) {
        case Algorithm::random_search: return random_next(state);
        case Algorithm::knuth: return knuth_next(state);
        case Algorithm::sa: return sa_next(state);
        case Algorithm::merc: return merc_next(state);
    }
    throw invalid_input("unknown algorithm");
}

}  // namespace mm
