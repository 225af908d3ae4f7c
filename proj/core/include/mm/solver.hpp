#pragma once

#include <memory>
#include <string>

#include "mm/consistency.hpp"
#include "mm/rng.hpp"
#include "mm/universe.hpp"

namespace mm {

enum class Algorithm { random_search, knuth, sa, merc };

/// Accepts "random", "knuth", "sa", "merc". Throws invalid_input otherwise.
Algorithm parse_algorithm(const std::string& name);
std::string algorithm_name(Algorithm algorithm);

enum class InitialGuessMode { fixed_pairs, random_code };
enum class CandidatePool { consistent_only, full_universe };

struct SolverParams {
    double alpha = 2.0;  // SA acceptance numerator
    InitialGuessMode initial_guess_mode = InitialGuessMode::fixed_pairs;
    CandidatePool candidate_pool = CandidatePool::consistent_only;
};

/// Per-game mutable state shared by all strategies: the recorded turns,
/// the incrementally maintained consistency set (as indices into the
/// universe), and a seeded random stream.
class SolverState {
public:
    SolverState(std::shared_ptr<const Universe> universe, const SolverParams& params,
                std::uint64_t seed);

    const Universe& universe() const { return *universe_; }
    const GameConfig& config() const { return universe_->config(); }
    const SolverParams& params() const { return params_; }
    const std::vector<Turn>& history() const { return history_; }
    const std::vector<std::uint32_t>& candidate_indices() const { return candidates_; }
    const std::vector<std::uint32_t>& unguessed_indices() const { return unguessed_; }
    bool has_last_query() const { return last_query_ >= 0; }
    std::uint32_t last_query() const { return static_cast<std::uint32_t>(last_query_); }
    Rng& rng() { return rng_; }

    /// Materializes the candidate set as codes, in lexicographic order.
    ConsistencySet candidates() const;

    /// Records a turn: validates the class, filters the candidate set,
    /// and retires the query from the unguessed pool.
    void observe(const Code& query, const Feedback& reply);

    /// Rebuilds candidates/unguessed from the current history (undo support).
    void retract_last();

private:
    std::shared_ptr<const Universe> universe_;
    SolverParams params_;
    Rng rng_;
    std::vector<Turn> history_;
    std::vector<std::uint32_t> candidates_;
    std::vector<std::uint32_t> unguessed_;
    std::int64_t last_query_ = -1;
};

/// The paired-colors opening: slots 2i, 2i+1 hold color i ("1122" for
/// p = 4); an odd final slot repeats the last pair's color; colors wrap
/// modulo c.
Code default_initial_guess(const GameConfig& config);

/// Baseline: a uniformly random not-yet-guessed code from the full
/// universe. Ignores feedback entirely; never repeats a guess.
Code random_next(SolverState& state);

/// Knuth's minimax: the pool member whose largest partition cell over the
/// candidate set is smallest. Ties go to the lexicographically smallest
/// code; with the full-universe pool, consistent codes win ties first.
Code knuth_next(SolverState& state);

/// L1 distance between the replies the candidate would have produced as
/// master and the recorded replies. Zero iff the candidate is consistent.
int sa_score(const Code& candidate, const std::vector<Turn>& history, const GameConfig& config);

/// min(1, alpha / (score + 1)).
double sa_acceptance_probability(int score, double alpha);

/// Simulated annealing step: sample from candidates + the Hamming-1
/// neighborhood of the last query; consistent draws are taken as-is,
/// inconsistent ones pass a score-based acceptance test. Bounded
/// resampling falls back to the smallest consistent code.
Code sa_next(SolverState& state);

/// Mean consistency-set size after guessing `candidate`, over candidate
/// masters: sum of squared partition cells divided by |candidates|.
double merc_expected_size(const Code& candidate, const ConsistencySet& candidates,
                          const GameConfig& config);

/// MERC selection criterion actually minimized by merc_next: for each
/// candidate master the size of the matching full-universe partition cell,
/// summed over the candidate set.
std::uint64_t merc_selection_weight(SolverState& state, std::uint32_t guess_index);

/// MERC step: the candidate minimizing merc_selection_weight, ties to the
/// lexicographically smallest code.
Code merc_next(SolverState& state);

/// Dispatch to the strategy for `algorithm`.
Code next_query(Algorithm algorithm, SolverState& state);

}  // namespace mm
