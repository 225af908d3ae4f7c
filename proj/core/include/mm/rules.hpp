#pragma once

#include <vector>

#include "mm/game.hpp"

namespace mm {

/// Key-peg reply for a query against a master code. Black counts exact
/// positional matches; white is the per-color multiset overlap minus black.
/// Throws invalid_input if either code is invalid under config.
Feedback feedback(const Code& query, const Code& master, const GameConfig& config);

/// All legal reply classes (b,w) with b+w <= p, excluding the impossible
/// [p-1,1] combination; ordered b-major ascending. Length is (p+3)p/2.
std::vector<Feedback> legal_feedback_classes(int pegs);

inline bool is_legal_feedback(const Feedback& fb, int pegs) {
    if (fb.black < 0 || fb.white < 0) return false;
    if (fb.black + fb.white > pegs) return false;
    if (fb.black == pegs - 1 && fb.white == 1) return false;
    return true;
}

inline bool is_winning_feedback(const Feedback& fb, int pegs) {
    return fb.black == pegs;
}

}  // namespace mm
