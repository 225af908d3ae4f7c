#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "mm/errors.hpp"

namespace mm {

/// Parameters of a generalized Mastermind instance MM(c,p): c colors,
/// p peg positions, and a cap on game length. The cap defaults to c^p,
/// which is what the uninformed random baseline needs in the worst case.
struct GameConfig {
    int colors = 6;
    int pegs = 4;
    std::uint64_t turn_cap = 0;  // 0 requests the c^p default

    GameConfig() { turn_cap = code_space_size_clamped(); }
    GameConfig(int c, int p, std::uint64_t cap = 0) : colors(c), pegs(p), turn_cap(cap) {
        validate_shape();
        if (turn_cap == 0) turn_cap = code_space_size_clamped();
    }

    /// c^p, or UINT64_MAX when it overflows 64 bits.
    std::uint64_t code_space_size_clamped() const;

    /// Throws invalid_input unless colors >= 1, pegs >= 1.
    void validate_shape() const;

    bool operator==(const GameConfig&) const = default;
};

/// A fixed-length sequence of 0-based color indices. Ordering is
/// lexicographic, which every deterministic tie-break relies on.
struct Code {
    std::vector<int> slots;

    Code() = default;
    explicit Code(std::vector<int> s) : slots(std::move(s)) {}

    auto operator<=>(const Code&) const = default;
};

/// A key-peg reply: black = right color and position, white = right
/// color, wrong position.
struct Feedback {
    int black = 0;
    int white = 0;

    auto operator<=>(const Feedback&) const = default;
};

/// Throws invalid_input unless the code has exactly config.pegs slots,
/// each in [0, config.colors).
void validate_code(const Code& code, const GameConfig& config);

/// Display form: 1-based digits ("1122") for c <= 9, dot-separated
/// 1-based integers ("1.1.10.4") otherwise.
std::string format_code(const Code& code, const GameConfig& config);

/// Inverse of format_code; accepts either notation. Throws invalid_input
/// on malformed literals or out-of-range colors.
Code parse_code(const std::string& text, const GameConfig& config);

std::string format_feedback(const Feedback& fb);

}  // namespace mm
