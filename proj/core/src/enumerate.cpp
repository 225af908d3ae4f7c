#include "mm/enumerate.hpp"

namespace mm {

std::vector<Code> enumerate_codes(const GameConfig& config, std::uint64_t cap) {
    config.validate_shape();
    const std::uint64_t total = config.code_space_size_clamped();
    if (total > cap)
        throw resource_limit_error("code space " + std::to_string(config.colors) + "^" +
                                   std::to_string(config.pegs) + " exceeds enumeration cap " +
                                   std::to_string(cap));
    std::vector<Code> codes;
    codes.reserve(total);
    Code current(std::vector<int>(config.pegs, 0));
    for (std::uint64_t i = 0; i < total; ++i) {
        codes.push_back(current);
        // Mixed-radix increment, least significant slot last.
        for (int slot = config.pegs - 1; slot >= 0; --slot) {
            if (++current.slots[slot] < config.colors) break;
            current.slots[slot] = 0;
        }
    }
    return codes;
}

std::uint64_t code_index(const Code& code, const GameConfig& config) {
    validate_code(code, config);
    std::uint64_t index = 0;
    for (int v : code.slots) index = index * config.colors + static_cast<std::uint64_t>(v);
    return index;
}

Code code_from_index(std::uint64_t index, const GameConfig& config) {
    Code code(std::vector<int>(config.pegs, 0));
    for (int slot = config.pegs - 1; slot >= 0; --slot) {
        code.slots[slot] = static_cast<int>(index % config.colors);
        index /= config.colors;
    }
    return code;
}

std::vector<Code> hamming_neighbors(const Code& code, const GameConfig& config) {
    validate_code(code, config);
    std::vector<Code> neighbors;
    neighbors.reserve(static_cast<std::size_t>(config.pegs) * (config.colors - 1));
    for (int slot = 0; slot < config.pegs; ++slot) {
        for (int color = 0; color < config.colors; ++color) {
            if (color == code.slots[slot]) continue;
            Code n = code;
            n.slots[slot] = color;
            neighbors.push_back(std::move(n));
        }
    }
    return neighbors;
}

}  // namespace mm
