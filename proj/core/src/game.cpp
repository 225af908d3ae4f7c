#include "mm/game.hpp"

#include <charconv>
#include <limits>
#include <sstream>

namespace mm {

std::uint64_t GameConfig::code_space_size_clamped() const {
    std::uint64_t total = 1;
    for (int i = 0; i < pegs; ++i) {
        if (total > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(colors))
            return std::numeric_limits<std::uint64_t>::max();
        total *= static_cast<std::uint64_t>(colors);
    }
    return total;
}

void GameConfig::validate_shape() const {
    if (colors < 1) throw invalid_input("colors must be >= 1");
    if (pegs < 1) throw invalid_input("pegs must be >= 1");
}

void validate_code(const Code& code, const GameConfig& config) {
    if (static_cast<int>(code.slots.size()) != config.pegs)
        throw invalid_input("code has " + std::to_string(code.slots.size()) + " slots, expected " +
                            std::to_string(config.pegs));
    for (int v : code.slots)
        if (v < 0 || v >= config.colors)
            throw invalid_input("color index " + std::to_string(v) + " out of range [0, " +
                                std::to_string(config.colors) + ")");
}

std::string format_code(const Code& code, const GameConfig& config) {
    std::string out;
    if (config.colors <= 9) {
        for (int v : code.slots) out.push_back(static_cast<char>('1' + v));
    } else {
        for (std::size_t i = 0; i < code.slots.size(); ++i) {
            if (i) out.push_back('.');
            out += std::to_string(code.slots[i] + 1);
        }
    }
    return out;
}

Code parse_code(const std::string& text, const GameConfig& config) {
    if (text.empty()) throw invalid_input("empty code literal");
    Code code;
    if (text.find('.') != std::string::npos) {
        std::stringstream ss(text);
        std::string part;
        while (std::getline(ss, part, '.')) {
            int v = 0;
            auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
            if (ec != std::errc{} || ptr != part.data() + part.size() || v < 1)
                throw invalid_input("bad code component '" + part + "' in '" + text + "'");
            code.slots.push_back(v - 1);
        }
    } else {
        for (char ch : text) {
            if (ch < '1' || ch > '9')
                throw invalid_input("bad digit '" + std::string(1, ch) + "' in code '" + text + "'");
            code.slots.push_back(ch - '1');
        }
    }
    validate_code(code, config);
    return code;
}

std::string format_feedback(const Feedback& fb) {
    return "[" + std::to_string(fb.black) + "," + std::to_string(fb.white) + "]";
}

}  // namespace mm
