#include "mm/counting.hpp"

#include <algorithm>
#include <vector>

namespace mm {
namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw resource_limit_error("64-bit overflow in cardinality computation");
    return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw resource_limit_error("64-bit overflow in cardinality computation");
    return r;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (int j = 1; j <= k; ++j) {
        // result * (n-k+j) is divisible by j at every step
        result = checked_mul(result, static_cast<std::uint64_t>(n - k + j)) /
                 static_cast<std::uint64_t>(j);
    }
    return result;
}

std::uint64_t multinomial(int p, const std::vector<int>& parts) {
    std::uint64_t result = 1;
    int remaining = p;
    for (int n : parts) {
        result = checked_mul(result, binomial(remaining, n));
        remaining -= n;
    }
    return result;
}

// Sum of multinomial(p; n_1..n_i) over ordered compositions with n_j >= 1.
std::uint64_t composition_sum(int p, int i, std::vector<int>& parts, std::uint64_t acc = 0) {
    if (static_cast<int>(parts.size()) == i - 1) {
        int last = p;
        for (int n : parts) last -= n;
        if (last < 1) return acc;
        parts.push_back(last);
        acc = checked_add(acc, multinomial(p, parts));
        parts.pop_back();
        return acc;
    }
    int used = 0;
    for (int n : parts) used += n;
    int slots_left = i - static_cast<int>(parts.size());
    for (int n = 1; used + n + (slots_left - 1) <= p; ++n) {
        parts.push_back(n);
        acc = composition_sum(p, i, parts, acc);
        parts.pop_back();
    }
    return acc;
}

}  // namespace

CardinalityByColors cardinality_by_colors(const GameConfig& config) {
    config.validate_shape();
    CardinalityByColors result;
    const int max_colors_used = std::min(config.colors, config.pegs);
    for (int i = 1; i <= max_colors_used; ++i) {
        std::vector<int> parts;
        const std::uint64_t c_i =
            checked_mul(binomial(config.colors, i), composition_sum(config.pegs, i, parts));
        result.per_color_count[i] = c_i;
        result.total = checked_add(result.total, c_i);
    }
    return result;
}

}  // namespace mm
