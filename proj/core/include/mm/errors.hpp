#pragma once

#include <stdexcept>
#include <string>

namespace mm {

/// Malformed arguments: bad code lengths, out-of-range colors, illegal
/// feedback classes, empty inputs where values are required.
class invalid_input : public std::invalid_argument {
public:
    explicit invalid_input(const std::string& what) : std::invalid_argument(what) {}
};

/// A requested computation would exceed a configured size cap
/// (code enumeration, game-tree search, integer overflow).
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

/// The recorded history admits no consistent code; a solver cannot
/// propose a next query.
class contradictory_history_error : public std::runtime_error {
public:
    explicit contradictory_history_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mm
