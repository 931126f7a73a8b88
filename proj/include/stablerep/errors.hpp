#pragma once

#include <stdexcept>
#include <string>

namespace stablerep {

// Raised when a caller violates a documented precondition.
struct domain_error : std::invalid_argument {
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when an internal consistency check fails; indicates a bug, never bad input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw domain_error(what);
}

inline void internal_check(bool cond, const std::string& what) {
    if (!cond) throw internal_error(what);
}

} // namespace stablerep
