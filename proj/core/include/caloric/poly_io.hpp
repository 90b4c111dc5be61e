#pragma once

#include <stdexcept>
#include <string>

#include "caloric/polynomial.hpp"

namespace caloric {

struct PolyParseError : std::runtime_error {
    std::size_t position;
    PolyParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/// Parses the polynomial text format: a sum of terms
/// `c * x1^a1 * ... * xN^aN * t^k` with rational coefficients `p/q`.
/// Whitespace-insensitive; `x` is accepted as an alias for `x1`.
Polynomial parse_polynomial(const std::string& text, std::size_t spatial_dim);

/// Canonical printer; round-trips exactly through parse_polynomial.
std::string format_polynomial(const Polynomial& p);

}  // namespace caloric
