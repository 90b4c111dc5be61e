#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace caloric {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Exact conversion; every finite double is a dyadic rational.
Rational rational_from_double(double v);

double to_double(const Rational& q);

/// Best rational approximation of `v` with denominator <= `max_den` and
/// |p/q - v| <= tol, found by walking the continued-fraction convergents.
/// Returns nullopt when no convergent within the denominator bound meets
/// the tolerance.
std::optional<Rational> snap_to_rational(double v, double tol, std::uint64_t max_den);

/// Parses "a" or "a/b" with optional sign. Throws std::invalid_argument
/// on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

std::string format_rational(const Rational& q);

}  // namespace caloric
