#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace torsionforge {

// Exact arbitrary-precision rational numbers. GMP keeps values canonical
// (reduced, positive denominator), which the rest of the engine relies on.
using Rational = mpq_class;

inline int sign_of(const Rational& x) { return sgn(x); }

std::string to_string(const Rational& x);

// Parses "p", "-p", or "p/q". Throws Error on malformed input or q == 0.
Rational rational_from_string(const std::string& text);

// Nonnegative square root when x is the square of a rational, nullopt otherwise.
std::optional<Rational> exact_sqrt(const Rational& x);

Rational rational_pow(const Rational& base, int exp);

double to_double(const Rational& x);

}  // namespace torsionforge
