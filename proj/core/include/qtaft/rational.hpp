#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace qtaft {

/// Exact rational scalar. GMP keeps the value canonical (reduced, positive
/// denominator), so string round-trips are bit-stable.
using Rational = mpq_class;

/// "num/den" (always with the denominator, so parsing is unambiguous).
std::string rational_to_string(const Rational& q);

/// Accepts "n", "n/d", with optional sign. Returns nullopt on malformed text.
std::optional<Rational> rational_from_string(const std::string& text);

/// True when q is the square of a rational; root receives the nonnegative root.
bool rational_square_root(const Rational& q, Rational& root);

}  // namespace qtaft
