#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace locbasis {

/// Exact rational coefficient. GMP keeps it canonical (reduced, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q" or "p" (denominator 1). Parsed values are canonicalized.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Largest integer not exceeding q.
Integer floor(const Rational& q);

} // namespace locbasis
