#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace covg {

/// Exact rational number; always canonical (reduced, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p" or "p/q" (optional leading sign). Throws Errc::Parse.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& q);

}  // namespace covg
