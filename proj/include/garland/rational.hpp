#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace garland {

using Integer = mpz_class;
using Rational = mpq_class;

/// Always "num/den", including integers ("3/1"). Used by every exact dump format.
std::string to_exact_string(const Rational& r);

/// Accepts "num/den" or a bare integer. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Nearest double; only for human-readable output and tolerance comparisons.
double to_double(const Rational& r);

}  // namespace garland
