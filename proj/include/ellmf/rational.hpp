#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ellmf {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses `-?[0-9]+(/[1-9][0-9]*)?`. Throws ParseError on anything else,
/// including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical rendering: "n" for integers, "p/q" with q > 1 otherwise.
std::string to_string(const Rational& q);

}  // namespace ellmf
