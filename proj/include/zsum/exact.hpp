#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace zsum {

// Counted quantities routinely exceed 64 bits (C(67,33) already does), so
// every count is an unbounded integer and serialization is always a decimal
// string, never floating point.
using Int = mpz_class;
using Count = mpz_class;

// Canonical form (gcd(|num|, den) = 1, den > 0) is maintained by every
// factory and by mpq arithmetic.
using Rational = mpq_class;

// C(n,k); returns 0 when k < 0 or k > n.
Count binomial(unsigned long n, long k);

// num/den in canonical form. den == 0 is BadArgs.
Rational make_rational(Int num, Int den);

// Accepts "252", "-3", "5/6", "-3/2"; result is canonical.
Rational parse_rational(std::string_view text);

std::string to_decimal(const Int& v);

// "n" when the value is integral, otherwise "n/d".
std::string to_decimal(const Rational& q);

}  // namespace zsum
