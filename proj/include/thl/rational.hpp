#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace thl {

// mpq_class keeps numerator/denominator canonical (gcd 1, denominator > 0).
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "p/q", "-p/q". Throws ParseError on anything else, including q = 0.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& x);

} // namespace thl
