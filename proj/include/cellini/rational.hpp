#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cellini {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws std::domain_error on den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Lowest-terms "num/den"; the denominator is always written, so 1 is "1/1".
std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

/// Accepts "num/den" or a bare integer.
Rational parse_rational(std::string_view text);

/// Nearest double; for exploratory output only.
double to_double(const Rational& r);

}  // namespace cellini
