#pragma once

#include <gmpxx.h>

#include <string>

namespace stirshare {

/// Arbitrary-precision signed integer.
using BigInt = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator (GMP canonical form).
using Rat = mpq_class;

/// Builds num/den in canonical form. Throws std::domain_error on den == 0.
Rat make_rat(const BigInt& num, const BigInt& den);

/// "p/q" rendering; integers are written with an explicit "/1".
std::string to_fraction_string(const Rat& r);

/// Decimal rendering of an integer.
std::string to_decimal_string(const BigInt& v);

BigInt factorial(int n);

/// C(n, k), zero when k < 0 or k > n. Requires n >= 0.
BigInt binomial(int n, int k);

/// Integer power, exponent >= 0.
BigInt ipow(const BigInt& base, int exponent);

}  // namespace stirshare
