#include "stirshare/rational.hpp"

#include <stdexcept>

namespace stirshare {

Rat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_fraction_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_decimal_string(const BigInt& v) { return v.get_str(); }

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative integer");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("binomial with negative upper index");
  if (k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt ipow(const BigInt& base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent in integer power");
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
  return out;
}

}  // namespace stirshare
