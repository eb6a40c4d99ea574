#include "stirshare/stirling.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

namespace stirshare {

namespace {

const BigInt& zero_int() {
  static const BigInt zero = 0;
  return zero;
}

}  // namespace

StirlingTable::StirlingTable(StirlingKind kind, int max_n) : kind_(kind), max_n_(max_n) {
  if (max_n < 0) throw std::invalid_argument("Stirling table bound must be non-negative");
  rows_.resize(static_cast<std::size_t>(max_n) + 1);
  rows_[0] = {BigInt(1)};
  for (int n = 1; n <= max_n; ++n) {
    const auto& prev = rows_[n - 1];
    auto& cur = rows_[n];
    cur.assign(static_cast<std::size_t>(n) + 1, BigInt(0));
    // Row n is built from row n-1; prev[k] is zero for k = n.
    for (int k = 1; k <= n; ++k) {
      const BigInt& left = prev[k - 1];
      const BigInt& same = k <= n - 1 ? prev[k] : zero_int();
      if (kind == StirlingKind::second) {
        cur[k] = left + k * same;
      } else {
        cur[k] = left - (n - 1) * same;
      }
    }
  }
}

const BigInt& StirlingTable::at(int n, int k) const {
  if (n < 0) throw std::invalid_argument("Stirling number with negative n");
  if (n > max_n_) throw std::out_of_range("Stirling table bound exceeded: n = " + std::to_string(n));
  if (k < 0 || k > n) return zero_int();
  return rows_[n][k];
}

std::span<const BigInt> StirlingTable::row(int n) const {
  if (n < 0 || n > max_n_) throw std::out_of_range("Stirling table row out of range");
  return rows_[n];
}

std::shared_ptr<const StirlingTable> shared_stirling_table(StirlingKind kind, int max_n) {
  static std::mutex mutex;
  static std::shared_ptr<const StirlingTable> first;
  static std::shared_ptr<const StirlingTable> second;
  if (max_n < 0) throw std::invalid_argument("Stirling number with negative n");
  std::lock_guard lock(mutex);
  auto& slot = kind == StirlingKind::first ? first : second;
  if (!slot || slot->max_n() < max_n) {
    int bound = max_n < 64 ? 64 : max_n;
    if (slot && slot->max_n() * 2 > bound) bound = slot->max_n() * 2;
    slot = std::make_shared<const StirlingTable>(kind, bound);
  }
  return slot;
}

BigInt stirling_second(int n, int k) {
  if (n < 0) throw std::invalid_argument("S(n,k) requires n >= 0");
  return shared_stirling_table(StirlingKind::second, n)->at(n, k);
}

BigInt stirling_first(int n, int k) {
  if (n < 0) throw std::invalid_argument("s(n,k) requires n >= 0");
  return shared_stirling_table(StirlingKind::first, n)->at(n, k);
}

BigInt stirling_second_closed(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("closed form for S(n,k) requires 1 <= k <= n");
  BigInt sum = 0;
  for (int m = 1; m <= k; ++m) {
    BigInt term = binomial(k, m) * ipow(BigInt(m), n);
    if ((k - m) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  const BigInt kf = factorial(k);
  if (!mpz_divisible_p(sum.get_mpz_t(), kf.get_mpz_t())) {
    throw std::logic_error("inexact division in closed form for S(n,k)");
  }
  BigInt out;
  mpz_divexact(out.get_mpz_t(), sum.get_mpz_t(), kf.get_mpz_t());
  return out;
}

std::vector<BigInt> falling_factorial_coeffs(int n) {
  if (n < 0) throw std::invalid_argument("falling factorial of negative order");
  std::vector<BigInt> poly{BigInt(1)};
  for (int i = 0; i < n; ++i) {
    // poly *= (t - i)
    std::vector<BigInt> next(poly.size() + 1, BigInt(0));
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] += poly[d];
      next[d] -= i * poly[d];
    }
    poly = std::move(next);
  }
  return poly;
}

}  // namespace stirshare
