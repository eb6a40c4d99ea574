#pragma once

#include "stirshare/rational.hpp"

#include <memory>
#include <span>
#include <vector>

namespace stirshare {

enum class StirlingKind { first, second };

/// Triangular table t[n][k], 0 <= k <= n <= max_n, of signed Stirling
/// numbers s(n,k) (first kind) or S(n,k) (second kind).
///
/// Lookups are total in k: negative k and k > n give 0, matching the
/// usual conventions S(n,-1) = 0, S(n,k) = 0 for k > n. The table is
/// immutable after construction.
class StirlingTable {
 public:
  StirlingTable(StirlingKind kind, int max_n);

  StirlingKind kind() const { return kind_; }
  int max_n() const { return max_n_; }

  /// Throws std::invalid_argument for n < 0, std::out_of_range for n > max_n.
  const BigInt& at(int n, int k) const;

  /// Entries k = 0..n of row n.
  std::span<const BigInt> row(int n) const;

 private:
  StirlingKind kind_;
  int max_n_;
  std::vector<std::vector<BigInt>> rows_;
};

/// Process-wide table covering at least max_n. Tables are never mutated;
/// a request beyond the cached bound builds a fresh, larger table.
std::shared_ptr<const StirlingTable> shared_stirling_table(StirlingKind kind, int max_n);

/// S(n,k) by S(n,k) = S(n-1,k-1) + k S(n-1,k). Negative n is rejected.
BigInt stirling_second(int n, int k);

/// S(n,k) = (1/k!) sum_{m=1}^{k} (-1)^{k-m} C(k,m) m^n, for 1 <= k <= n.
/// Throws std::logic_error if the division by k! is not exact.
BigInt stirling_second_closed(int n, int k);

/// s(n,k) by s(n+1,k) = s(n,k-1) - n s(n,k). Negative n is rejected.
BigInt stirling_first(int n, int k);

/// Coefficients of t(t-1)...(t-n+1) in the monomial basis, by repeated
/// multiplication with (t - i). Entry k is s(n,k).
std::vector<BigInt> falling_factorial_coeffs(int n);

}  // namespace stirshare
