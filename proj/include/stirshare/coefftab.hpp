#pragma once

#include "stirshare/rational.hpp"
#include "stirshare/ring.hpp"

#include <vector>

namespace stirshare {

/// zeta_{n,k,j} from its defining sums, for n >= 1, 0 <= k <= n-1,
/// 0 <= j <= n-k. Out-of-range indices throw std::out_of_range.
BigInt zeta_direct(int n, int k, int j);

/// eps_{n,k,j} from its defining sums; same index range as zeta_direct.
BigInt eps_direct(int n, int k, int j);

/// Both coefficient families for 1 <= n <= max_n, built by the recursions
///   zeta_{n+1,k,j} = j zeta_{n,k,j} + zeta_{n,k-1,j}   (k >= 1)
///   zeta_{n+1,0,j} = j zeta_{n,0,j} + S(n,j)
/// and the eps analogues (with S(n,j-1) for k = 0), from the n = 1 seeds.
class ZetaEpsTable {
 public:
  explicit ZetaEpsTable(int max_n);

  int max_n() const { return max_n_; }

  /// Total lookups: zero whenever n < 1, k < 0, k >= n or j outside [0, n-k].
  /// Throws std::out_of_range for n > max_n.
  const BigInt& zeta(int n, int k, int j) const;
  const BigInt& eps(int n, int k, int j) const;

  /// True iff (n,k,j) lies in the stored range.
  bool contains(int n, int k, int j) const;

 private:
  int max_n_;
  // [n][k][j]; index 0 in n is unused.
  std::vector<std::vector<std::vector<BigInt>>> zeta_;
  std::vector<std::vector<std::vector<BigInt>>> eps_;
};

inline ZetaEpsTable zeta_eps_recursive(int max_n) { return ZetaEpsTable(max_n); }

/// b_{n,k} = S(n,k) lambda^k c^{n-k}, 1 <= k <= n.
RingElem b_coeff(int n, int k);

/// beta_{n,k} = sum_{j=0}^{n-k} (zeta_{n,k,j} - c eps_{n,k,j}) c^{n-k-j-1} lambda^j e^{jcz}.
ExpPoly beta_coeff(int n, int k);

/// Coefficients a_1..a_n forced on L(f) when f, f' and L(f) share alpha
/// with f' - alpha = lambda e^{cz} (f - alpha).
struct LahiriCoeffs {
  int n = 0;
  /// a[j-1] = a_j = a_n c^{n-j} s(n,j), j = 1..n.
  std::vector<RingElem> a;
  /// d[k-1] = d_k = |s(n,k)|, obtained independently from the triangular
  /// system sum_{j=p}^{n} a_j S(j,p) c^{j-p} = 0.
  std::vector<BigInt> d;

  const RingElem& a_j(int j) const { return a.at(static_cast<std::size_t>(j - 1)); }
  const BigInt& d_k(int k) const { return d.at(static_cast<std::size_t>(k - 1)); }
};

/// Throws std::invalid_argument for n < 2 and std::logic_error if the two
/// routes for d_k disagree.
LahiriCoeffs lahiri_coefficients(int n);

/// d_p = (-1)^{n-p+1} S(n,p) - sum_{j=p+1}^{n-1} (-1)^{j-p} S(j,p) d_j, d_n = 1.
std::vector<BigInt> lahiri_d_by_recursion(int n);

/// sum_{j=p+k}^{n} s(n,j) zeta_{j,k,p}
BigInt lemma3_zeta_sum(const ZetaEpsTable& table, int n, int k, int p);

/// sum_{j=p+k}^{n} s(n,j) eps_{j,k,p}. The j = p+k term uses the boundary
/// value eps_{p+k,k,p} = 1, which for p = 0 extends the j = n-k convention
/// to eps_{k,k,0}.
BigInt lemma3_eps_sum(const ZetaEpsTable& table, int n, int k, int p);

}  // namespace stirshare
