#include "stirshare/coefftab.hpp"

#include "stirshare/stirling.hpp"

#include <stdexcept>
#include <string>

namespace stirshare {

namespace {

void check_range(int n, int k, int j) {
  if (n < 1 || k < 0 || k > n - 1 || j < 0 || j > n - k) {
    throw std::out_of_range("coefficient index out of range: (" + std::to_string(n) + "," +
                            std::to_string(k) + "," + std::to_string(j) + ")");
  }
}

const BigInt& zero_int() {
  static const BigInt zero = 0;
  return zero;
}

}  // namespace

BigInt zeta_direct(int n, int k, int j) {
  check_range(n, k, j);
  if (j == n - k) return 0;
  if (j == 0) return k == n - 1 ? 1 : 0;
  if (j == 1) return binomial(n - 1, k + 1);
  BigInt sum = 0;
  for (int m = 0; m <= n - 1 - k - j; ++m) {
    sum += ipow(BigInt(j), m) * binomial(k + m, k) * stirling_second(n - 1 - k - m, j);
  }
  return sum;
}

BigInt eps_direct(int n, int k, int j) {
  check_range(n, k, j);
  if (j == n - k) return 1;
  if (j == 0) return 0;
  if (j == 1) return binomial(n - 1, k);
  BigInt sum = 0;
  for (int m = 0; m <= n - k - j; ++m) {
    sum += ipow(BigInt(j), m) * binomial(k + m, k) * stirling_second(n - 1 - k - m, j - 1);
  }
  return sum;
}

ZetaEpsTable::ZetaEpsTable(int max_n) : max_n_(max_n) {
  if (max_n < 1) throw std::invalid_argument("zeta/eps table requires max_n >= 1");
  auto shape = [](int n) {
    std::vector<std::vector<BigInt>> level(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) level[k].assign(static_cast<std::size_t>(n - k) + 1, BigInt(0));
    return level;
  };
  zeta_.resize(static_cast<std::size_t>(max_n) + 1);
  eps_.resize(static_cast<std::size_t>(max_n) + 1);
  zeta_[1] = shape(1);
  eps_[1] = shape(1);
  zeta_[1][0] = {BigInt(1), BigInt(0)};
  eps_[1][0] = {BigInt(0), BigInt(1)};

  for (int n = 1; n < max_n; ++n) {
    zeta_[n + 1] = shape(n + 1);
    eps_[n + 1] = shape(n + 1);
    for (int j = 0; j <= n + 1; ++j) {
      zeta_[n + 1][0][j] = j * zeta(n, 0, j) + stirling_second(n, j);
      eps_[n + 1][0][j] = j * eps(n, 0, j) + stirling_second(n, j - 1);
    }
    for (int k = 1; k <= n; ++k) {
      for (int j = 0; j <= n + 1 - k; ++j) {
        zeta_[n + 1][k][j] = j * zeta(n, k, j) + zeta(n, k - 1, j);
        eps_[n + 1][k][j] = j * eps(n, k, j) + eps(n, k - 1, j);
      }
    }
  }
}

bool ZetaEpsTable::contains(int n, int k, int j) const {
  return n >= 1 && n <= max_n_ && k >= 0 && k <= n - 1 && j >= 0 && j <= n - k;
}

const BigInt& ZetaEpsTable::zeta(int n, int k, int j) const {
  if (n > max_n_) throw std::out_of_range("zeta table bound exceeded");
  return contains(n, k, j) ? zeta_[n][k][j] : zero_int();
}

const BigInt& ZetaEpsTable::eps(int n, int k, int j) const {
  if (n > max_n_) throw std::out_of_range("eps table bound exceeded");
  return contains(n, k, j) ? eps_[n][k][j] : zero_int();
}

RingElem b_coeff(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw std::out_of_range("b_{n,k} requires 1 <= k <= n");
  return RingElem::term(Rat(stirling_second(n, k)), {n - k, k, 0});
}

ExpPoly beta_coeff(int n, int k) {
  if (n < 1 || k < 0 || k > n - 1) throw std::out_of_range("beta_{n,k} requires 0 <= k <= n-1");
  ExpPoly out;
  for (int j = 0; j <= n - k; ++j) {
    const int c_pow = n - k - j - 1;
    RingElem coeff = RingElem::term(Rat(zeta_direct(n, k, j)), {c_pow, j, 0}) -
                     RingElem::term(Rat(eps_direct(n, k, j)), {c_pow + 1, j, 0});
    out += ExpPoly::term(j, coeff);
  }
  return out;
}

std::vector<BigInt> lahiri_d_by_recursion(int n) {
  if (n < 2) throw std::invalid_argument("Lahiri coefficients require n >= 2");
  std::vector<BigInt> d(static_cast<std::size_t>(n) + 1, BigInt(0));  // 1-based
  d[n] = 1;
  for (int p = n - 1; p >= 1; --p) {
    BigInt value = stirling_second(n, p);
    if ((n - p + 1) % 2 != 0) value = -value;
    for (int j = p + 1; j <= n - 1; ++j) {
      BigInt term = stirling_second(j, p) * d[j];
      if ((j - p) % 2 == 0) {
        value -= term;
      } else {
        value += term;
      }
    }
    d[p] = value;
  }
  return {d.begin() + 1, d.end()};
}

LahiriCoeffs lahiri_coefficients(int n) {
  if (n < 2) throw std::invalid_argument("Lahiri coefficients require n >= 2");
  LahiriCoeffs out;
  out.n = n;
  out.d = lahiri_d_by_recursion(n);
  for (int j = 1; j <= n; ++j) {
    const BigInt s = stirling_first(n, j);
    BigInt magnitude = s;
    if ((n - j) % 2 != 0) magnitude = -magnitude;
    if (magnitude != out.d[j - 1]) {
      throw std::logic_error("d_k from the triangular system differs from |s(n,k)| at k = " +
                             std::to_string(j));
    }
    out.a.push_back(RingElem::term(Rat(s), {n - j, 0, 1}));
  }
  return out;
}

BigInt lemma3_zeta_sum(const ZetaEpsTable& table, int n, int k, int p) {
  BigInt sum = 0;
  for (int j = p + k; j <= n; ++j) sum += stirling_first(n, j) * table.zeta(j, k, p);
  return sum;
}

BigInt lemma3_eps_sum(const ZetaEpsTable& table, int n, int k, int p) {
  BigInt sum = 0;
  for (int j = p + k; j <= n; ++j) {
    const BigInt& e = (j == p + k && j >= 1) ? BigInt(1) : table.eps(j, k, p);
    sum += stirling_first(n, j) * e;
  }
  return sum;
}

}  // namespace stirshare
