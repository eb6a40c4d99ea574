#pragma once

#include "stirshare/rational.hpp"

#include <compare>
#include <map>

namespace stirshare {

/// c^c_pow * lambda^lambda_pow * a_n^an_pow. c may carry negative powers;
/// lambda powers are non-negative and a_n occurs at most linearly.
struct Monomial {
  int c_pow = 0;
  int lambda_pow = 0;
  int an_pow = 0;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

/// Throws std::domain_error if the exponents leave the parameter ring.
void check_monomial(const Monomial& m);

Monomial operator*(const Monomial& x, const Monomial& y);

/// Element of Q[c, 1/c, lambda, a_n]/(a_n^2): a finite map from monomials
/// to nonzero rationals. Map equality is mathematical equality.
class RingElem {
 public:
  using Terms = std::map<Monomial, Rat>;

  RingElem() = default;
  RingElem(const Rat& constant);  // NOLINT: implicit on purpose, scalars embed
  RingElem(int constant);         // NOLINT

  static RingElem term(const Rat& coeff, const Monomial& m);
  static RingElem c(int pow = 1) { return term(1, {pow, 0, 0}); }
  static RingElem lambda(int pow = 1) { return term(1, {0, pow, 0}); }
  static RingElem an() { return term(1, {0, 0, 1}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  RingElem& operator+=(const RingElem& other);
  RingElem& operator-=(const RingElem& other);
  RingElem& operator*=(const RingElem& other);

  friend RingElem operator+(RingElem x, const RingElem& y) { return x += y; }
  friend RingElem operator-(RingElem x, const RingElem& y) { return x -= y; }
  friend RingElem operator*(const RingElem& x, const RingElem& y);
  friend RingElem operator-(const RingElem& x);
  friend bool operator==(const RingElem& x, const RingElem& y) { return x.terms_ == y.terms_; }

 private:
  void add_term(const Monomial& m, const Rat& coeff);

  Terms terms_;
};

/// Finite sum sum_p q_p e^{p c z}, p >= 0, with q_p in the parameter ring.
/// The factor lambda^p of (lambda e^{cz})^p stays inside q_p.
class ExpPoly {
 public:
  using Terms = std::map<int, RingElem>;

  ExpPoly() = default;
  ExpPoly(const RingElem& constant);  // NOLINT
  ExpPoly(int constant);              // NOLINT

  /// coeff * e^{p c z}
  static ExpPoly term(int p, const RingElem& coeff);
  /// (lambda e^{cz})^p
  static ExpPoly lambda_e(int p = 1) { return term(p, RingElem::lambda(p)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of e^{pcz} (zero if absent).
  RingElem coeff(int p) const;
  int max_power() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

  ExpPoly& operator+=(const ExpPoly& other);
  ExpPoly& operator-=(const ExpPoly& other);

  friend ExpPoly operator+(ExpPoly x, const ExpPoly& y) { return x += y; }
  friend ExpPoly operator-(ExpPoly x, const ExpPoly& y) { return x -= y; }
  friend ExpPoly operator-(const ExpPoly& x);
  friend ExpPoly operator*(const ExpPoly& x, const ExpPoly& y);
  friend ExpPoly operator*(const RingElem& r, const ExpPoly& x);
  friend bool operator==(const ExpPoly& x, const ExpPoly& y) { return x.terms_ == y.terms_; }

 private:
  void add_term(int p, const RingElem& coeff);

  Terms terms_;
};

inline ExpPoly expoly_add(const ExpPoly& x, const ExpPoly& y) { return x + y; }
inline ExpPoly expoly_mul(const ExpPoly& x, const ExpPoly& y) { return x * y; }
inline ExpPoly expoly_scale(const RingElem& r, const ExpPoly& x) { return r * x; }

/// d/dz: e^{pcz} -> p c e^{pcz}.
ExpPoly expoly_derive(const ExpPoly& x);

/// Value on the singular set lambda e^{cz} = 1, i.e. e^{pcz} -> lambda^{-p}.
/// Throws std::domain_error if a term carries fewer than p powers of lambda.
RingElem at_unit_exponential(const ExpPoly& x);

/// Value in the limit e^{cz} -> 0: the p = 0 coefficient.
RingElem at_vanishing_exponential(const ExpPoly& x);

}  // namespace stirshare
