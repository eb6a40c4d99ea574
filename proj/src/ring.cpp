#include "stirshare/ring.hpp"

#include <stdexcept>

namespace stirshare {

void check_monomial(const Monomial& m) {
  if (m.lambda_pow < 0) throw std::domain_error("negative power of lambda in parameter ring");
  if (m.an_pow < 0 || m.an_pow > 1) throw std::domain_error("a_n must occur at most linearly");
}

Monomial operator*(const Monomial& x, const Monomial& y) {
  Monomial out{x.c_pow + y.c_pow, x.lambda_pow + y.lambda_pow, x.an_pow + y.an_pow};
  check_monomial(out);
  return out;
}

RingElem::RingElem(const Rat& constant) { add_term({}, constant); }

RingElem::RingElem(int constant) { add_term({}, Rat(constant)); }

RingElem RingElem::term(const Rat& coeff, const Monomial& m) {
  check_monomial(m);
  RingElem out;
  out.add_term(m, coeff);
  return out;
}

void RingElem::add_term(const Monomial& m, const Rat& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

RingElem& RingElem::operator+=(const RingElem& other) {
  for (const auto& [m, q] : other.terms_) add_term(m, q);
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& other) {
  for (const auto& [m, q] : other.terms_) add_term(m, -q);
  return *this;
}

RingElem& RingElem::operator*=(const RingElem& other) {
  *this = *this * other;
  return *this;
}

RingElem operator*(const RingElem& x, const RingElem& y) {
  RingElem out;
  for (const auto& [mx, qx] : x.terms_) {
    for (const auto& [my, qy] : y.terms_) {
      out.add_term(mx * my, Rat(qx * qy));
    }
  }
  return out;
}

RingElem operator-(const RingElem& x) {
  RingElem out;
  for (const auto& [m, q] : x.terms_) out.terms_.emplace(m, Rat(-q));
  return out;
}

ExpPoly::ExpPoly(const RingElem& constant) { add_term(0, constant); }

ExpPoly::ExpPoly(int constant) { add_term(0, RingElem(constant)); }

ExpPoly ExpPoly::term(int p, const RingElem& coeff) {
  if (p < 0) throw std::domain_error("negative exponential power");
  ExpPoly out;
  out.add_term(p, coeff);
  return out;
}

RingElem ExpPoly::coeff(int p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? RingElem() : it->second;
}

void ExpPoly::add_term(int p, const RingElem& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(p, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& other) {
  for (const auto& [p, q] : other.terms_) add_term(p, q);
  return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& other) {
  for (const auto& [p, q] : other.terms_) add_term(p, -q);
  return *this;
}

ExpPoly operator-(const ExpPoly& x) {
  ExpPoly out;
  for (const auto& [p, q] : x.terms_) out.terms_.emplace(p, -q);
  return out;
}

ExpPoly operator*(const ExpPoly& x, const ExpPoly& y) {
  ExpPoly out;
  for (const auto& [px, qx] : x.terms_) {
    for (const auto& [py, qy] : y.terms_) out.add_term(px + py, qx * qy);
  }
  return out;
}

ExpPoly operator*(const RingElem& r, const ExpPoly& x) {
  ExpPoly out;
  for (const auto& [p, q] : x.terms_) out.add_term(p, r * q);
  return out;
}

ExpPoly expoly_derive(const ExpPoly& x) {
  ExpPoly out;
  for (const auto& [p, q] : x.terms()) {
    if (p == 0) continue;
    out += ExpPoly::term(p, RingElem::term(p, {1, 0, 0}) * q);
  }
  return out;
}

RingElem at_unit_exponential(const ExpPoly& x) {
  RingElem out;
  for (const auto& [p, q] : x.terms()) {
    for (const auto& [m, r] : q.terms()) {
      Monomial shifted = m;
      shifted.lambda_pow -= p;
      out += RingElem::term(r, shifted);
    }
  }
  return out;
}

RingElem at_vanishing_exponential(const ExpPoly& x) { return x.coeff(0); }

}  // namespace stirshare
