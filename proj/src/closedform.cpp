#include "stirshare/closedform.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace stirshare {

cplx int_pow(cplx x, int k) {
  if (k < 0) return 1.0 / int_pow(x, -k);
  cplx result = 1.0;
  cplx base = x;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

namespace {

bool is_zero(cplx x) { return x == cplx(0.0, 0.0); }

}  // namespace

N2Solution solve_n2(int s, cplx c, cplx lambda, cplx normalization) {
  if (s < 0) throw std::invalid_argument("s must be a non-negative integer");
  if (is_zero(c)) throw std::invalid_argument("c must be non-zero");
  if (is_zero(lambda)) throw std::invalid_argument("lambda must be non-zero");
  const cplx sc = static_cast<double>(s) * c;
  if (std::abs(sc - 1.0) <= 1e-14) throw std::invalid_argument("s*c = 1 is excluded");
  N2Solution out;
  out.s = s;
  out.c = c;
  out.lambda = lambda;
  out.a2 = 1.0 / (1.0 - sc);
  out.a1 = -out.a2 * c;
  out.exp_lin = (1.0 + 1.0 / (out.a2 * c)) * c;
  out.outer_pow = -1.0 + 1.0 / c - 1.0 / (out.a2 * c);
  out.normalization = normalization;
  return out;
}

cplx N2Solution::alpha(cplx z) const {
  const cplx e = lambda * std::exp(c * z);
  return normalization * std::exp(exp_lin * z) * int_pow(e - 1.0, s - 1);
}

cplx N2Solution::weighted_alpha(cplx z) const {
  const cplx e = lambda * std::exp(c * z);
  return -normalization * std::exp(exp_lin * z) * int_pow(e - 1.0, s);
}

std::vector<cplx> N2Solution::alpha_derivatives(cplx z, int max_order) const {
  if (max_order < 0 || max_order > 2) throw std::invalid_argument("n = 2 alpha derivatives available up to order 2");
  const cplx e = lambda * std::exp(c * z);
  const cplx u = e - 1.0;
  const cplx scale = normalization * std::exp(exp_lin * z);
  const int m = s - 1;
  const cplx w = exp_lin;
  // P = u^m, P' = m c e u^{m-1}, P'' = m c^2 e u^{m-1} + m (m-1) c^2 e^2 u^{m-2}
  const cplx p0 = int_pow(u, m);
  const cplx p1 = m == 0 ? 0.0 : static_cast<double>(m) * c * e * int_pow(u, m - 1);
  cplx p2 = 0.0;
  if (m != 0) p2 += static_cast<double>(m) * c * c * e * int_pow(u, m - 1);
  if (m != 0 && m != 1) p2 += static_cast<double>(m) * (m - 1) * c * c * e * e * int_pow(u, m - 2);
  std::vector<cplx> out{scale * p0};
  if (max_order >= 1) out.push_back(scale * (w * p0 + p1));
  if (max_order >= 2) out.push_back(scale * (w * w * p0 + 2.0 * w * p1 + p2));
  return out;
}

std::string N2Solution::alpha_formula() const {
  if (s == 1 && std::abs(exp_lin - 1.0) < 1e-15 && normalization == cplx(1.0, 0.0)) return "e^z";
  std::ostringstream os;
  os.precision(17);
  auto put = [&os](cplx v) {
    if (v.imag() == 0.0) {
      os << v.real();
    } else {
      os << "(" << v.real() << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag()) << "i)";
    }
  };
  if (normalization != cplx(1.0, 0.0)) {
    put(normalization);
    os << "*";
  }
  os << "exp(";
  put(exp_lin);
  os << "*z)*(";
  put(lambda);
  os << "*exp(";
  put(c);
  os << "*z) - 1)^" << (s - 1);
  return os.str();
}

cplx n2_equation_residual(cplx c, cplx lambda, cplx a2, cplx z, cplx alpha, cplx alpha_prime) {
  const cplx e = lambda * std::exp(c * z);
  return a2 * (1.0 - e) * alpha_prime - (1.0 + a2 * c - a2 * e) * alpha;
}

N2IntegrabilityReport n2_explicit_integrability(int s, cplx c) {
  if (s < 0) throw std::invalid_argument("s must be a non-negative integer");
  N2IntegrabilityReport out;
  if (is_zero(c)) return out;
  const cplx inv = 1.0 / c;
  const double rounded = std::round(inv.real());
  const double tol = 1e-12 * std::max(1.0, std::abs(inv));
  if (std::abs(inv.imag()) <= tol && std::abs(inv.real() - rounded) <= tol && rounded >= s + 1) {
    const int nu = static_cast<int>(rounded);
    out.kind = N2Integrability::explicit_form;
    out.nu = nu;
    out.a2 = make_rat(nu, nu - s);
  }
  return out;
}

N3Coefficients n3_coefficients(cplx c, cplx lambda, cplx a3, cplx z) {
  const cplx e = lambda * std::exp(c * z);
  const cplx denom = 1.0 - e;
  N3Coefficients out;
  out.a1 = (-3.0 * c + (1.0 + c) * e - e * e) / denom;
  out.a0 = -(1.0 / a3 - 2.0 * c * c + c * e - e * e) / denom;
  return out;
}

PotentialSpec n3_normal_form(cplx c, cplx lambda, cplx a3) {
  if (is_zero(c) || is_zero(lambda) || is_zero(a3)) {
    throw std::invalid_argument("normal form requires non-zero c, lambda and a_3");
  }
  PotentialSpec out;
  out.c = c;
  out.lambda = lambda;
  out.a3 = a3;
  out.poly_part = {-1.0 - c * c / 4.0, -lambda, -lambda * lambda / 4.0};
  out.pole_coeff = 1.0 / a3 - 1.0;
  return out;
}

cplx PotentialSpec::potential(cplx z) const {
  const cplx ez = std::exp(c * z);
  return poly_part[0] + poly_part[1] * ez + poly_part[2] * ez * ez + pole_coeff / (lambda * ez - 1.0);
}

std::array<cplx, 3> PotentialSpec::multiplier(cplx z) const {
  const cplx e = lambda * std::exp(c * z);
  // M = u v w with u = e - 1, v = e^{-3cz/2}, w = exp(e / (2c)).
  const cplx u0 = e - 1.0, u1 = c * e, u2 = c * c * e;
  const cplx v0 = std::exp(-1.5 * c * z), v1 = -1.5 * c * v0, v2 = 2.25 * c * c * v0;
  const cplx w0 = std::exp(e / (2.0 * c)), w1 = 0.5 * e * w0, w2 = (0.5 * c * e + 0.25 * e * e) * w0;
  return {u0 * v0 * w0,
          u1 * v0 * w0 + u0 * v1 * w0 + u0 * v0 * w1,
          u2 * v0 * w0 + u0 * v2 * w0 + u0 * v0 * w2 +
              2.0 * (u1 * v1 * w0 + u1 * v0 * w1 + u0 * v1 * w1)};
}

cplx PotentialSpec::to_B(cplx alpha, cplx z) const { return multiplier(z)[0] * alpha; }

cplx PotentialSpec::alpha_from_B(cplx B, cplx z) const {
  const cplx e = lambda * std::exp(c * z);
  return std::exp(1.5 * c * z) * std::exp(-e / (2.0 * c)) * B / (e - 1.0);
}

bool PoleCondition::satisfied_by(cplx g_at_singular_point, double tol) const {
  return !requires_vanishing || std::abs(g_at_singular_point) <= tol;
}

PoleCondition n3_pole_vanishing_condition(cplx a3) {
  if (is_zero(a3)) throw std::invalid_argument("a_3 must be non-zero");
  PoleCondition out;
  if (a3 == cplx(1.0, 0.0)) {
    out.requires_vanishing = false;
    out.description = "a3 = 1: potential has no poles; no constraint from this argument";
  } else {
    out.requires_vanishing = true;
    out.description =
        "a3 != 1: g = (1 - lambda e^{cz}) alpha must vanish wherever lambda e^{cz} = 1, so alpha is entire";
  }
  return out;
}

cplx SpecialAlphaN3::alpha(cplx z) const {
  return std::exp(-z + (2.0 * lambda / 3.0) * std::exp(-1.5 * z));
}

std::vector<cplx> SpecialAlphaN3::alpha_derivatives(cplx z, int max_order) const {
  if (max_order < 0 || max_order > 3) throw std::invalid_argument("special alpha derivatives available up to order 3");
  const cplx kappa_e = (2.0 * lambda / 3.0) * std::exp(-1.5 * z);
  const cplx a = std::exp(-z + kappa_e);
  const cplx u1 = -1.0 - 1.5 * kappa_e;
  const cplx u2 = 2.25 * kappa_e;
  const cplx u3 = -3.375 * kappa_e;
  std::vector<cplx> out{a};
  if (max_order >= 1) out.push_back(u1 * a);
  if (max_order >= 2) out.push_back((u2 + u1 * u1) * a);
  if (max_order >= 3) out.push_back((u3 + 3.0 * u1 * u2 + u1 * u1 * u1) * a);
  return out;
}

}  // namespace stirshare
