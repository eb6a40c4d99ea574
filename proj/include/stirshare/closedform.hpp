#pragma once

#include "stirshare/complex.hpp"
#include "stirshare/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace stirshare {

/// n = 2 solution family: alpha(z) = C e^{(1 + 1/(a_2 c)) c z} (lambda e^{cz} - 1)^{s-1}
/// with a_2 = 1/(1 - s c), which makes (1 - lambda e^{cz}) alpha entire.
struct N2Solution {
  int s = 0;
  cplx c;
  cplx lambda;
  cplx a2;
  cplx a1;         // -a_2 c
  cplx exp_lin;    // (1 + 1/(a_2 c)) c
  cplx outer_pow;  // -1 + 1/c - 1/(a_2 c), numerically s - 1
  cplx normalization{1.0, 0.0};

  cplx alpha(cplx z) const;
  /// (1 - lambda e^{cz}) alpha(z); finite on the whole plane.
  cplx weighted_alpha(cplx z) const;
  /// alpha, alpha', ..., up to max_order <= 2.
  std::vector<cplx> alpha_derivatives(cplx z, int max_order) const;
  /// Text form of alpha with the numeric exponents filled in.
  std::string alpha_formula() const;
};

/// Throws std::invalid_argument when s < 0, c = 0, lambda = 0 or s c = 1.
N2Solution solve_n2(int s, cplx c, cplx lambda, cplx normalization = 1.0);

/// a_2 (1 - lambda e^{cz}) alpha' - (1 + a_2 c - a_2 lambda e^{cz}) alpha.
cplx n2_equation_residual(cplx c, cplx lambda, cplx a2, cplx z, cplx alpha, cplx alpha_prime);

enum class N2Integrability { explicit_form, incomplete_gamma };

struct N2IntegrabilityReport {
  N2Integrability kind = N2Integrability::incomplete_gamma;
  std::optional<int> nu;  // 1/c when explicit
  std::optional<Rat> a2;  // nu / (nu - s) when explicit
};

/// Explicit iff 1/c is an integer nu >= s + 1.
N2IntegrabilityReport n2_explicit_integrability(int s, cplx c);

/// alpha'' + a1(z) alpha' + a0(z) alpha = 0 for n = 3, divided through by
/// the leading coefficient.
struct N3Coefficients {
  cplx a1;
  cplx a0;
};
N3Coefficients n3_coefficients(cplx c, cplx lambda, cplx a3, cplx z);

/// B'' + A(z) B = 0 with
///   A(z) = poly_part[0] + poly_part[1] e^{cz} + poly_part[2] e^{2cz}
///          + pole_coeff / (lambda e^{cz} - 1),
/// B = M alpha, M(z) = (lambda e^{cz} - 1) e^{-3cz/2} e^{(lambda/2c) e^{cz}}.
struct PotentialSpec {
  std::array<cplx, 3> poly_part;
  cplx pole_coeff;
  cplx c;
  cplx lambda;
  cplx a3;

  cplx potential(cplx z) const;
  /// M, M', M'' from the product rule on the three factors of M.
  std::array<cplx, 3> multiplier(cplx z) const;
  cplx to_B(cplx alpha, cplx z) const;
  /// alpha from (lambda e^{cz} - 1) alpha = e^{3cz/2} e^{-(lambda/2c) e^{cz}} B.
  cplx alpha_from_B(cplx B, cplx z) const;
};

PotentialSpec n3_normal_form(cplx c, cplx lambda, cplx a3);

/// Constraint on g = (1 - lambda e^{cz}) alpha at points where lambda e^{cz} = 1.
struct PoleCondition {
  bool requires_vanishing = false;
  std::string description;

  bool satisfied_by(cplx g_at_singular_point, double tol) const;
};

PoleCondition n3_pole_vanishing_condition(cplx a3);

/// alpha(z) = e^{-z} exp((2 lambda / 3) e^{-3z/2}), a solution of the n = 3
/// equation for c = -3/2, a_3 = 1.
struct SpecialAlphaN3 {
  cplx lambda;

  cplx alpha(cplx z) const;
  /// Up to max_order <= 3.
  std::vector<cplx> alpha_derivatives(cplx z, int max_order) const;
};

}  // namespace stirshare
