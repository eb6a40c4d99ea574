#pragma once

#include "stirshare/coefftab.hpp"
#include "stirshare/ring.hpp"

#include <map>
#include <span>
#include <vector>

namespace stirshare {

/// fpart * f + sum_k apart[k] * alpha^{(k)}, closed under d/dz through the
/// rewrite f' = lambda e^{cz} f + (1 - lambda e^{cz}) alpha.
struct AlphaJet {
  ExpPoly fpart;
  std::map<int, ExpPoly> apart;

  /// Coefficient of alpha^{(k)} (zero if absent).
  ExpPoly alpha_coeff(int k) const;
  void canonicalize();

  friend bool operator==(const AlphaJet&, const AlphaJet&) = default;
};

/// The jet of f itself.
AlphaJet jet_of_f();
/// The jet of alpha^{(k)}.
AlphaJet jet_of_alpha(int k);

AlphaJet jet_derive(const AlphaJet& jet);

/// Jet of f^{(n)}, n >= 1, i.e. A_n f + B_n, by repeated differentiation.
AlphaJet build_AB(int n);

/// Jets of f', f'', ..., f^{(n)}.
std::vector<AlphaJet> build_AB_sequence(int n);

/// A_n = sum_k b_{n,k} e^{kcz}, B_n = sum_k beta_{n,k} alpha^{(k)}.
AlphaJet assemble_AB_closed(int n);

/// C_1 = -a_n lambda^n e^{ncz} + sum_j a_j A_j with a[j-1] = a_j, a.size() = n.
/// a_n in the leading term is a.back().
ExpPoly build_C1(std::span<const RingElem> a);
inline ExpPoly build_C1(const LahiriCoeffs& coeffs) { return build_C1(coeffs.a); }

/// sum_k coeffs[k] alpha^{(k)} = 0, k = 0..n-1.
struct OdeSpec {
  int n = 0;
  std::vector<ExpPoly> coeffs;

  friend bool operator==(const OdeSpec&, const OdeSpec&) = default;
};

enum class OdeMethod { assembled, closed };

/// The order-(n-1) equation for alpha.
///  assembled: C_2 = (1 - a_n lambda^n e^{ncz}) alpha - sum_j a_j B_j from
///             the differentiated jets and the Lahiri coefficients.
///  closed:    (1 - a_n lambda^n e^{ncz}) [k = 0] - c^{n-1} a_n X_k with X_k
///             in Stirling-number form.
OdeSpec build_alpha_ode(int n, OdeMethod method);

/// X_k = c^{-k} (s(n,k+1) + sum_{p=1}^{n-k} (lambda/c)^p e^{pcz}
///                         (s(n-p,k+1) - c s(n-p,k))).
ExpPoly x_coefficient(int n, int k);

/// Numerator of the alpha-free relation between f and f':
///   lambda e^{cz} (1 - a_n lambda^{n-1} e^{(n-1)cz}) f
///     + (a_1 (1 - lambda e^{cz}) - (1 - a_n lambda^n e^{ncz})) f'.
struct EliminationReport {
  int n = 0;
  ExpPoly f_coeff;
  ExpPoly fprime_coeff;
  /// Numerator on lambda e^{cz} = 1 equals singular_factor * (f - f').
  RingElem singular_factor;
  /// Numerator as e^{cz} -> 0: e0_f * f + e0_fprime * f'.
  RingElem e0_f;
  RingElem e0_fprime;
};

/// a1 is a_1 of L(f); the Lahiri value when omitted.
EliminationReport eliminate_alpha(int n);
EliminationReport eliminate_alpha(int n, const RingElem& a1);

}  // namespace stirshare
