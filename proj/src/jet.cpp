#include "stirshare/jet.hpp"

#include "stirshare/stirling.hpp"

#include <stdexcept>

namespace stirshare {

ExpPoly AlphaJet::alpha_coeff(int k) const {
  auto it = apart.find(k);
  return it == apart.end() ? ExpPoly() : it->second;
}

void AlphaJet::canonicalize() {
  std::erase_if(apart, [](const auto& kv) { return kv.second.is_zero(); });
}

AlphaJet jet_of_f() { return AlphaJet{ExpPoly(1), {}}; }

AlphaJet jet_of_alpha(int k) {
  if (k < 0) throw std::invalid_argument("negative derivative order");
  return AlphaJet{ExpPoly(), {{k, ExpPoly(1)}}};
}

AlphaJet jet_derive(const AlphaJet& jet) {
  const ExpPoly e = ExpPoly::lambda_e(1);
  AlphaJet out;
  out.fpart = expoly_derive(jet.fpart) + jet.fpart * e;
  out.apart[0] = jet.fpart * (ExpPoly(1) - e);
  for (const auto& [k, coeff] : jet.apart) {
    out.apart[k] += expoly_derive(coeff);
    out.apart[k + 1] += coeff;
  }
  out.canonicalize();
  return out;
}

std::vector<AlphaJet> build_AB_sequence(int n) {
  if (n < 1) throw std::invalid_argument("derivative jets require n >= 1");
  std::vector<AlphaJet> out;
  out.reserve(static_cast<std::size_t>(n));
  AlphaJet jet = jet_derive(jet_of_f());
  out.push_back(jet);
  for (int i = 2; i <= n; ++i) {
    jet = jet_derive(jet);
    out.push_back(jet);
  }
  return out;
}

AlphaJet build_AB(int n) { return build_AB_sequence(n).back(); }

AlphaJet assemble_AB_closed(int n) {
  if (n < 1) throw std::invalid_argument("derivative jets require n >= 1");
  AlphaJet out;
  for (int k = 1; k <= n; ++k) out.fpart += ExpPoly::term(k, b_coeff(n, k));
  for (int k = 0; k <= n - 1; ++k) out.apart[k] = beta_coeff(n, k);
  out.canonicalize();
  return out;
}

ExpPoly build_C1(std::span<const RingElem> a) {
  const int n = static_cast<int>(a.size());
  if (n < 1) throw std::invalid_argument("C_1 needs at least one coefficient");
  ExpPoly out = -ExpPoly::term(n, a.back() * RingElem::lambda(n));
  for (int j = 1; j <= n; ++j) {
    ExpPoly a_j_part;
    for (int k = 1; k <= j; ++k) a_j_part += ExpPoly::term(k, b_coeff(j, k));
    out += a[j - 1] * a_j_part;
  }
  return out;
}

namespace {

ExpPoly leading_factor(int n) {
  // 1 - a_n lambda^n e^{ncz}
  return ExpPoly(1) - ExpPoly::term(n, RingElem::an() * RingElem::lambda(n));
}

OdeSpec alpha_ode_assembled(int n) {
  const LahiriCoeffs lahiri = lahiri_coefficients(n);
  const std::vector<AlphaJet> jets = build_AB_sequence(n);
  OdeSpec out{n, std::vector<ExpPoly>(static_cast<std::size_t>(n))};
  out.coeffs[0] = leading_factor(n);
  for (int j = 1; j <= n; ++j) {
    for (const auto& [k, coeff] : jets[j - 1].apart) {
      out.coeffs.at(static_cast<std::size_t>(k)) -= lahiri.a_j(j) * coeff;
    }
  }
  return out;
}

OdeSpec alpha_ode_closed(int n) {
  OdeSpec out{n, std::vector<ExpPoly>(static_cast<std::size_t>(n))};
  const RingElem scale = RingElem::c(n - 1) * RingElem::an();
  for (int k = 0; k <= n - 1; ++k) {
    out.coeffs[k] = -(scale * x_coefficient(n, k));
  }
  out.coeffs[0] += leading_factor(n);
  return out;
}

}  // namespace

ExpPoly x_coefficient(int n, int k) {
  if (n < 1 || k < 0 || k > n - 1) throw std::out_of_range("X_k requires 0 <= k <= n-1");
  ExpPoly out = ExpPoly::term(0, RingElem::term(Rat(stirling_first(n, k + 1)), {-k, 0, 0}));
  for (int p = 1; p <= n - k; ++p) {
    RingElem coeff = RingElem::term(Rat(stirling_first(n - p, k + 1)), {-k - p, p, 0}) -
                     RingElem::term(Rat(stirling_first(n - p, k)), {1 - k - p, p, 0});
    out += ExpPoly::term(p, coeff);
  }
  return out;
}

OdeSpec build_alpha_ode(int n, OdeMethod method) {
  if (n < 2) throw std::invalid_argument("the alpha equation requires n >= 2");
  return method == OdeMethod::assembled ? alpha_ode_assembled(n) : alpha_ode_closed(n);
}

EliminationReport eliminate_alpha(int n) {
  if (n < 2) throw std::invalid_argument("elimination requires n >= 2");
  return eliminate_alpha(n, lahiri_coefficients(n).a_j(1));
}

EliminationReport eliminate_alpha(int n, const RingElem& a1) {
  if (n < 2) throw std::invalid_argument("elimination requires n >= 2");
  const ExpPoly e = ExpPoly::lambda_e(1);
  const ExpPoly an_top = ExpPoly::term(n, RingElem::an() * RingElem::lambda(n));
  EliminationReport out;
  out.n = n;
  out.f_coeff = e - an_top;
  out.fprime_coeff = a1 * (ExpPoly(1) - e) - (ExpPoly(1) - an_top);
  const RingElem at_f = at_unit_exponential(out.f_coeff);
  const RingElem at_fp = at_unit_exponential(out.fprime_coeff);
  if (!(at_f + at_fp).is_zero()) {
    throw std::logic_error("numerator on the singular set is not a multiple of f - f'");
  }
  out.singular_factor = at_f;
  out.e0_f = at_vanishing_exponential(out.f_coeff);
  out.e0_fprime = at_vanishing_exponential(out.fprime_coeff);
  return out;
}

}  // namespace stirshare
