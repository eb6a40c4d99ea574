#include <doctest.h>

#include "stirshare/emit.hpp"
#include "stirshare/identities.hpp"
#include "stirshare/jet.hpp"

using namespace stirshare;

namespace {

const RingElem an = RingElem::an();
const RingElem c = RingElem::c();
const RingElem lam = RingElem::lambda();
const ExpPoly E = ExpPoly::lambda_e(1);
const ExpPoly E2 = ExpPoly::lambda_e(2);

}  // namespace

TEST_CASE("ring canonical form") {
  CHECK((c - c).is_zero());
  CHECK(RingElem::c(-1) * c == RingElem(1));
  CHECK((lam + lam) == RingElem::term(2, {0, 1, 0}));
  CHECK(RingElem(0).is_zero());
  CHECK_THROWS_AS(RingElem::term(1, {0, -1, 0}), std::domain_error);
  CHECK_THROWS_AS(an * an, std::domain_error);
}

TEST_CASE("exponential polynomial arithmetic") {
  CHECK(expoly_add(ExpPoly(), E) == E);
  CHECK(expoly_mul(E, E) == E2);
  CHECK(expoly_scale(RingElem::c(-1), ExpPoly(c)) == ExpPoly(1));
  CHECK((E - E).is_zero());
  CHECK(E.max_power() == 1);
  CHECK(ExpPoly().max_power() == -1);
}

TEST_CASE("derivative of exponential polynomials") {
  CHECK(expoly_derive(ExpPoly(1)).is_zero());
  CHECK(expoly_derive(E) == c * E);
  CHECK(expoly_derive(E2) == RingElem(2) * c * E2);
}

TEST_CASE("evaluation at the singular set and at e^{cz} -> 0") {
  CHECK(at_unit_exponential(E) == RingElem(1));
  CHECK(at_unit_exponential(c * E2 + ExpPoly(an)) == c + an);
  CHECK_THROWS_AS(at_unit_exponential(ExpPoly::term(2, lam)), std::domain_error);
  CHECK(at_vanishing_exponential(E + ExpPoly(c)) == c);
}

TEST_CASE("jet derivative") {
  const AlphaJet d = jet_derive(jet_of_f());
  CHECK(d.fpart == E);
  CHECK(d.alpha_coeff(0) == ExpPoly(1) - E);
  CHECK(d.apart.size() == 1);

  const AlphaJet a = jet_derive(jet_of_alpha(0));
  CHECK(a.fpart.is_zero());
  CHECK(a == jet_of_alpha(1));

  const AlphaJet d2 = jet_derive(d);
  CHECK(d2.fpart == ExpPoly::term(1, c * lam) + E2);
}

TEST_CASE("f derivatives by hand") {
  const AlphaJet j1 = build_AB(1);
  CHECK(j1.fpart == E);
  CHECK(j1.alpha_coeff(0) == ExpPoly(1) - E);

  // f'' = (E' + E^2) f + (E - E^2 - E') alpha + (1 - E) alpha'
  const AlphaJet j2 = build_AB(2);
  CHECK(j2.alpha_coeff(0) == ExpPoly::term(1, (RingElem(1) - c) * lam) - E2);
  CHECK(j2.alpha_coeff(1) == ExpPoly(1) - E);

  const AlphaJet j3 = build_AB(3);
  const ExpPoly expected = ExpPoly::term(1, c * c * lam) + ExpPoly::term(2, RingElem(3) * c * RingElem::lambda(2)) +
                           ExpPoly::lambda_e(3);
  CHECK(j3.fpart == expected);
  CHECK_THROWS(build_AB(0));
}

TEST_CASE("jet sweep up to 12") {
  for (const auto& r : jet_suite(12)) {
    CAPTURE(format_result(r));
    CHECK(r.pass());
  }
}

TEST_CASE("C1 with correct and wrong coefficients") {
  CHECK(build_C1(lahiri_coefficients(2)).is_zero());
  CHECK(build_C1(lahiri_coefficients(3)).is_zero());
  const std::vector<RingElem> wrong{RingElem(0), an};
  CHECK(build_C1(wrong) == ExpPoly::term(1, c * an * lam));
}

TEST_CASE("alpha equation n = 2 and n = 3") {
  const OdeSpec o2 = build_alpha_ode(2, OdeMethod::assembled);
  REQUIRE(o2.coeffs.size() == 2);
  CHECK(o2.coeffs[0] == ExpPoly(1) + ExpPoly(an * c) - an * E);
  CHECK(o2.coeffs[1] == -ExpPoly(an) + an * E);
  CHECK(o2 == build_alpha_ode(2, OdeMethod::closed));

  const OdeSpec o3 = build_alpha_ode(3, OdeMethod::assembled);
  REQUIRE(o3.coeffs.size() == 3);
  CHECK(o3.coeffs[0] == ExpPoly(1) - an * (ExpPoly(RingElem(2) * c * c) - c * E + E2));
  CHECK(o3.coeffs[1] == -(an * (ExpPoly(RingElem(-3) * c) + (RingElem(1) + c) * E - E2)));
  CHECK(o3.coeffs[2] == -(an * (ExpPoly(1) - E)));
  CHECK_THROWS_AS(build_alpha_ode(1, OdeMethod::closed), std::invalid_argument);
}

TEST_CASE("X coefficients") {
  // X_{n-1} = 1 - E after scaling by c^{n-1}
  for (int n = 2; n <= 8; ++n) {
    CHECK(RingElem::c(n - 1) * x_coefficient(n, n - 1) == ExpPoly(1) - E);
  }
  CHECK_THROWS(x_coefficient(3, 3));
}

TEST_CASE("alpha equation sweep up to 12") {
  for (const auto& r : alpha_equation_suite(12)) {
    CAPTURE(format_result(r));
    CHECK(r.pass());
  }
}

TEST_CASE("alpha elimination") {
  const EliminationReport r2 = eliminate_alpha(2);
  CHECK(r2.singular_factor == RingElem(1) - an);
  CHECK(r2.e0_f.is_zero());
  CHECK(r2.e0_fprime == RingElem::term(-1, {1, 0, 1}) - RingElem(1));
  CHECK(r2.f_coeff == E - an * E2);

  const EliminationReport generic = eliminate_alpha(3, RingElem::term(5, {0, 0, 0}));
  CHECK(generic.e0_fprime == RingElem(4));
}

TEST_CASE("text, latex and json emission") {
  const OdeSpec o2 = build_alpha_ode(2, OdeMethod::closed);
  CHECK(to_text(o2) ==
        "coeff[0] (alpha) = 1 + a_n*c - a_n*lambda*e^{cz}\n"
        "coeff[1] (alpha^(1)) = -a_n + a_n*lambda*e^{cz}\n");
  const std::string latex = to_latex(o2);
  CHECK(latex.find("\\lambda") != std::string::npos);
  CHECK(latex.find("\\alpha^{(1)}") != std::string::npos);

  const Json j = to_json(o2);
  CHECK(j["n"] == 2);
  CHECK(j["coeffs"].size() == 2);
  CHECK(j.dump() == to_json(build_alpha_ode(2, OdeMethod::assembled)).dump());
  CHECK(to_json(RingElem::term(make_rat(-3, 4), {1, 2, 1}))[0]["rational"] == "-3/4");
}
