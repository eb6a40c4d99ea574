#include <doctest.h>

#include "stirshare/closedform.hpp"
#include "stirshare/jet.hpp"
#include "stirshare/numeric.hpp"
#include "stirshare/pipeline.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace stirshare;

namespace {

std::vector<cplx> circle(double r, int count) { return SampleGrid{r, count, 0.1}.points(); }

double n2_residual(const N2Solution& sol, cplx z) {
  const auto d = sol.alpha_derivatives(z, 1);
  const cplx r = n2_equation_residual(sol.c, sol.lambda, sol.a2, z, d[0], d[1]);
  return std::abs(r) / (std::max({1.0, std::abs(d[0]), std::abs(d[1])}) * std::max(1.0, std::abs(sol.a2)));
}

// Admissible random parameters: s c away from 1.
std::pair<cplx, cplx> random_params(std::mt19937& rng, int s) {
  std::uniform_real_distribution<double> mag(0.15, 1.2);
  std::uniform_real_distribution<double> arg(-std::numbers::pi, std::numbers::pi);
  for (;;) {
    const cplx c = std::polar(mag(rng), arg(rng));
    const cplx lambda = std::polar(mag(rng) + 0.3, arg(rng));
    if (std::abs(static_cast<double>(s) * c - 1.0) > 0.1) return {c, lambda};
  }
}

}  // namespace

TEST_CASE("n = 2 solution data") {
  const N2Solution s1 = solve_n2(1, 0.5, 1.0);
  CHECK(std::abs(s1.a2 - 2.0) < 1e-15);
  CHECK(std::abs(s1.a1 + 1.0) < 1e-15);
  CHECK(s1.alpha_formula() == "e^z");
  for (const cplx z : circle(1.0, 16)) CHECK(std::abs(s1.alpha(z) - std::exp(z)) < 1e-14 * std::abs(std::exp(z)));

  const N2Solution gen = solve_n2(1, cplx(0.3, -0.7), 2.0);
  CHECK(std::abs(gen.a2 - 1.0 / (1.0 - cplx(0.3, -0.7))) < 1e-15);

  CHECK(std::abs(solve_n2(0, 0.3, 2.0).a2 - 1.0) < 1e-15);

  const N2Solution s2 = solve_n2(2, 0.25, 1.0);
  CHECK(std::abs(s2.a2 - 2.0) < 1e-15);
  CHECK(std::abs(s2.outer_pow - 1.0) < 1e-14);
  CHECK(std::abs(s2.exp_lin - 0.75) < 1e-15);
  for (const cplx z : circle(1.0, 32)) CHECK(n2_residual(s2, z) < 1e-10);
}

TEST_CASE("n = 2 rejected inputs") {
  CHECK_THROWS_AS(solve_n2(2, 0.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(solve_n2(-1, 0.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(solve_n2(1, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(solve_n2(1, 0.5, 0.0), std::invalid_argument);
}

TEST_CASE("n = 2 closed form solves its equation for random parameters") {
  std::mt19937 rng(20261017);
  for (int s = 0; s <= 8; ++s) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto [c, lambda] = random_params(rng, s);
      const N2Solution sol = solve_n2(s, c, lambda);
      CAPTURE(s);
      CAPTURE(c);
      CAPTURE(lambda);
      for (const cplx z : circle(1.0, 32)) {
        if (std::abs(lambda * std::exp(c * z) - 1.0) < 1e-6) continue;
        CHECK(n2_residual(sol, z) < 1e-10);
      }
      // outer exponent is s - 1 once a_2 is fixed
      CHECK(std::abs(sol.outer_pow - static_cast<double>(s - 1)) < 1e-12 * (1.0 + std::abs(1.0 / c)));
    }
  }
}

TEST_CASE("n = 2 derivatives agree with ring differences") {
  const N2Solution sol = solve_n2(3, cplx(0.4, 0.2), cplx(0.7, -0.3));
  const cplx z(0.3, 0.4);
  const auto d = sol.alpha_derivatives(z, 2);
  const auto fd = finite_diff_jet([&](cplx t) { return sol.alpha(t); }, z, 2, 0.05, 32);
  CHECK(std::abs(d[1] - fd[1]) < 1e-10 * std::abs(d[1]));
  CHECK(std::abs(d[2] - fd[2]) < 1e-9 * std::abs(d[2]));
}

TEST_CASE("weighted alpha near the singular set") {
  const double lambda = 1.3;
  const double c = 0.6;
  const cplx root = -std::log(lambda) / c;
  for (int s = 0; s <= 3; ++s) {
    const N2Solution sol = solve_n2(s, c, lambda);
    for (int dir = 0; dir < 4; ++dir) {
      double previous = 0.0;
      for (double r = 1e-3; r >= 1e-6; r /= 10.0) {
        const cplx z = root + std::polar(r, dir * std::numbers::pi / 2 + 0.3);
        const double g = std::abs(sol.weighted_alpha(z));
        CHECK(std::isfinite(g));
        if (s == 0) {
          CHECK(g == doctest::Approx(std::abs(std::exp(sol.exp_lin * root))).epsilon(1e-2));
        } else if (previous > 0.0) {
          // decays like r^s
          CHECK(g < previous * std::pow(0.2, s));
        }
        previous = g;
      }
    }
  }
}

TEST_CASE("explicit integrability") {
  const auto a = n2_explicit_integrability(1, 1.0 / 3.0);
  CHECK(a.kind == N2Integrability::explicit_form);
  CHECK(a.nu == 3);
  CHECK(*a.a2 == make_rat(3, 2));

  const auto b = n2_explicit_integrability(0, 0.5);
  CHECK(b.kind == N2Integrability::explicit_form);
  CHECK(*b.a2 == Rat(1));

  CHECK(n2_explicit_integrability(2, 0.5).kind == N2Integrability::incomplete_gamma);
  CHECK(n2_explicit_integrability(0, 0.4).kind == N2Integrability::incomplete_gamma);
  CHECK(n2_explicit_integrability(0, cplx(0.5, 0.1)).kind == N2Integrability::incomplete_gamma);
}

TEST_CASE("n = 3 coefficients agree with the symbolic equation") {
  const OdeSpec ode = build_alpha_ode(3, OdeMethod::closed);
  const Params p{3, cplx(0.7, -0.2), cplx(0.4, 0.9), cplx(1.6, 0.3)};
  for (const cplx z : circle(0.8, 12)) {
    const cplx lead = eval_expoly(ode.coeffs[2], z, p);
    const N3Coefficients k = n3_coefficients(p.c, p.lambda, p.an, z);
    CHECK(std::abs(eval_expoly(ode.coeffs[1], z, p) / lead - k.a1) < 1e-12 * (1.0 + std::abs(k.a1)));
    CHECK(std::abs(eval_expoly(ode.coeffs[0], z, p) / lead - k.a0) < 1e-12 * (1.0 + std::abs(k.a0)));
  }
}

TEST_CASE("normal form data") {
  const PotentialSpec one = n3_normal_form(0.8, 1.2, 1.0);
  CHECK(one.pole_coeff == cplx(0.0, 0.0));

  const PotentialSpec two = n3_normal_form(1.0, 1.0, 2.0);
  CHECK(two.pole_coeff == cplx(-0.5, 0.0));
  CHECK(two.poly_part[0] == cplx(-1.25, 0.0));
  CHECK(two.poly_part[1] == cplx(-1.0, 0.0));
  CHECK(two.poly_part[2] == cplx(-0.25, 0.0));

  const cplx lambda(0.6, 0.2);
  const PotentialSpec sp = n3_normal_form(-1.5, lambda, 1.0);
  CHECK(sp.poly_part[0] == cplx(-1.0 - 9.0 / 16.0, 0.0));
  CHECK(sp.poly_part[1] == -lambda);
  CHECK(sp.poly_part[2] == -lambda * lambda / 4.0);

  CHECK_THROWS_AS(n3_normal_form(0.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(n3_normal_form(1.0, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("normal form transformation identity") {
  // B'' + A B = M (alpha'' + a1 alpha' + a0 alpha) for any alpha, so the
  // coefficients of alpha and alpha' must match separately:
  //   M'' + A M = a0 M,  2 M' = a1 M.
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    const cplx c(0.4 + 0.6 * std::abs(u(rng)), 0.3 * u(rng));
    const cplx lambda(0.5 + 0.5 * std::abs(u(rng)), 0.4 * u(rng));
    const cplx a3(1.0 + u(rng), 0.5 * u(rng));
    const PotentialSpec ps = n3_normal_form(c, lambda, a3);
    for (const cplx z : circle(0.9, 16)) {
      if (std::abs(lambda * std::exp(c * z) - 1.0) < 1e-3) continue;
      const auto m = ps.multiplier(z);
      const N3Coefficients k = n3_coefficients(c, lambda, a3, z);
      const double scale = std::abs(m[0]) * (1.0 + std::abs(k.a0) + std::abs(k.a1));
      CHECK(std::abs(m[2] + ps.potential(z) * m[0] - k.a0 * m[0]) < 1e-9 * scale);
      CHECK(std::abs(2.0 * m[1] - k.a1 * m[0]) < 1e-9 * scale);

      // round trip on an entire test function
      const cplx beta = std::cos(z) + std::exp(z / 3.0);
      const cplx back = ps.alpha_from_B(ps.to_B(beta, z), z);
      CHECK(std::abs(back - beta) < 1e-12 * std::abs(beta));
    }
  }
}

TEST_CASE("multiplier derivatives agree with ring differences") {
  const PotentialSpec ps = n3_normal_form(cplx(0.9, 0.1), cplx(0.5, 0.3), 2.0);
  const cplx z(0.2, -0.3);
  const auto m = ps.multiplier(z);
  const auto fd = finite_diff_jet([&](cplx t) { return ps.multiplier(t)[0]; }, z, 2, 0.05, 32);
  CHECK(std::abs(m[1] - fd[1]) < 1e-10 * (1.0 + std::abs(m[1])));
  CHECK(std::abs(m[2] - fd[2]) < 1e-9 * (1.0 + std::abs(m[2])));
}

TEST_CASE("pole condition") {
  CHECK_FALSE(n3_pole_vanishing_condition(1.0).requires_vanishing);
  CHECK(n3_pole_vanishing_condition(1.0).satisfied_by(5.0, 1e-12));
  CHECK(n3_pole_vanishing_condition(2.0).requires_vanishing);
  CHECK(n3_pole_vanishing_condition(0.5).requires_vanishing);
  CHECK_FALSE(n3_pole_vanishing_condition(2.0).satisfied_by(1e-3, 1e-9));
  CHECK(n3_pole_vanishing_condition(2.0).satisfied_by(0.0, 1e-9));
  CHECK_THROWS(n3_pole_vanishing_condition(0.0));
}

TEST_CASE("special alpha solves the n = 3 equation") {
  for (const cplx lambda : {cplx(1.0, 0.0), cplx(0.3, 0.5), cplx(-2.0, 0.1)}) {
    const SpecialAlphaN3 sa{lambda};
    for (double r : {0.0, 0.3, 0.6, 1.0}) {
      for (const cplx z : SampleGrid{r, 12, 0.2}.points()) {
        const auto d = sa.alpha_derivatives(z, 2);
        if (std::abs(lambda * std::exp(-1.5 * z) - 1.0) < 1e-6) continue;
        const N3Coefficients k = n3_coefficients(-1.5, lambda, 1.0, z);
        const double scale = std::abs(d[2]) + std::abs(k.a1 * d[1]) + std::abs(k.a0 * d[0]);
        CHECK(std::abs(d[2] + k.a1 * d[1] + k.a0 * d[0]) < 1e-8 * scale);
      }
    }
    const cplx z(0.4, 0.1);
    const auto d = sa.alpha_derivatives(z, 3);
    const auto fd = finite_diff_jet([&](cplx t) { return sa.alpha(t); }, z, 3, 0.05, 32);
    for (int k = 1; k <= 3; ++k) CHECK(std::abs(d[k] - fd[k]) < 1e-8 * (1.0 + std::abs(d[k])));
  }
}
