#include <doctest.h>

#include "stirshare/coefftab.hpp"
#include "stirshare/identities.hpp"
#include "stirshare/stirling.hpp"

using namespace stirshare;

namespace {

RingElem mono(long num, long den, int c_pow, int lambda_pow, int an_pow) {
  return RingElem::term(make_rat(num, den), {c_pow, lambda_pow, an_pow});
}

}  // namespace

TEST_CASE("zeta by definition") {
  CHECK(zeta_direct(1, 0, 0) == 1);
  CHECK(zeta_direct(4, 1, 1) == 3);
  CHECK(zeta_direct(4, 1, 2) == 1);
  CHECK(zeta_direct(3, 1, 2) == 0);
  CHECK_THROWS_AS(zeta_direct(3, 3, 0), std::out_of_range);
  CHECK_THROWS_AS(zeta_direct(3, 1, 3), std::out_of_range);
  CHECK_THROWS_AS(zeta_direct(0, 0, 0), std::out_of_range);
}

TEST_CASE("eps by definition") {
  CHECK(eps_direct(1, 0, 1) == 1);
  CHECK(eps_direct(3, 1, 1) == 2);
  CHECK(eps_direct(5, 2, 0) == 0);
  CHECK_THROWS_AS(eps_direct(2, -1, 0), std::out_of_range);
}

TEST_CASE("recursive tables") {
  const ZetaEpsTable t1(1);
  CHECK(t1.zeta(1, 0, 0) == 1);
  CHECK(t1.zeta(1, 0, 1) == 0);
  CHECK(t1.eps(1, 0, 0) == 0);
  CHECK(t1.eps(1, 0, 1) == 1);
  CHECK(t1.contains(1, 0, 1));
  CHECK_FALSE(t1.contains(1, 1, 0));
  CHECK(t1.zeta(1, 1, 0) == 0);

  const ZetaEpsTable t4 = zeta_eps_recursive(4);
  CHECK(t4.zeta(4, 1, 1) == zeta_direct(4, 1, 1));
  CHECK(t4.zeta(4, 1, 1) == 3);
  CHECK(t4.eps(4, 0, 4) == 1);
  CHECK_THROWS_AS(t4.zeta(5, 0, 0), std::out_of_range);
}

TEST_CASE("recursion matches definitions and sums up to 20") {
  for (const auto& r : coefficient_table_suite(20)) {
    CAPTURE(format_result(r));
    CHECK(r.pass());
  }
}

TEST_CASE("eps sum boundary term at p = 0") {
  // The p = 0 sums include the j = k term eps_{k,k,0}, which lies outside
  // the stored range; the identity needs it to count as 1.
  const ZetaEpsTable t(8);
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(lemma3_eps_sum(t, n, k, 0) == stirling_first(n, k));
      BigInt without = 0;
      for (int j = k + 1; j <= n; ++j) without += stirling_first(n, j) * t.eps(j, k, 0);
      CHECK(without == 0);
    }
  }
}

TEST_CASE("b coefficients") {
  CHECK(b_coeff(1, 1) == RingElem::lambda());
  CHECK(b_coeff(2, 1) == RingElem::c() * RingElem::lambda());
  CHECK(b_coeff(2, 2) == RingElem::lambda(2));
  CHECK(b_coeff(4, 2) == mono(7, 1, 2, 2, 0));
  CHECK_THROWS(b_coeff(2, 3));
  CHECK_THROWS(b_coeff(2, 0));
}

TEST_CASE("beta coefficients") {
  CHECK(beta_coeff(1, 0) == ExpPoly(1) - ExpPoly::lambda_e(1));
  const ExpPoly b20 = beta_coeff(2, 0);
  CHECK(b20 == ExpPoly::term(1, (RingElem(1) - RingElem::c()) * RingElem::lambda()) - ExpPoly::lambda_e(2));
  CHECK(beta_coeff(2, 1) == ExpPoly(1) - ExpPoly::lambda_e(1));
  CHECK_THROWS(beta_coeff(2, 2));
}

TEST_CASE("Lahiri coefficients") {
  const LahiriCoeffs l2 = lahiri_coefficients(2);
  CHECK(l2.d == std::vector<BigInt>{1, 1});
  CHECK(l2.a_j(1) == mono(-1, 1, 1, 0, 1));
  CHECK(l2.a_j(2) == RingElem::an());

  const LahiriCoeffs l3 = lahiri_coefficients(3);
  CHECK(l3.d == std::vector<BigInt>{2, 3, 1});
  CHECK(l3.a_j(2) == mono(-3, 1, 1, 0, 1));
  CHECK(l3.a_j(1) == mono(2, 1, 2, 0, 1));

  const LahiriCoeffs l4 = lahiri_coefficients(4);
  // a_{n-2} = a_n c^2 n(n-1)(n-2)(3n-1)/24 with n = 4
  CHECK(l4.a_j(2) == mono(4 * 3 * 2 * 11, 24, 2, 0, 1));
  CHECK(l4.a_j(2) == mono(11, 1, 2, 0, 1));

  CHECK_THROWS_AS(lahiri_coefficients(1), std::invalid_argument);
  CHECK(lahiri_d_by_recursion(5) == std::vector<BigInt>{24, 50, 35, 10, 1});
}

TEST_CASE("Lahiri sweep up to 20") {
  for (const auto& r : lahiri_suite(20)) {
    CAPTURE(format_result(r));
    CHECK(r.pass());
  }
}
