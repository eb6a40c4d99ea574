#include "stirshare/identities.hpp"

#include "stirshare/coefftab.hpp"
#include "stirshare/jet.hpp"
#include "stirshare/stirling.hpp"

#include <stdexcept>

namespace stirshare {

namespace {

class Family {
 public:
  explicit Family(std::string name) { r_.name = std::move(name); }

  template <typename Describe>
  void check(bool ok, Describe&& describe) {
    ++r_.checks;
    if (!ok) {
      if (r_.failures == 0) r_.first_failure = describe();
      ++r_.failures;
    }
  }

  FamilyResult done() { return std::move(r_); }

 private:
  FamilyResult r_;
};

std::string idx(int n, int k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }
std::string idx(int n, int k, int j) {
  return "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(j) + ")";
}

RingElem an_c(const Rat& q, int c_pow) { return RingElem::term(q, {c_pow, 0, 1}); }

}  // namespace

std::vector<FamilyResult> stirling_suite(int max_n) {
  const StirlingTable s1(StirlingKind::first, max_n);
  const StirlingTable s2(StirlingKind::second, max_n);
  std::vector<FamilyResult> out;

  Family second("Stirling S(n,k): recursion = closed form");
  Family first("Stirling s(n,k): recursion = falling factorial");
  for (int n = 0; n <= max_n; ++n) {
    for (int k = 1; k <= n; ++k) {
      second.check(s2.at(n, k) == stirling_second_closed(n, k), [&] { return idx(n, k); });
    }
    const auto ff = falling_factorial_coeffs(n);
    for (int k = 0; k <= n; ++k) first.check(s1.at(n, k) == ff[k], [&] { return idx(n, k); });
  }
  out.push_back(second.done());
  out.push_back(first.done());

  Family orth("Stirling orthogonality");
  for (int n = 0; n <= max_n; ++n) {
    for (int k = 0; k <= n; ++k) {
      BigInt fs = 0;
      BigInt sf = 0;
      for (int r = k; r <= n; ++r) {
        fs += s1.at(n, r) * s2.at(r, k);
        sf += s2.at(n, r) * s1.at(r, k);
      }
      const int delta = n == k ? 1 : 0;
      orth.check(fs == delta && sf == delta, [&] { return idx(n, k); });
    }
  }
  out.push_back(orth.done());

  Family sign("Stirling sign law");
  for (int n = 0; n <= max_n; ++n) {
    for (int k = 0; k <= n; ++k) {
      const BigInt& v = s1.at(n, k);
      if (v == 0) continue;
      const int expected = (n - k) % 2 == 0 ? 1 : -1;
      sign.check(sgn(v) == expected && s2.at(n, k) > 0, [&] { return idx(n, k); });
    }
  }
  out.push_back(sign.done());

  Family rowsum("Stirling s(n,k) row sum zero");
  for (int n = 2; n <= max_n; ++n) {
    BigInt sum = 0;
    for (int k = 1; k <= n; ++k) sum += s1.at(n, k);
    rowsum.check(sum == 0, [&] { return "n=" + std::to_string(n); });
  }
  out.push_back(rowsum.done());

  Family diag("Stirling diagonals");
  for (int n = 1; n <= max_n; ++n) {
    const BigInt pairs = n * (n - 1) / 2;
    diag.check(s1.at(n, n) == 1 && s2.at(n, n) == 1 && s1.at(n, n - 1) == -pairs && s2.at(n, n - 1) == pairs,
               [&] { return "n=" + std::to_string(n); });
  }
  out.push_back(diag.done());
  return out;
}

std::vector<FamilyResult> coefficient_table_suite(int max_n) {
  const ZetaEpsTable table(max_n);
  const StirlingTable s1(StirlingKind::first, max_n);
  std::vector<FamilyResult> out;

  Family routes("zeta/eps: recursion = definition");
  Family bounds("zeta/eps: boundary values");
  Family pascal("zeta/eps: binomial form at j=1 and Pascal rule");
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      for (int j = 0; j <= n - k; ++j) {
        routes.check(table.zeta(n, k, j) == zeta_direct(n, k, j) && table.eps(n, k, j) == eps_direct(n, k, j),
                     [&] { return idx(n, k, j); });
      }
      const bool zero_col = k <= n - 2 ? table.zeta(n, k, 0) == 0 : table.zeta(n, k, 0) == 1;
      bounds.check(table.zeta(n, k, n - k) == 0 && table.eps(n, k, n - k) == 1 && table.eps(n, k, 0) == 0 && zero_col,
                   [&] { return idx(n, k); });
      if (n - k >= 1) {
        bool ok = table.zeta(n, k, 1) == binomial(n - 1, k + 1) && table.eps(n, k, 1) == binomial(n - 1, k);
        if (n + 1 <= max_n && k >= 1 && n + 1 - k >= 2) {
          ok = ok && table.zeta(n + 1, k, 1) == table.zeta(n, k, 1) + table.zeta(n, k - 1, 1) &&
               table.eps(n + 1, k, 1) == table.eps(n, k, 1) + table.eps(n, k - 1, 1);
        }
        pascal.check(ok, [&] { return idx(n, k, 1); });
      }
    }
    if (n >= 2) pascal.check(table.zeta(n, n - 1, 1) == 0, [&] { return idx(n, n - 1, 1); });
  }
  out.push_back(routes.done());
  out.push_back(bounds.done());
  out.push_back(pascal.done());

  Family z1("Stirling-weighted zeta sums");
  Family z2("Stirling-weighted eps sums");
  Family z3("Stirling-weighted zeta sums at p = n-k");
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      for (int p = 0; p <= n - k - 1; ++p) {
        z1.check(lemma3_zeta_sum(table, n, k, p) == s1.at(n - p, k + 1), [&] { return idx(n, k, p); });
      }
      for (int p = 0; p <= n - k; ++p) {
        z2.check(lemma3_eps_sum(table, n, k, p) == s1.at(n - p, k), [&] { return idx(n, k, p); });
      }
      z3.check(lemma3_zeta_sum(table, n, k, n - k) == 0, [&] { return idx(n, k, n - k); });
    }
  }
  out.push_back(z1.done());
  out.push_back(z2.done());
  out.push_back(z3.done());
  return out;
}

std::vector<FamilyResult> jet_suite(int max_n) {
  std::vector<FamilyResult> out;
  const std::vector<AlphaJet> jets = build_AB_sequence(max_n);
  Family closed("jets: recursion = closed assembly");
  for (int n = 1; n <= max_n; ++n) {
    closed.check(jets[n - 1] == assemble_AB_closed(n), [&] { return "n=" + std::to_string(n); });
  }
  out.push_back(closed.done());
  Family derive("jets: derivative consistency");
  for (int n = 1; n < max_n; ++n) {
    derive.check(jet_derive(jets[n - 1]) == jets[n], [&] { return "n=" + std::to_string(n); });
  }
  if (max_n == 1) derive.check(jet_derive(jet_of_f()) == jets[0], [] { return std::string("n=1"); });
  out.push_back(derive.done());
  return out;
}

std::vector<FamilyResult> lahiri_suite(int max_n) {
  std::vector<FamilyResult> out;
  for (int n = 2; n <= max_n; ++n) {
    Family c1("C1 vanishes: n=" + std::to_string(n));
    c1.check(build_C1(lahiri_coefficients(n)).is_zero(), [&] { return "n=" + std::to_string(n); });
    out.push_back(c1.done());
  }
  Family top("Lahiri a_{n-1} and a_{n-2}");
  Family dsum("Lahiri d_k: recursion = |s(n,k)|, alternating sum zero");
  for (int n = 2; n <= max_n; ++n) {
    const LahiriCoeffs lc = lahiri_coefficients(n);
    bool ok = lc.a_j(n - 1) == an_c(make_rat(-n * (n - 1), 2), 1) && lc.a_j(n) == RingElem::an();
    if (n >= 3) ok = ok && lc.a_j(n - 2) == an_c(make_rat(n * (n - 1) * (n - 2) * (3 * n - 1), 24), 2);
    top.check(ok, [&] { return "n=" + std::to_string(n); });

    const auto rec = lahiri_d_by_recursion(n);
    BigInt alt = 0;
    bool match = true;
    for (int k = 1; k <= n; ++k) {
      match = match && rec[k - 1] == abs(stirling_first(n, k)) && lc.d_k(k) == rec[k - 1];
      alt += (k % 2 == 0 ? 1 : -1) * lc.d_k(k);
    }
    dsum.check(match && alt == 0, [&] { return "n=" + std::to_string(n); });
  }
  out.push_back(top.done());
  out.push_back(dsum.done());
  return out;
}

std::vector<FamilyResult> alpha_equation_suite(int max_n) {
  std::vector<FamilyResult> out;
  Family routes("alpha equation: assembled = closed");
  Family top("alpha equation: top coefficient -a_n (1 - lambda e^{cz})");
  Family zero("alpha equation: order-0 coefficient factorial form");
  Family elim("alpha elimination: singular-set factor 1 - a_n");
  const ExpPoly e = ExpPoly::lambda_e(1);
  for (int n = 2; n <= max_n; ++n) {
    const auto tag = [n] { return "n=" + std::to_string(n); };
    const OdeSpec assembled = build_alpha_ode(n, OdeMethod::assembled);
    const OdeSpec closed = build_alpha_ode(n, OdeMethod::closed);
    routes.check(assembled == closed, tag);
    top.check(closed.coeffs[n - 1] == -(RingElem::an() * (ExpPoly(1) - e)), tag);
    ExpPoly sum;
    for (int p = 0; p <= n - 1; ++p) {
      const int m = n - p - 1;
      const Rat q(BigInt(m % 2 == 0 ? 1 : -1) * factorial(m));
      sum += ExpPoly::term(p, RingElem::term(q, {m, p, 1}));
    }
    zero.check(closed.coeffs[0] == ExpPoly(1) - sum, tag);
    const EliminationReport rep = eliminate_alpha(n);
    elim.check(rep.singular_factor == RingElem(1) - RingElem::an() && rep.e0_f.is_zero() &&
                   rep.e0_fprime == lahiri_coefficients(n).a_j(1) - RingElem(1),
               tag);
  }
  out.push_back(routes.done());
  out.push_back(top.done());
  out.push_back(zero.done());
  out.push_back(elim.done());

  const RingElem an = RingElem::an();
  const RingElem c = RingElem::c();
  const ExpPoly e2 = ExpPoly::lambda_e(2);
  if (max_n >= 2) {
    // a_2 (1 - E) alpha' - (1 + a_2 c - a_2 E) alpha = 0, negated.
    Family f("alpha equation n=2 = -1 x reference form");
    const OdeSpec ode = build_alpha_ode(2, OdeMethod::closed);
    const std::vector<ExpPoly> ref{ExpPoly(1) + ExpPoly(an * c) - an * e, -ExpPoly(an) + an * e};
    f.check(ode.coeffs == ref, [] { return std::string("n=2"); });
    out.push_back(f.done());
  }
  if (max_n >= 3) {
    Family f("alpha equation n=3 = reference form");
    const OdeSpec ode = build_alpha_ode(3, OdeMethod::closed);
    const std::vector<ExpPoly> ref{
        ExpPoly(1) - an * (ExpPoly(2 * c * c) - c * e + e2),
        -(an * (ExpPoly(-3 * c) + (RingElem(1) + c) * e - e2)),
        -(an * (ExpPoly(1) - e)),
    };
    f.check(ode.coeffs == ref, [] { return std::string("n=3"); });
    out.push_back(f.done());
  }
  return out;
}

std::vector<FamilyResult> verify_identities(int max_n) {
  if (max_n < 2) throw std::invalid_argument("identity sweeps need max_n >= 2");
  std::vector<FamilyResult> out;
  for (auto* suite : {stirling_suite, coefficient_table_suite, jet_suite, lahiri_suite, alpha_equation_suite}) {
    auto part = suite(max_n);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

bool all_pass(const std::vector<FamilyResult>& results) {
  for (const auto& r : results) {
    if (!r.pass()) return false;
  }
  return !results.empty();
}

std::string format_result(const FamilyResult& r) {
  std::string line = r.name + (r.pass() ? " PASS" : " FAIL") + " (checks=" + std::to_string(r.checks);
  if (!r.pass()) {
    line += ", failures=" + std::to_string(r.failures);
    if (!r.first_failure.empty()) line += ", first: " + r.first_failure;
  }
  return line + ")";
}

}  // namespace stirshare
