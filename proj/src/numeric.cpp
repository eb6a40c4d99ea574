#include "stirshare/numeric.hpp"

#include "stirshare/coefftab.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>

namespace stirshare {

void Params::validate() const {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (c == cplx(0.0, 0.0)) throw std::invalid_argument("c must be non-zero");
  if (lambda == cplx(0.0, 0.0)) throw std::invalid_argument("lambda must be non-zero");
  if (an == cplx(0.0, 0.0)) throw std::invalid_argument("a_n must be non-zero");
}

cplx eval_ring(const RingElem& r, const Params& p) {
  cplx sum = 0.0;
  for (const auto& [m, q] : r.terms()) {
    if (m.c_pow < 0 && p.c == cplx(0.0, 0.0)) throw std::invalid_argument("negative power of c at c = 0");
    cplx term = q.get_d();
    term *= int_pow(p.c, m.c_pow) * int_pow(p.lambda, m.lambda_pow);
    if (m.an_pow == 1) term *= p.an;
    sum += term;
  }
  return sum;
}

cplx eval_expoly(const ExpPoly& x, cplx z, const Params& p) {
  const cplx ez = std::exp(p.c * z);
  cplx sum = 0.0;
  for (const auto& [pw, q] : x.terms()) sum += eval_ring(q, p) * int_pow(ez, pw);
  return sum;
}

cplx eval_jet(const AlphaJet& jet, cplx z, const Params& p, cplx f, std::span<const cplx> alpha_derivs) {
  cplx out = eval_expoly(jet.fpart, z, p) * f;
  for (const auto& [k, coeff] : jet.apart) {
    if (k >= static_cast<int>(alpha_derivs.size())) {
      throw std::invalid_argument("jet needs alpha derivative of order " + std::to_string(k));
    }
    out += eval_expoly(coeff, z, p) * alpha_derivs[k];
  }
  return out;
}

void check_clearance(const PathSpec& path, const Params& p) {
  if (path.pole_clearance <= 0.0) return;
  const double length = std::abs(path.end - path.start);
  const int samples = std::max(64, static_cast<int>(std::ceil(length / 1e-3)));
  for (int i = 0; i <= samples; ++i) {
    const cplx z = path.start + (path.end - path.start) * (static_cast<double>(i) / samples);
    const double gap = std::abs(p.lambda * std::exp(p.c * z) - 1.0);
    if (gap < path.pole_clearance) {
      throw NumericError(NumericError::Kind::clearance_violation,
                         "path passes within the pole clearance of lambda e^{cz} = 1", gap, z);
    }
  }
}

namespace {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1] (QUADPACK qk15).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Interval {
  double lo;
  double hi;
  cplx value;
  double error;
  bool operator<(const Interval& other) const { return error < other.error; }
};

Interval gk15(const ComplexFn& g, cplx a, cplx delta, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  auto at = [&](double t) { return g(a + delta * t) * delta; };
  const cplx fc = at(center);
  cplx kronrod = fc * kWgk[7];
  cplx gauss = fc * kWg[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    const cplx sum = at(center - dx) + at(center + dx);
    kronrod += kWgk[i] * sum;
    if (i % 2 == 1) gauss += kWg[i / 2] * sum;
  }
  kronrod *= half;
  gauss *= half;
  return {lo, hi, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

cplx integrate_segment(const ComplexFn& g, cplx a, cplx b, const QuadratureOptions& opts, double* error_estimate) {
  const cplx delta = b - a;
  std::priority_queue<Interval> work;
  Interval first = gk15(g, a, delta, 0.0, 1.0);
  cplx total = first.value;
  double total_error = first.error;
  work.push(first);
  int subdivisions = 0;
  while (total_error > std::max(opts.abs_tol, opts.rel_tol * std::abs(total))) {
    if (subdivisions >= opts.max_subdivisions) {
      if (error_estimate) *error_estimate = total_error;
      throw NumericError(NumericError::Kind::quadrature_nonconvergence,
                         "adaptive quadrature did not converge", total_error, b);
    }
    Interval worst = work.top();
    work.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    Interval left = gk15(g, a, delta, worst.lo, mid);
    Interval right = gk15(g, a, delta, mid, worst.hi);
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    work.push(left);
    work.push(right);
    ++subdivisions;
    if (!std::isfinite(total.real()) || !std::isfinite(total.imag())) {
      throw NumericError(NumericError::Kind::quadrature_nonconvergence, "non-finite integrand on path", total_error, b);
    }
  }
  // Re-sum to shed the drift of incremental updates.
  total = 0.0;
  total_error = 0.0;
  while (!work.empty()) {
    total += work.top().value;
    total_error += work.top().error;
    work.pop();
  }
  if (error_estimate) *error_estimate = total_error;
  return total;
}

FPathSolution integrate_f_weighted(const ComplexFn& weighted_alpha, const Params& p, cplx f0, const PathSpec& path,
                                   const QuadratureOptions& opts) {
  if (p.c == cplx(0.0, 0.0) || p.lambda == cplx(0.0, 0.0)) throw std::invalid_argument("c and lambda must be non-zero");
  if (!(path.max_step > 0.0)) throw std::invalid_argument("max_step must be positive");
  check_clearance(path, p);
  const cplx ratio = p.lambda / p.c;
  auto phase = [&](cplx z) { return ratio * std::exp(p.c * z); };
  const ComplexFn integrand = [&](cplx t) { return std::exp(-phase(t)) * weighted_alpha(t); };

  const double length = std::abs(path.end - path.start);
  const int pieces = std::max(1, static_cast<int>(std::ceil(length / path.max_step)));
  FPathSolution out;
  const cplx base = std::exp(-phase(path.start)) * f0;
  cplx accumulated = 0.0;
  for (int i = 0; i <= pieces; ++i) {
    const cplx z = path.start + (path.end - path.start) * (static_cast<double>(i) / pieces);
    if (i > 0) {
      double err = 0.0;
      accumulated += integrate_segment(integrand, out.nodes.back(), z, opts, &err);
      out.error_estimate += err;
    }
    const cplx f = std::exp(phase(z)) * (base + accumulated);
    const cplx e = p.lambda * std::exp(p.c * z);
    out.nodes.push_back(z);
    out.f.push_back(f);
    out.fprime.push_back(e * f + weighted_alpha(z));
  }
  return out;
}

FPathSolution integrate_f(const ComplexFn& alpha, const Params& p, cplx f0, const PathSpec& path,
                          const QuadratureOptions& opts) {
  const ComplexFn weighted = [&](cplx z) { return (1.0 - p.lambda * std::exp(p.c * z)) * alpha(z); };
  return integrate_f_weighted(weighted, p, f0, path, opts);
}

// ---------------------------------------------------------------------------
// Linear ODE along a segment.

LinearOdeSolution::LinearOdeSolution(LinearCoeffFn coeffs, int order, cplx start, cplx end)
    : coeffs_(std::move(coeffs)), order_(order), start_(start), end_(end) {}

std::vector<cplx> LinearOdeSolution::rhs(double t, const std::vector<cplx>& y) const {
  const cplx delta = end_ - start_;
  const cplx z = start_ + delta * t;
  const std::vector<cplx> a = coeffs_(z);
  cplx top = 0.0;
  for (int k = 0; k < order_; ++k) top -= a[k] * y[k];
  top /= a[order_];
  std::vector<cplx> dy(static_cast<std::size_t>(order_));
  for (int k = 0; k + 1 < order_; ++k) dy[k] = delta * y[k + 1];
  dy[order_ - 1] = delta * top;
  return dy;
}

std::vector<cplx> LinearOdeSolution::state_at(double t) const {
  if (t_.empty()) throw std::logic_error("empty ODE solution");
  t = std::clamp(t, 0.0, 1.0);
  auto it = std::upper_bound(t_.begin(), t_.end(), t);
  std::size_t i = it == t_.begin() ? 0 : static_cast<std::size_t>(it - t_.begin()) - 1;
  if (i + 1 >= t_.size()) return y_.back();
  const double h = t_[i + 1] - t_[i];
  const double s = (t - t_[i]) / h;
  const double h00 = (1 + 2 * s) * (1 - s) * (1 - s);
  const double h10 = s * (1 - s) * (1 - s);
  const double h01 = s * s * (3 - 2 * s);
  const double h11 = s * s * (s - 1);
  std::vector<cplx> out(static_cast<std::size_t>(order_));
  for (int k = 0; k < order_; ++k) {
    out[k] = h00 * y_[i][k] + h10 * h * dy_[i][k] + h01 * y_[i + 1][k] + h11 * h * dy_[i + 1][k];
  }
  return out;
}

std::vector<cplx> LinearOdeSolution::state_at(cplx z) const {
  const cplx delta = end_ - start_;
  const double t = delta == cplx(0.0, 0.0) ? 0.0 : ((z - start_) / delta).real();
  return state_at(t);
}

std::vector<cplx> LinearOdeSolution::derivatives(cplx z, int max_order) const {
  if (max_order < 0 || max_order > order_) {
    throw std::invalid_argument("derivative order beyond the equation order");
  }
  std::vector<cplx> state = state_at(z);
  if (max_order == order_) {
    const std::vector<cplx> a = coeffs_(z);
    cplx top = 0.0;
    for (int k = 0; k < order_; ++k) top -= a[k] * state[k];
    state.push_back(top / a[order_]);
  }
  state.resize(static_cast<std::size_t>(max_order) + 1);
  return state;
}

LinearOdeSolution solve_linear_ode(LinearCoeffFn coeffs, int order, const PathSpec& path, std::span<const cplx> init,
                                   const OdeOptions& opts) {
  if (order < 1) throw std::invalid_argument("ODE order must be at least 1");
  if (static_cast<int>(init.size()) != order) throw std::invalid_argument("initial data size must equal the order");
  if (!(path.max_step > 0.0)) throw std::invalid_argument("max_step must be positive");
  LinearOdeSolution sol(std::move(coeffs), order, path.start, path.end);
  std::vector<cplx> y(init.begin(), init.end());
  sol.t_.push_back(0.0);
  sol.y_.push_back(y);
  const double length = std::abs(path.end - path.start);
  if (length == 0.0) {
    sol.dy_.push_back(std::vector<cplx>(static_cast<std::size_t>(order), 0.0));
    return sol;
  }
  std::vector<cplx> k1 = sol.rhs(0.0, y);
  sol.dy_.push_back(k1);

  // Dormand-Prince 5(4) tableau.
  constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                   a65 = -5103.0 / 18656;
  constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192, a75 = -2187.0 / 6784, a76 = 11.0 / 84;
  constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                   e6 = 22.0 / 525, e7 = -1.0 / 40;

  const double h_max = std::min(1.0, path.max_step / length);
  double h = std::min(h_max, 1e-3);
  double t = 0.0;
  long steps = 0;
  const std::size_t m = static_cast<std::size_t>(order);
  auto combo = [&](std::initializer_list<std::pair<double, const std::vector<cplx>*>> terms) {
    std::vector<cplx> out = y;
    for (const auto& [w, k] : terms) {
      for (std::size_t i = 0; i < m; ++i) out[i] += h * w * (*k)[i];
    }
    return out;
  };

  while (t < 1.0) {
    if (++steps > opts.max_steps) {
      throw NumericError(NumericError::Kind::singular_proximity, "ODE step budget exhausted", h,
                         path.start + (path.end - path.start) * t);
    }
    if (t + h > 1.0) h = 1.0 - t;
    const auto k2 = sol.rhs(t + c2 * h, combo({{a21, &k1}}));
    const auto k3 = sol.rhs(t + c3 * h, combo({{a31, &k1}, {a32, &k2}}));
    const auto k4 = sol.rhs(t + c4 * h, combo({{a41, &k1}, {a42, &k2}, {a43, &k3}}));
    const auto k5 = sol.rhs(t + c5 * h, combo({{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
    const auto k6 = sol.rhs(t + h, combo({{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
    const auto y_new = combo({{a71, &k1}, {a73, &k3}, {a74, &k4}, {a75, &k5}, {a76, &k6}});
    const auto k7 = sol.rhs(t + h, y_new);

    double err = 0.0;
    bool finite = true;
    for (std::size_t i = 0; i < m; ++i) {
      const cplx e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      const double scale = opts.abs_tol + opts.rel_tol * std::max(std::abs(y[i]), std::abs(y_new[i]));
      const double r = std::abs(e) / scale;
      if (!std::isfinite(r)) finite = false;
      err = std::max(err, r);
    }
    if (finite && err <= 1.0) {
      t += h;
      if (1.0 - t < 1e-14) t = 1.0;
      y = y_new;
      k1 = k7;
      sol.t_.push_back(t);
      sol.y_.push_back(y);
      sol.dy_.push_back(k1);
    }
    const double factor = finite ? std::clamp(0.9 * std::pow(std::max(err, 1e-10), -0.2), 0.2, 5.0) : 0.1;
    h = std::min(h * factor, h_max);
    if (t < 1.0 && h < opts.min_step) {
      throw NumericError(NumericError::Kind::singular_proximity,
                         "step size underflow; the path is too close to a singular point of the equation", h,
                         path.start + (path.end - path.start) * t);
    }
  }
  return sol;
}

LinearOdeSolution solve_alpha_ode(const OdeSpec& ode, const Params& p, cplx z0, std::span<const cplx> init,
                                  const PathSpec& path, const OdeOptions& opts) {
  p.validate();
  if (ode.n != p.n) throw std::invalid_argument("equation order does not match parameters");
  if (std::abs(z0 - path.start) > 1e-15 * (1.0 + std::abs(z0))) {
    throw std::invalid_argument("initial point must be the start of the path");
  }
  check_clearance(path, p);
  // Per coefficient: (power, numeric ring value) pairs.
  std::vector<std::vector<std::pair<int, cplx>>> table;
  for (const auto& coeff : ode.coeffs) {
    std::vector<std::pair<int, cplx>> row;
    for (const auto& [pw, q] : coeff.terms()) row.emplace_back(pw, eval_ring(q, p));
    table.push_back(std::move(row));
  }
  LinearCoeffFn coeffs = [table, c = p.c](cplx z) {
    const cplx ez = std::exp(c * z);
    std::vector<cplx> out;
    out.reserve(table.size());
    for (const auto& row : table) {
      cplx v = 0.0;
      for (const auto& [pw, q] : row) v += q * int_pow(ez, pw);
      out.push_back(v);
    }
    return out;
  };
  return solve_linear_ode(std::move(coeffs), p.n - 1, path, init, opts);
}

// ---------------------------------------------------------------------------
// Residuals and checks.

std::vector<cplx> SampleGrid::points() const {
  if (count < 1) throw std::invalid_argument("sample grid needs at least one point");
  std::vector<cplx> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) {
    out.push_back(std::polar(radius, phase + 2.0 * std::numbers::pi * j / count));
  }
  return out;
}

ResidualReport sharing_residuals(const FunctionData& f_data, const DerivativesFn& alpha, const Params& p,
                                 std::span<const cplx> points, const SharingOptions& opts) {
  p.validate();
  if (points.empty()) throw std::invalid_argument("no sample points");
  const std::vector<AlphaJet> jets = build_AB_sequence(p.n);
  const LahiriCoeffs lahiri = lahiri_coefficients(p.n);
  std::vector<cplx> a;
  for (int j = 1; j <= p.n; ++j) a.push_back(eval_ring(lahiri.a_j(j), p));

  ResidualReport report;
  double max_alpha = 0.0;
  double max_alpha_prime = 0.0;
  for (const cplx z : points) {
    const cplx e = p.lambda * std::exp(p.c * z);
    if (std::abs(1.0 - e) < opts.singular_threshold) {
      report.skipped.push_back({z, "near lambda e^{cz} = 1"});
      continue;
    }
    std::vector<cplx> ad;
    cplx f;
    try {
      ad = alpha(z, p.n - 1);
      f = f_data.f(z);
    } catch (const NumericError& e) {
      report.skipped.push_back({z, e.what()});
      continue;
    }
    max_alpha = std::max(max_alpha, std::abs(ad[0]));
    max_alpha_prime = std::max(max_alpha_prime, std::abs(ad[1]));
    const cplx gap = f - ad[0];
    if (std::abs(gap) < opts.zero_threshold * std::max(1.0, std::abs(f))) {
      report.skipped.push_back({z, "near a zero of f - alpha"});
      continue;
    }
    std::vector<cplx> derivs;
    for (const auto& jet : jets) derivs.push_back(eval_jet(jet, z, p, f, ad));
    cplx lf = 0.0;
    for (int j = 1; j <= p.n; ++j) lf += a[j - 1] * derivs[j - 1];
    ResidualSample sample;
    sample.z = z;
    sample.r1 = std::abs((derivs[0] - ad[0]) / gap - e);
    sample.r2 = std::abs((lf - ad[0]) / gap - p.an * int_pow(e, p.n));
    report.samples.push_back(sample);
  }
  if (!report.samples.empty() && max_alpha_prime <= 1e-14 * std::max(1.0, max_alpha)) {
    throw std::invalid_argument("alpha is constant on the grid; a non-constant alpha is required");
  }
  for (const auto& s : report.samples) {
    report.max_r1 = std::max(report.max_r1, s.r1);
    report.max_r2 = std::max(report.max_r2, s.r2);
  }
  return report;
}

std::vector<cplx> finite_diff_jet(const ComplexFn& f, cplx z, int order, double h, int ring_points) {
  if (order < 0) throw std::invalid_argument("negative derivative order");
  if (!(h > 0.0)) throw std::invalid_argument("ill-conditioned stencil: ring radius must be positive");
  if (ring_points < 2 * order + 2) throw std::invalid_argument("ill-conditioned stencil: too few ring points");
  std::vector<cplx> out{f(z)};
  if (order == 0) return out;
  // Subtracting f(z) leaves every k >= 1 coefficient unchanged and keeps the
  // summands O(h), which matters for small rings.
  std::vector<cplx> samples(static_cast<std::size_t>(ring_points));
  for (int j = 0; j < ring_points; ++j) {
    samples[j] = f(z + std::polar(h, 2.0 * std::numbers::pi * j / ring_points)) - out[0];
  }
  double k_factorial = 1.0;
  for (int k = 1; k <= order; ++k) {
    k_factorial *= k;
    cplx sum = 0.0;
    for (int j = 0; j < ring_points; ++j) {
      const int phase = (j * k) % ring_points;
      sum += samples[j] * std::polar(1.0, -2.0 * std::numbers::pi * phase / ring_points);
    }
    out.push_back(k_factorial * sum / (static_cast<double>(ring_points) * std::pow(h, k)));
  }
  return out;
}

std::vector<cplx> singular_points(const Params& p, double domain_radius) {
  const cplx base = -std::log(p.lambda);
  const double bound = (domain_radius * std::abs(p.c) + std::abs(base)) / (2.0 * std::numbers::pi);
  const int kmax = static_cast<int>(std::floor(bound)) + 1;
  std::vector<cplx> out;
  for (int k = -kmax; k <= kmax; ++k) {
    const cplx z = (base + cplx(0.0, 2.0 * std::numbers::pi * k)) / p.c;
    if (std::abs(z) <= domain_radius) out.push_back(z);
  }
  std::stable_sort(out.begin(), out.end(), [](cplx x, cplx y) { return std::abs(x) < std::abs(y); });
  return out;
}

NecessaryConditionReport necessary_condition_check(const FunctionData& f_data, const Params& p, double tol,
                                                   double domain_radius) {
  p.validate();
  NecessaryConditionReport report;
  report.an_gap = std::abs(p.an - 1.0);
  const bool an_holds = report.an_gap < tol;
  bool computable = true;
  for (const cplx z : singular_points(p, domain_radius)) {
    NecessaryConditionRoot root{z, std::nullopt, ""};
    if (!an_holds) {
      try {
        const cplx f = f_data.f(z);
        root.gap = std::abs(f_data.fprime(z) - f) / (1.0 + std::abs(f));
      } catch (const NumericError& e) {
        root.note = e.what();
        computable = false;
      }
    }
    report.roots.push_back(std::move(root));
  }
  if (an_holds) {
    report.status = NecessaryConditionReport::Status::pass;
    report.via = "a_n = 1";
  } else if (report.roots.empty() || !computable) {
    report.status = NecessaryConditionReport::Status::not_applicable;
  } else if (std::all_of(report.roots.begin(), report.roots.end(), [tol](const auto& r) { return *r.gap < tol; })) {
    report.status = NecessaryConditionReport::Status::pass;
    report.via = "f' = f";
  } else {
    report.status = NecessaryConditionReport::Status::fail;
  }
  return report;
}

}  // namespace stirshare
