#pragma once

#include "stirshare/complex.hpp"
#include "stirshare/jet.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace stirshare {

/// Numeric values of the formal parameters.
struct Params {
  int n = 2;
  cplx c;
  cplx lambda;
  cplx an;

  /// Throws std::invalid_argument unless n >= 2 and c, lambda, a_n != 0.
  void validate() const;
};

/// Numerical failure with the last error estimate or location attached.
class NumericError : public std::runtime_error {
 public:
  enum class Kind { quadrature_nonconvergence, singular_proximity, clearance_violation };

  NumericError(Kind kind, const std::string& what, double estimate = 0.0, cplx where = {})
      : std::runtime_error(what), kind_(kind), estimate_(estimate), where_(where) {}

  Kind kind() const { return kind_; }
  double estimate() const { return estimate_; }
  cplx where() const { return where_; }

 private:
  Kind kind_;
  double estimate_;
  cplx where_;
};

cplx eval_ring(const RingElem& r, const Params& p);
cplx eval_expoly(const ExpPoly& x, cplx z, const Params& p);
/// fpart(z) * f + sum_k apart_k(z) * alpha^{(k)}; alpha_derivs[k] = alpha^{(k)}(z).
cplx eval_jet(const AlphaJet& jet, cplx z, const Params& p, cplx f, std::span<const cplx> alpha_derivs);

/// Straight segment start -> end.
struct PathSpec {
  cplx start;
  cplx end;
  double max_step = 0.05;
  /// Minimum |lambda e^{cz} - 1| allowed along the path; 0 disables the check.
  double pole_clearance = 0.0;
};

/// Throws NumericError(clearance_violation) if the segment comes closer
/// than path.pole_clearance to the set lambda e^{cz} = 1.
void check_clearance(const PathSpec& path, const Params& p);

struct QuadratureOptions {
  double abs_tol = 1e-14;
  double rel_tol = 1e-13;
  int max_subdivisions = 4000;
};

/// f and f' at the nodes of a path.
struct FPathSolution {
  std::vector<cplx> nodes;
  std::vector<cplx> f;
  std::vector<cplx> fprime;
  double error_estimate = 0.0;
};

/// Solves f' = lambda e^{cz} f + (1 - lambda e^{cz}) alpha with f(path.start) = f0:
///   f(z) = e^{(lambda/c) e^{cz}} (e^{-(lambda/c) e^{c z0}} f0
///          + int_{z0}^{z} e^{-(lambda/c) e^{c t}} (1 - lambda e^{c t}) alpha(t) dt)
/// by adaptive Gauss-Kronrod quadrature on each sub-segment. f' comes from
/// the equation itself. `weighted_alpha` is (1 - lambda e^{cz}) alpha(z).
FPathSolution integrate_f_weighted(const ComplexFn& weighted_alpha, const Params& p, cplx f0, const PathSpec& path,
                                   const QuadratureOptions& opts = {});
FPathSolution integrate_f(const ComplexFn& alpha, const Params& p, cplx f0, const PathSpec& path,
                          const QuadratureOptions& opts = {});

/// Adaptive G7-K15 quadrature of g over the segment a -> b. Sets *error_estimate.
cplx integrate_segment(const ComplexFn& g, cplx a, cplx b, const QuadratureOptions& opts, double* error_estimate);

struct OdeOptions {
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
  /// Smallest step, as a fraction of the segment, before giving up.
  double min_step = 1e-11;
  long max_steps = 2'000'000;
};

/// sum_{k=0}^{m} coeffs(z)[k] y^{(k)} = 0, coeffs(z).size() == m + 1.
using LinearCoeffFn = std::function<std::vector<cplx>(cplx)>;

/// Dense solution of a linear ODE along a segment: state (y, ..., y^{(m-1)})
/// with cubic Hermite interpolation between accepted steps.
class LinearOdeSolution {
 public:
  LinearOdeSolution(LinearCoeffFn coeffs, int order, cplx start, cplx end);

  cplx start() const { return start_; }
  cplx end() const { return end_; }
  int order() const { return order_; }
  std::size_t steps() const { return t_.empty() ? 0 : t_.size() - 1; }

  /// State at the point start + t (end - start), t in [0, 1].
  std::vector<cplx> state_at(double t) const;
  /// State at a point z of the segment (projected onto it).
  std::vector<cplx> state_at(cplx z) const;
  /// y, ..., y^{(max_order)} at z; orders >= m are obtained from the equation.
  std::vector<cplx> derivatives(cplx z, int max_order) const;
  /// State at the end of the segment.
  const std::vector<cplx>& final_state() const { return y_.back(); }

 private:
  friend LinearOdeSolution solve_linear_ode(LinearCoeffFn, int, const PathSpec&, std::span<const cplx>,
                                            const OdeOptions&);
  std::vector<cplx> rhs(double t, const std::vector<cplx>& y) const;

  LinearCoeffFn coeffs_;
  int order_;
  cplx start_;
  cplx end_;
  std::vector<double> t_;
  std::vector<std::vector<cplx>> y_;
  std::vector<std::vector<cplx>> dy_;
};

/// Adaptive Dormand-Prince 5(4) along the segment. Throws NumericError
/// (singular_proximity) on step-size underflow.
LinearOdeSolution solve_linear_ode(LinearCoeffFn coeffs, int order, const PathSpec& path, std::span<const cplx> init,
                                   const OdeOptions& opts = {});

/// The alpha equation at numeric parameters. init = (alpha, ..., alpha^{(n-2)})
/// at z0, which must be the start of the path.
LinearOdeSolution solve_alpha_ode(const OdeSpec& ode, const Params& p, cplx z0, std::span<const cplx> init,
                                  const PathSpec& path, const OdeOptions& opts = {});

/// Points r e^{i(phase + 2 pi j / count)}.
struct SampleGrid {
  double radius = 1.0;
  int count = 32;
  double phase = 0.0;

  std::vector<cplx> points() const;
};

struct FunctionData {
  ComplexFn f;
  ComplexFn fprime;
};

struct ResidualSample {
  cplx z;
  double r1 = 0.0;
  double r2 = 0.0;
};

struct SkippedSample {
  cplx z;
  std::string reason;
};

struct ResidualReport {
  std::vector<ResidualSample> samples;
  std::vector<SkippedSample> skipped;
  double max_r1 = 0.0;
  double max_r2 = 0.0;
};

struct SharingOptions {
  /// Skip points with |f - alpha| below this times max(1, |f|).
  double zero_threshold = 1e-12;
  /// Skip points with |1 - lambda e^{cz}| below this.
  double singular_threshold = 1e-8;
};

/// r1 = |(f' - alpha)/(f - alpha) - lambda e^{cz}|,
/// r2 = |(L(f) - alpha)/(f - alpha) - a_n lambda^n e^{ncz}|, where every
/// f^{(j)} comes from the jet A_j f + B_j with analytic alpha derivatives.
/// Points where alpha or f raise NumericError are skipped with the message.
/// Throws std::invalid_argument if alpha is constant on the grid.
ResidualReport sharing_residuals(const FunctionData& f_data, const DerivativesFn& alpha, const Params& p,
                                 std::span<const cplx> points, const SharingOptions& opts = {});
inline ResidualReport sharing_residuals(const FunctionData& f_data, const DerivativesFn& alpha, const Params& p,
                                        const SampleGrid& grid, const SharingOptions& opts = {}) {
  const auto pts = grid.points();
  return sharing_residuals(f_data, alpha, p, pts, opts);
}

/// f, f', ..., f^{(order)} at z from samples on a ring of radius h:
///   f^{(k)}(z) ~ k! / (h^k N) sum_j f(z + h w^j) w^{-jk}, w = e^{2 pi i / N}.
/// Spectrally accurate for functions analytic on the disk of radius > h.
std::vector<cplx> finite_diff_jet(const ComplexFn& f, cplx z, int order, double h, int ring_points = 32);

struct NecessaryConditionRoot {
  cplx z;
  /// |f'(z) - f(z)| / (1 + |f(z)|); empty when not evaluated or not computable.
  std::optional<double> gap;
  std::string note;
};

struct NecessaryConditionReport {
  enum class Status { pass, fail, not_applicable };
  Status status = Status::not_applicable;
  double an_gap = 0.0;  // |a_n - 1|
  std::vector<NecessaryConditionRoot> roots;
  std::string via;  // "a_n = 1", "f' = f" or ""
};

/// Roots of lambda e^{cz} = 1: (log(1/lambda) + 2 pi i k) / c with principal
/// log, all k with |z| <= domain_radius.
std::vector<cplx> singular_points(const Params& p, double domain_radius);

/// Passes iff |a_n - 1| < tol, or f' = f (relative to 1 + |f|) at every
/// singular point within domain_radius. Gaps are only evaluated when the
/// first condition fails; a root where f cannot be evaluated (NumericError)
/// makes the report not_applicable.
NecessaryConditionReport necessary_condition_check(const FunctionData& f_data, const Params& p, double tol = 1e-8,
                                                   double domain_radius = 10.0);

}  // namespace stirshare
