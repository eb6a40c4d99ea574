#pragma once

#include "stirshare/closedform.hpp"
#include "stirshare/emit.hpp"
#include "stirshare/numeric.hpp"

#include <optional>
#include <string>

namespace stirshare {

/// How alpha is produced in a sharing run.
///  closed:  n = 2 closed form from s (a_2 = 1/(1 - s c)).
///  special: n = 3, c = -3/2, a_3 = 1, alpha = e^{-z} exp((2 lambda/3) e^{-3z/2}).
///  ode:     any n, alpha from the alpha equation with alpha(0) = 1 and
///           vanishing higher initial derivatives.
enum class AlphaRoute { closed, special, ode };

struct SharingConfig {
  int n = 2;
  cplx c;
  cplx lambda;
  std::optional<cplx> an;
  std::optional<int> s;
  AlphaRoute route = AlphaRoute::closed;
  SampleGrid grid;
  /// Residual tolerance; default_sharing_tolerance(route) when empty.
  std::optional<double> tol;
  double necessary_tol = 1e-8;
  double domain_radius = 10.0;
  /// Minimum |lambda e^{cz} - 1| along ODE paths (ode route only).
  double pole_clearance = 1e-3;
};

/// 1e-9 for closed, 1e-8 for special, 1e-6 for ode.
double default_sharing_tolerance(AlphaRoute route);

struct SharingRun {
  SharingConfig config;
  Params params;
  std::string alpha_description;
  cplx f0;
  double tol = 0.0;
  ResidualReport residuals;
  NecessaryConditionReport necessary;
  bool residual_pass = false;
  /// residual_pass and the necessary condition did not fail.
  bool pass = false;
};

/// Throws std::invalid_argument on invalid parameters.
SharingRun run_sharing(const SharingConfig& config);

/// f along the straight segment 0 -> z from a weighted alpha; f' from the
/// defining equation. f0 is f(0).
FunctionData path_function(ComplexFn weighted_alpha, const Params& p, cplx f0, const QuadratureOptions& opts = {});

Json complex_json(cplx z);
Json to_json(const ResidualReport& report);
Json to_json(const NecessaryConditionReport& report);
Json to_json(const SharingRun& run);

/// solve-n2 report: solution data, integrability and the residual of the
/// n = 2 equation on `samples` points of |z| = 1.
Json solve_n2_report(const N2Solution& sol, int samples = 32);
/// Largest n = 2 equation residual of the closed-form alpha over the grid,
/// skipping points within 1e-8 of lambda e^{cz} = 1 when s = 0.
double n2_max_residual(const N2Solution& sol, const SampleGrid& grid);

}  // namespace stirshare
