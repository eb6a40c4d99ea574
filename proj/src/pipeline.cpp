#include "stirshare/pipeline.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <stdexcept>

namespace stirshare {

double default_sharing_tolerance(AlphaRoute route) {
  switch (route) {
    case AlphaRoute::closed:
      return 1e-9;
    case AlphaRoute::special:
      return 1e-8;
    case AlphaRoute::ode:
      return 1e-6;
  }
  return 1e-6;
}

FunctionData path_function(ComplexFn weighted_alpha, const Params& p, cplx f0, const QuadratureOptions& opts) {
  FunctionData out;
  out.f = [weighted_alpha, p, f0, opts](cplx z) {
    const FPathSolution sol = integrate_f_weighted(weighted_alpha, p, f0, PathSpec{0.0, z}, opts);
    return sol.f.back();
  };
  out.fprime = [weighted_alpha, p, f = out.f](cplx z) {
    return p.lambda * std::exp(p.c * z) * f(z) + weighted_alpha(z);
  };
  return out;
}

namespace {

bool is_zero(cplx x) { return x == cplx(0.0, 0.0); }

// Solutions of the alpha equation on segments 0 -> z, cached per endpoint.
class OdePaths {
 public:
  OdePaths(OdeSpec ode, Params p, double clearance) : ode_(std::move(ode)), p_(p), clearance_(clearance) {
    init_.assign(static_cast<std::size_t>(p.n - 1), 0.0);
    init_[0] = 1.0;
  }

  const LinearOdeSolution& to(cplx z) {
    const auto key = std::make_pair(z.real(), z.imag());
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      PathSpec path{0.0, z};
      path.pole_clearance = clearance_;
      auto sol = std::make_shared<LinearOdeSolution>(solve_alpha_ode(ode_, p_, 0.0, init_, path));
      it = cache_.emplace(key, std::move(sol)).first;
    }
    return *it->second;
  }

 private:
  OdeSpec ode_;
  Params p_;
  double clearance_;
  std::vector<cplx> init_;
  std::map<std::pair<double, double>, std::shared_ptr<LinearOdeSolution>> cache_;
};

const char* route_name(AlphaRoute r) {
  switch (r) {
    case AlphaRoute::closed:
      return "closed";
    case AlphaRoute::special:
      return "special";
    case AlphaRoute::ode:
      return "ode";
  }
  return "";
}

}  // namespace

SharingRun run_sharing(const SharingConfig& config) {
  if (is_zero(config.c)) throw std::invalid_argument("c must be non-zero");
  if (is_zero(config.lambda)) throw std::invalid_argument("lambda must be non-zero");
  if (config.an && is_zero(*config.an)) throw std::invalid_argument("a_n must be non-zero");
  if (config.n < 2) throw std::invalid_argument("n must be at least 2");
  if (config.grid.count < 1 || !(config.grid.radius > 0.0)) throw std::invalid_argument("grid needs count >= 1 and radius > 0");
  if (config.tol && !(*config.tol > 0.0)) throw std::invalid_argument("tolerance must be positive");

  SharingRun run;
  run.config = config;
  run.tol = config.tol.value_or(default_sharing_tolerance(config.route));
  Params& p = run.params;
  p.n = config.n;
  p.c = config.c;
  p.lambda = config.lambda;

  DerivativesFn alpha;
  ComplexFn weighted;
  std::shared_ptr<OdePaths> paths;
  switch (config.route) {
    case AlphaRoute::closed: {
      if (config.n != 2) throw std::invalid_argument("the closed alpha formula needs n = 2");
      if (!config.s) throw std::invalid_argument("the closed alpha formula needs s");
      const N2Solution sol = solve_n2(*config.s, config.c, config.lambda);
      if (config.an && std::abs(*config.an - sol.a2) > 1e-12 * std::abs(sol.a2)) {
        throw std::invalid_argument("a_2 must equal 1/(1 - s c) for the closed alpha formula");
      }
      p.an = sol.a2;
      run.alpha_description = sol.alpha_formula();
      alpha = [sol](cplx z, int m) { return sol.alpha_derivatives(z, m); };
      weighted = [sol](cplx z) { return sol.weighted_alpha(z); };
      break;
    }
    case AlphaRoute::special: {
      if (config.n != 3) throw std::invalid_argument("the special alpha formula needs n = 3");
      if (std::abs(config.c + 1.5) > 1e-12) throw std::invalid_argument("the special alpha formula needs c = -3/2");
      if (config.an && std::abs(*config.an - 1.0) > 1e-12) {
        throw std::invalid_argument("the special alpha formula needs a_3 = 1");
      }
      p.an = 1.0;
      const SpecialAlphaN3 sa{config.lambda};
      run.alpha_description = "e^{-z} exp((2 lambda/3) e^{-3z/2})";
      alpha = [sa](cplx z, int m) { return sa.alpha_derivatives(z, m); };
      weighted = [sa, p](cplx z) { return (1.0 - p.lambda * std::exp(p.c * z)) * sa.alpha(z); };
      break;
    }
    case AlphaRoute::ode: {
      if (!config.an) throw std::invalid_argument("the ode alpha route needs a_n");
      p.an = *config.an;
      if (std::abs(p.lambda - 1.0) < config.pole_clearance) {
        throw std::invalid_argument("z = 0 lies on lambda e^{cz} = 1; the ode route starts there");
      }
      paths = std::make_shared<OdePaths>(build_alpha_ode(p.n, OdeMethod::closed), p, config.pole_clearance);
      run.alpha_description = "alpha equation solution with alpha(0) = 1 and zero higher initial derivatives";
      alpha = [paths](cplx z, int m) { return paths->to(z).derivatives(z, m); };
      break;
    }
  }
  p.validate();

  const cplx alpha0 = alpha(0.0, 0)[0];
  run.f0 = std::exp(p.lambda / p.c) + (std::isfinite(std::abs(alpha0)) ? alpha0 : 0.0);

  FunctionData f_data;
  if (config.route == AlphaRoute::ode) {
    // alpha along 0 -> z from the dense ODE solution on that segment.
    f_data.f = [paths, p, f0 = run.f0](cplx z) {
      const LinearOdeSolution& sol = paths->to(z);
      const ComplexFn w = [&sol, p](cplx t) { return (1.0 - p.lambda * std::exp(p.c * t)) * sol.state_at(t)[0]; };
      return integrate_f_weighted(w, p, f0, PathSpec{0.0, z}).f.back();
    };
    f_data.fprime = [paths, p, f = f_data.f](cplx z) {
      const cplx e = p.lambda * std::exp(p.c * z);
      return e * f(z) + (1.0 - e) * paths->to(z).state_at(z)[0];
    };
  } else {
    f_data = path_function(weighted, p, run.f0);
  }

  run.residuals = sharing_residuals(f_data, alpha, p, config.grid);
  run.necessary = necessary_condition_check(f_data, p, config.necessary_tol, config.domain_radius);
  run.residual_pass = !run.residuals.samples.empty() && run.residuals.max_r1 < run.tol && run.residuals.max_r2 < run.tol;
  run.pass = run.residual_pass && run.necessary.status != NecessaryConditionReport::Status::fail;
  return run;
}

Json complex_json(cplx z) {
  // + 0.0 folds -0.0 into 0.0 for stable output.
  return Json::array({z.real() + 0.0, z.imag() + 0.0});
}

Json to_json(const ResidualReport& report) {
  Json rows = Json::array();
  for (const auto& s : report.samples) rows.push_back(Json::array({s.z.real(), s.z.imag(), s.r1, s.r2}));
  Json skipped = Json::array();
  for (const auto& s : report.skipped) skipped.push_back({{"z", complex_json(s.z)}, {"reason", s.reason}});
  Json out;
  out["samples"] = std::move(rows);
  out["skipped"] = std::move(skipped);
  out["max_r1"] = report.max_r1;
  out["max_r2"] = report.max_r2;
  return out;
}

Json to_json(const NecessaryConditionReport& report) {
  Json out;
  switch (report.status) {
    case NecessaryConditionReport::Status::pass:
      out["status"] = "PASS";
      break;
    case NecessaryConditionReport::Status::fail:
      out["status"] = "FAIL";
      break;
    case NecessaryConditionReport::Status::not_applicable:
      out["status"] = "not applicable";
      break;
  }
  out["via"] = report.via;
  out["an_gap"] = report.an_gap;
  Json roots = Json::array();
  for (const auto& r : report.roots) {
    Json entry{{"z", complex_json(r.z)}};
    entry["gap"] = r.gap ? Json(*r.gap) : Json(nullptr);
    if (!r.note.empty()) entry["note"] = r.note;
    roots.push_back(std::move(entry));
  }
  out["roots"] = std::move(roots);
  return out;
}

Json to_json(const SharingRun& run) {
  Json params;
  params["n"] = run.params.n;
  params["c"] = complex_json(run.params.c);
  params["lambda"] = complex_json(run.params.lambda);
  params["an"] = complex_json(run.params.an);
  if (run.config.s) params["s"] = *run.config.s;
  Json out;
  out["command"] = "verify-sharing";
  out["params"] = std::move(params);
  out["alpha_route"] = route_name(run.config.route);
  out["alpha"] = run.alpha_description;
  out["grid"] = {{"radius", run.config.grid.radius}, {"count", run.config.grid.count}, {"phase", run.config.grid.phase}};
  out["f0"] = complex_json(run.f0);
  out["tolerance"] = run.tol;
  out["residuals"] = to_json(run.residuals);
  out["necessary_condition"] = to_json(run.necessary);
  out["residual_pass"] = run.residual_pass;
  out["pass"] = run.pass;
  return out;
}

double n2_max_residual(const N2Solution& sol, const SampleGrid& grid) {
  double worst = 0.0;
  for (const cplx z : grid.points()) {
    if (std::abs(sol.lambda * std::exp(sol.c * z) - 1.0) < 1e-8) continue;
    const auto d = sol.alpha_derivatives(z, 1);
    const cplx r = n2_equation_residual(sol.c, sol.lambda, sol.a2, z, d[0], d[1]);
    const double scale = std::max({1.0, std::abs(d[0]), std::abs(d[1])}) * std::max(1.0, std::abs(sol.a2));
    worst = std::max(worst, std::abs(r) / scale);
  }
  return worst;
}

Json solve_n2_report(const N2Solution& sol, int samples) {
  const N2IntegrabilityReport integ = n2_explicit_integrability(sol.s, sol.c);
  Json out;
  out["command"] = "solve-n2";
  out["s"] = sol.s;
  out["c"] = complex_json(sol.c);
  out["lambda"] = complex_json(sol.lambda);
  out["a2"] = complex_json(sol.a2);
  out["a1"] = complex_json(sol.a1);
  out["exp_lin"] = complex_json(sol.exp_lin);
  out["outer_pow"] = complex_json(sol.outer_pow);
  out["alpha"] = sol.alpha_formula();
  Json ig;
  ig["kind"] = integ.kind == N2Integrability::explicit_form ? "explicit" : "incomplete-gamma";
  if (integ.nu) ig["nu"] = *integ.nu;
  if (integ.a2) ig["a2"] = to_fraction_string(*integ.a2);
  out["integrability"] = std::move(ig);
  const double residual = n2_max_residual(sol, SampleGrid{1.0, samples, 0.0});
  out["residual"] = {{"samples", samples}, {"radius", 1.0}, {"max", residual}};
  return out;
}

}  // namespace stirshare
