// stirshare: tables, alpha equations, identity sweeps and sharing checks.
//
// Exit codes: 0 all checks pass, 1 a verification failed, 2 invalid input.

#include "stirshare/closedform.hpp"
#include "stirshare/emit.hpp"
#include "stirshare/identities.hpp"
#include "stirshare/pipeline.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

using namespace stirshare;

namespace {

constexpr int kPass = 0;
constexpr int kVerifyFail = 1;
constexpr int kInvalid = 2;

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Tolerance precedence: --tol, then STIRSHARE_TOL, then the command default.
std::optional<double> tolerance_override(const std::optional<double>& flag) {
  if (flag) {
    if (!(*flag > 0.0)) throw InvalidInput("--tol must be positive");
    return flag;
  }
  if (const char* env = std::getenv("STIRSHARE_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0)) throw InvalidInput("STIRSHARE_TOL must be a positive number");
    return v;
  }
  return std::nullopt;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct TablesArgs {
  std::string stirling;
  bool zeta_eps = false;
  bool lahiri = false;
  int max_n = -1;
  std::string format = "json";
};

int run_tables(const TablesArgs& a) {
  const int kinds = (a.stirling.empty() ? 0 : 1) + (a.zeta_eps ? 1 : 0) + (a.lahiri ? 1 : 0);
  if (kinds != 1) throw InvalidInput("choose exactly one of --stirling, --zeta-eps, --lahiri");
  const bool text = a.format == "text";
  if (!a.stirling.empty()) {
    if (a.max_n < 0) throw InvalidInput("--max-n must be >= 0");
    const StirlingTable table(a.stirling == "first" ? StirlingKind::first : StirlingKind::second, a.max_n);
    if (text) {
      std::cout << stirling_table_text(table);
    } else {
      print_json(stirling_table_json(table));
    }
    return kPass;
  }
  if (a.zeta_eps) {
    if (a.max_n < 1) throw InvalidInput("--max-n must be >= 1 for --zeta-eps");
    const ZetaEpsTable table(a.max_n);
    if (text) {
      for (int n = 1; n <= a.max_n; ++n) {
        for (int k = 0; k < n; ++k) {
          for (int j = 0; j <= n - k; ++j) {
            std::cout << "n=" << n << " k=" << k << " j=" << j << ": zeta=" << table.zeta(n, k, j).get_str()
                      << " eps=" << table.eps(n, k, j).get_str() << "\n";
          }
        }
      }
    } else {
      print_json(zeta_eps_json(table));
    }
    return kPass;
  }
  if (a.max_n < 2) throw InvalidInput("--max-n must be >= 2 for --lahiri");
  Json all = Json::array();
  for (int n = 2; n <= a.max_n; ++n) {
    const LahiriCoeffs lc = lahiri_coefficients(n);
    if (text) {
      std::cout << "n=" << n << "\n";
      for (int j = 1; j <= n; ++j) std::cout << "  a_" << j << " = " << to_text(lc.a_j(j)) << "\n";
      std::cout << "  d =";
      for (const auto& d : lc.d) std::cout << " " << d.get_str();
      std::cout << "\n";
    } else {
      all.push_back(lahiri_json(lc));
    }
  }
  if (!text) print_json(Json{{"lahiri", std::move(all)}});
  return kPass;
}

struct OdeArgs {
  int n = 0;
  std::string method = "closed";
  std::string format = "text";
  bool check_routes = false;
};

int run_ode(const OdeArgs& a) {
  if (a.n < 2) throw InvalidInput("--n must be >= 2");
  const OdeSpec ode = build_alpha_ode(a.n, a.method == "assembled" ? OdeMethod::assembled : OdeMethod::closed);
  std::optional<bool> routes_ok;
  if (a.check_routes) {
    routes_ok = build_alpha_ode(a.n, OdeMethod::assembled) == build_alpha_ode(a.n, OdeMethod::closed);
  }
  if (a.format == "json") {
    Json j = to_json(ode);
    if (routes_ok) j["route_check"] = *routes_ok ? "PASS" : "FAIL";
    print_json(j);
  } else {
    std::cout << (a.format == "latex" ? to_latex(ode) : to_text(ode));
    if (routes_ok) std::cout << "route check (assembled vs closed): " << (*routes_ok ? "PASS" : "FAIL") << "\n";
  }
  return routes_ok.value_or(true) ? kPass : kVerifyFail;
}

int run_identities(int max_n) {
  if (max_n < 2) throw InvalidInput("--max-n must be >= 2");
  const auto results = verify_identities(max_n);
  for (const auto& r : results) std::cout << format_result(r) << "\n";
  const bool ok = all_pass(results);
  std::cout << (ok ? "ALL PASS" : "FAILURES PRESENT") << " (max_n=" << max_n << ", families=" << results.size() << ")\n";
  return ok ? kPass : kVerifyFail;
}

struct ComplexArg {
  std::optional<double> re;
  double im = 0.0;

  std::optional<cplx> value() const {
    if (!re) return std::nullopt;
    return cplx(*re, im);
  }
};

struct SolveN2Args {
  int s = -1;
  ComplexArg c;
  ComplexArg lambda;
  int samples = 32;
  std::optional<double> tol;
};

int run_solve_n2(const SolveN2Args& a) {
  if (!a.c.re || !a.lambda.re) throw InvalidInput("--c and --lambda are required");
  if (a.samples < 1) throw InvalidInput("--samples must be >= 1");
  const N2Solution sol = solve_n2(a.s, *a.c.value(), *a.lambda.value());
  const double tol = tolerance_override(a.tol).value_or(1e-10);
  Json report = solve_n2_report(sol, a.samples);
  const bool ok = report["residual"]["max"].get<double>() < tol;
  report["tolerance"] = tol;
  report["pass"] = ok;
  print_json(report);
  return ok ? kPass : kVerifyFail;
}

struct SharingArgs {
  int n = 2;
  std::optional<int> s;
  ComplexArg c;
  ComplexArg lambda;
  ComplexArg an;
  int samples = 32;
  double radius = 1.0;
  double phase = 0.0;
  std::string alpha_formula;
  std::optional<double> tol;
};

int run_sharing_cmd(const SharingArgs& a) {
  if (!a.c.re || !a.lambda.re) throw InvalidInput("--c and --lambda are required");
  SharingConfig cfg;
  cfg.n = a.n;
  cfg.c = *a.c.value();
  cfg.lambda = *a.lambda.value();
  cfg.an = a.an.value();
  cfg.s = a.s;
  cfg.grid = SampleGrid{a.radius, a.samples, a.phase};
  if (a.alpha_formula == "closed") {
    cfg.route = AlphaRoute::closed;
  } else if (a.alpha_formula == "special") {
    cfg.route = AlphaRoute::special;
  } else if (a.alpha_formula == "ode") {
    cfg.route = AlphaRoute::ode;
  } else {
    cfg.route = a.n == 2 && a.s ? AlphaRoute::closed : AlphaRoute::ode;
  }
  cfg.tol = tolerance_override(a.tol);
  const SharingRun run = run_sharing(cfg);
  print_json(to_json(run));
  return run.pass ? kPass : kVerifyFail;
}

void add_complex(CLI::App* app, const std::string& name, ComplexArg& arg, const std::string& what) {
  app->add_option("--" + name, arg.re, what + " (real part)");
  app->add_option("--" + name + "-im", arg.im, what + " (imaginary part)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stirling-number kernel and value-sharing verifier"};
  app.require_subcommand(1);

  TablesArgs tables;
  auto* tables_cmd = app.add_subcommand("tables", "Dump Stirling, zeta/eps or Lahiri coefficient tables");
  tables_cmd->add_option("--stirling", tables.stirling, "Stirling table kind")->check(CLI::IsMember({"first", "second"}));
  tables_cmd->add_flag("--zeta-eps", tables.zeta_eps, "zeta/eps coefficient tables");
  tables_cmd->add_flag("--lahiri", tables.lahiri, "Lahiri coefficients for n = 2..max-n");
  tables_cmd->add_option("--max-n", tables.max_n, "Largest n")->required();
  tables_cmd->add_option("--format", tables.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  OdeArgs ode;
  auto* ode_cmd = app.add_subcommand("ode", "Print the alpha equation of order n-1");
  ode_cmd->add_option("--n", ode.n, "Order n of L(f)")->required();
  ode_cmd->add_option("--method", ode.method, "Construction route")->check(CLI::IsMember({"assembled", "closed"}));
  ode_cmd->add_option("--format", ode.format, "Output format")->check(CLI::IsMember({"text", "latex", "json"}));
  ode_cmd->add_flag("--check-routes", ode.check_routes, "Also compare the two construction routes");

  int identities_max_n = 12;
  auto* verify_cmd = app.add_subcommand("verify", "Verification sweeps");
  verify_cmd->require_subcommand(1);
  auto* identities_cmd = verify_cmd->add_subcommand("identities", "Exact identity sweeps up to max-n");
  identities_cmd->add_option("--max-n", identities_max_n, "Largest n (>= 2)");

  SolveN2Args n2;
  auto* n2_cmd = app.add_subcommand("solve-n2", "Closed-form alpha for n = 2");
  n2_cmd->add_option("--s", n2.s, "Non-negative integer s")->required();
  add_complex(n2_cmd, "c", n2.c, "c");
  add_complex(n2_cmd, "lambda", n2.lambda, "lambda");
  n2_cmd->add_option("--samples", n2.samples, "Residual sample points on |z| = 1");
  n2_cmd->add_option("--tol", n2.tol, "Residual tolerance (default 1e-10)");

  SharingArgs sh;
  auto* sh_cmd = app.add_subcommand("verify-sharing", "Sharing residuals of f, f' and L(f)");
  sh_cmd->add_option("--n", sh.n, "Order n of L(f)");
  sh_cmd->add_option("--s", sh.s, "s for the n = 2 closed form");
  add_complex(sh_cmd, "c", sh.c, "c");
  add_complex(sh_cmd, "lambda", sh.lambda, "lambda");
  auto* an_opt = sh_cmd->add_option("--an,--a3", sh.an.re, "a_n (real part)");
  sh_cmd->add_option("--an-im,--a3-im", sh.an.im, "a_n (imaginary part)")->needs(an_opt);
  sh_cmd->add_option("--samples", sh.samples, "Grid points on the circle");
  sh_cmd->add_option("--radius", sh.radius, "Grid radius");
  sh_cmd->add_option("--phase", sh.phase, "Grid phase offset");
  sh_cmd->add_option("--alpha-formula", sh.alpha_formula, "How alpha is produced")
      ->check(CLI::IsMember({"closed", "special", "ode"}));
  sh_cmd->add_option("--tol", sh.tol, "Residual tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*tables_cmd) return run_tables(tables);
    if (*ode_cmd) return run_ode(ode);
    if (*identities_cmd) return run_identities(identities_max_n);
    if (*n2_cmd) return run_solve_n2(n2);
    if (*sh_cmd) return run_sharing_cmd(sh);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << " (estimate " << e.estimate() << ")\n";
    return kVerifyFail;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kVerifyFail;
  }
  return kInvalid;
}
