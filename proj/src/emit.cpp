#include "stirshare/emit.hpp"

#include <algorithm>
#include <sstream>

namespace stirshare {

namespace {

enum class Style { text, latex };

std::string power(const std::string& base, int exponent, Style style) {
  if (exponent == 1) return base;
  if (style == Style::latex) return base + "^{" + std::to_string(exponent) + "}";
  return base + "^" + std::to_string(exponent);
}

// Factors of a monomial without its coefficient; empty for the unit monomial.
std::string monomial_factors(const Monomial& m, Style style) {
  std::vector<std::string> parts;
  if (m.an_pow == 1) parts.push_back("a_n");
  if (m.c_pow != 0) parts.push_back(power("c", m.c_pow, style));
  if (m.lambda_pow != 0) parts.push_back(power(style == Style::latex ? "\\lambda" : "lambda", m.lambda_pow, style));
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += style == Style::latex ? " " : "*";
    out += parts[i];
  }
  return out;
}

std::string rational_abs(const Rat& q, Style style) {
  Rat a = abs(q);
  if (a.get_den() == 1) return a.get_num().get_str();
  if (style == Style::latex) return "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
  return a.get_num().get_str() + "/" + a.get_den().get_str();
}

// Signed terms of a ring element, each as (negative, body).
std::vector<std::pair<bool, std::string>> ring_terms(const RingElem& r, Style style) {
  std::vector<std::pair<bool, std::string>> out;
  for (const auto& [m, q] : r.terms()) {
    const std::string factors = monomial_factors(m, style);
    const std::string coeff = rational_abs(q, style);
    std::string body;
    if (factors.empty()) {
      body = coeff;
    } else if (coeff == "1") {
      body = factors;
    } else {
      body = coeff + (style == Style::latex ? " " : "*") + factors;
    }
    out.emplace_back(q < 0, body);
  }
  return out;
}

std::string join_terms(const std::vector<std::pair<bool, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [negative, body] = terms[i];
    if (i == 0) {
      out += negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

std::string exponential(int p) {
  const std::string arg = (p == 1 ? "" : std::to_string(p)) + "cz";
  return "e^{" + arg + "}";
}

std::vector<std::pair<bool, std::string>> expoly_terms(const ExpPoly& x, Style style) {
  std::vector<std::pair<bool, std::string>> out;
  const std::string times = style == Style::latex ? " " : "*";
  for (const auto& [p, q] : x.terms()) {
    auto inner = ring_terms(q, style);
    if (p == 0) {
      out.insert(out.end(), inner.begin(), inner.end());
    } else if (inner.size() == 1) {
      out.emplace_back(inner[0].first, inner[0].second + times + exponential(p));
    } else {
      out.emplace_back(false, "(" + join_terms(inner) + ")" + times + exponential(p));
    }
  }
  return out;
}

std::string alpha_symbol(int k, Style style) {
  if (style == Style::latex) {
    if (k == 0) return "\\alpha";
    return "\\alpha^{(" + std::to_string(k) + ")}";
  }
  if (k == 0) return "alpha";
  return "alpha^(" + std::to_string(k) + ")";
}

std::string jet_render(const AlphaJet& jet, Style style) {
  std::ostringstream os;
  const std::string f = style == Style::latex ? "f" : "f";
  os << "[" << (style == Style::latex ? to_latex(jet.fpart) : to_text(jet.fpart)) << "] " << f;
  for (const auto& [k, coeff] : jet.apart) {
    os << " + [" << (style == Style::latex ? to_latex(coeff) : to_text(coeff)) << "] " << alpha_symbol(k, style);
  }
  return os.str();
}

Json monomial_json(const Monomial& m, const Rat& q) {
  Json j;
  j["c_pow"] = m.c_pow;
  j["lambda_pow"] = m.lambda_pow;
  j["an_pow"] = m.an_pow;
  j["rational"] = to_fraction_string(q);
  return j;
}

}  // namespace

std::string to_text(const RingElem& r) { return join_terms(ring_terms(r, Style::text)); }
std::string to_text(const ExpPoly& x) { return join_terms(expoly_terms(x, Style::text)); }
std::string to_latex(const RingElem& r) { return join_terms(ring_terms(r, Style::latex)); }
std::string to_latex(const ExpPoly& x) { return join_terms(expoly_terms(x, Style::latex)); }

std::string to_text(const AlphaJet& jet) { return jet_render(jet, Style::text); }
std::string to_latex(const AlphaJet& jet) { return jet_render(jet, Style::latex); }

std::string to_text(const OdeSpec& ode) {
  std::ostringstream os;
  for (int k = 0; k < static_cast<int>(ode.coeffs.size()); ++k) {
    os << "coeff[" << k << "] (" << alpha_symbol(k, Style::text) << ") = " << to_text(ode.coeffs[k]) << "\n";
  }
  return os.str();
}

std::string to_latex(const OdeSpec& ode) {
  std::ostringstream os;
  os << "0 = ";
  for (int k = 0; k < static_cast<int>(ode.coeffs.size()); ++k) {
    if (k > 0) os << "\n  + ";
    os << "\\left(" << to_latex(ode.coeffs[k]) << "\\right) " << alpha_symbol(k, Style::latex);
  }
  os << "\n";
  return os.str();
}

Json to_json(const RingElem& r) {
  Json arr = Json::array();
  for (const auto& [m, q] : r.terms()) arr.push_back(monomial_json(m, q));
  return arr;
}

Json to_json(const ExpPoly& x) {
  Json arr = Json::array();
  for (const auto& [p, q] : x.terms()) {
    Json t;
    t["e_pow"] = p;
    t["monomials"] = to_json(q);
    arr.push_back(std::move(t));
  }
  return arr;
}

Json to_json(const AlphaJet& jet) {
  Json j;
  j["fpart"] = to_json(jet.fpart);
  Json parts = Json::array();
  for (const auto& [k, coeff] : jet.apart) {
    Json p;
    p["k"] = k;
    p["terms"] = to_json(coeff);
    parts.push_back(std::move(p));
  }
  j["apart"] = std::move(parts);
  return j;
}

Json to_json(const OdeSpec& ode) {
  Json j;
  j["n"] = ode.n;
  Json coeffs = Json::array();
  for (int k = 0; k < static_cast<int>(ode.coeffs.size()); ++k) {
    Json c;
    c["k"] = k;
    c["terms"] = to_json(ode.coeffs[k]);
    coeffs.push_back(std::move(c));
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

Json stirling_table_json(const StirlingTable& table) {
  Json j;
  j["kind"] = table.kind() == StirlingKind::first ? "first" : "second";
  j["max_n"] = table.max_n();
  Json rows = Json::array();
  for (int n = 0; n <= table.max_n(); ++n) {
    Json row = Json::array();
    for (const auto& v : table.row(n)) row.push_back(to_decimal_string(v));
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

std::string stirling_table_text(const StirlingTable& table) {
  std::size_t width = 1;
  for (int n = 0; n <= table.max_n(); ++n) {
    for (const auto& v : table.row(n)) width = std::max(width, v.get_str().size());
  }
  std::ostringstream os;
  for (int n = 0; n <= table.max_n(); ++n) {
    os << "n=" << n << ":";
    for (const auto& v : table.row(n)) {
      const std::string s = v.get_str();
      os << " " << std::string(width - s.size(), ' ') << s;
    }
    os << "\n";
  }
  return os.str();
}

Json zeta_eps_json(const ZetaEpsTable& table) {
  Json j;
  j["max_n"] = table.max_n();
  Json zeta = Json::array();
  Json eps = Json::array();
  for (int n = 1; n <= table.max_n(); ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      for (int p = 0; p <= n - k; ++p) {
        zeta.push_back(Json::array({n, k, p, to_decimal_string(table.zeta(n, k, p))}));
        eps.push_back(Json::array({n, k, p, to_decimal_string(table.eps(n, k, p))}));
      }
    }
  }
  j["zeta"] = std::move(zeta);
  j["eps"] = std::move(eps);
  return j;
}

Json lahiri_json(const LahiriCoeffs& coeffs) {
  Json j;
  j["n"] = coeffs.n;
  Json a = Json::array();
  for (int i = 1; i <= coeffs.n; ++i) {
    Json entry;
    entry["j"] = i;
    entry["terms"] = to_json(coeffs.a_j(i));
    a.push_back(std::move(entry));
  }
  j["a"] = std::move(a);
  Json d = Json::array();
  for (const auto& v : coeffs.d) d.push_back(to_decimal_string(v));
  j["d"] = std::move(d);
  return j;
}

}  // namespace stirshare
