#pragma once

#include "stirshare/coefftab.hpp"
#include "stirshare/jet.hpp"
#include "stirshare/stirling.hpp"

#include <json.hpp>

#include <string>

namespace stirshare {

using Json = nlohmann::ordered_json;

// Term order everywhere: ascending derivative order, then ascending
// exponential power, then ascending (c_pow, lambda_pow, an_pow).

std::string to_text(const RingElem& r);
std::string to_text(const ExpPoly& x);
std::string to_text(const AlphaJet& jet);
std::string to_text(const OdeSpec& ode);

std::string to_latex(const RingElem& r);
std::string to_latex(const ExpPoly& x);
std::string to_latex(const AlphaJet& jet);
std::string to_latex(const OdeSpec& ode);

Json to_json(const RingElem& r);
Json to_json(const ExpPoly& x);
Json to_json(const AlphaJet& jet);
Json to_json(const OdeSpec& ode);

/// {"kind": ..., "max_n": N, "rows": [["1"], ["0","1"], ...]}
Json stirling_table_json(const StirlingTable& table);
/// {"max_n": N, "zeta": [[n,k,j,"v"],...], "eps": [...]}
Json zeta_eps_json(const ZetaEpsTable& table);
/// {"n": n, "a": [{"j":1,"terms":[...]}...], "d": ["..."]}
Json lahiri_json(const LahiriCoeffs& coeffs);

/// Aligned plain-text rendering of a Stirling table.
std::string stirling_table_text(const StirlingTable& table);

}  // namespace stirshare
