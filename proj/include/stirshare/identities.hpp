#pragma once

#include <string>
#include <vector>

namespace stirshare {

/// Outcome of one family of exact checks.
struct FamilyResult {
  std::string name;
  long checks = 0;
  long failures = 0;
  /// Description of the first failing instance, if any.
  std::string first_failure;

  bool pass() const { return failures == 0 && checks > 0; }
};

// Each suite covers every valid index up to max_n.
std::vector<FamilyResult> stirling_suite(int max_n);
std::vector<FamilyResult> coefficient_table_suite(int max_n);
std::vector<FamilyResult> jet_suite(int max_n);
std::vector<FamilyResult> lahiri_suite(int max_n);
std::vector<FamilyResult> alpha_equation_suite(int max_n);

/// All suites above. Requires max_n >= 2 (std::invalid_argument otherwise).
std::vector<FamilyResult> verify_identities(int max_n);

bool all_pass(const std::vector<FamilyResult>& results);

/// "name PASS (checks=K)" or "name FAIL (checks=K, failures=F, first: ...)".
std::string format_result(const FamilyResult& r);

}  // namespace stirshare
