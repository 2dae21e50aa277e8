#pragma once
// Acceptance battery: ten numbered release criteria, each returning a
// pass/fail verdict with the measured errors and its runtime.  Failures are
// report content, not exceptions.

#include <string>
#include <vector>

namespace jcsim {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;   // measured numbers vs the pinned tolerances
  double seconds = 0.0;
};

// Run one criterion (1..10; anything else throws std::invalid_argument).
// `cli_path`, when non-empty, names the command-line binary used for the
// end-to-end figure regression of criterion 10; otherwise the in-process
// library route is exercised.
CriterionResult run_criterion(int id, const std::string& cli_path = "");

struct ValidationReport {
  std::vector<CriterionResult> results;
  bool all_pass() const;
};

ValidationReport validate_suite(const std::string& cli_path = "");

// "[PASS|FAIL] criterion N (X.XX s) title: detail"
std::string format_criterion(const CriterionResult& result);

}  // namespace jcsim
