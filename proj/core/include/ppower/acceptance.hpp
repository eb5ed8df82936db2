#pragma once

#include <string>
#include <vector>

namespace ppower {

/// One end-to-end regression check; `detail` holds the computed-vs-expected
/// summary and `seconds` the wall-clock time.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

int acceptance_criterion_count();

/// Runs one criterion (1-based id); throws InvalidInput for unknown ids.
CriterionResult run_acceptance_criterion(int id);

/// Runs the whole suite in order.
std::vector<CriterionResult> run_acceptance_suite();

}  // namespace ppower
