#pragma once

#include <string>
#include <vector>

#include "ohpade/json_io.hpp"

namespace ohpade {

struct CriterionResult {
  std::string id;    // "C1" .. "C12", or "catalog"
  std::string name;  // suite name
  double measured = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

CriterionResult check_orthonormality();
CriterionResult check_circle_equivalence();
CriterionResult check_exact_recovery();
CriterionResult check_rate_circle();
CriterionResult check_rate_interval();
CriterionResult check_radius();
CriterionResult check_cross_method();
CriterionResult check_second_type();
CriterionResult check_kappa();
CriterionResult check_pole_capture();
CriterionResult check_inverse();
CriterionResult check_approximation_rate();
// Recomputes each hand-derived catalog number.
CriterionResult check_catalog();

// Suite names accepted by run_suite, "all" last.
std::vector<std::string> suite_names();
// ParameterError for an unknown suite. Failures are results, not exceptions;
// an exception inside a check becomes a failed result carrying its message.
std::vector<CriterionResult> run_suite(const std::string& name);

std::string format_result(const CriterionResult& r);
Json to_json(const CriterionResult& r);

}  // namespace ohpade
