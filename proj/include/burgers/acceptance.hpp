#pragma once
// The acceptance suite: eight property/oracle criteria with pinned
// tolerances. Each criterion is independent, so the suite can run them on
// several threads.

#include <string>
#include <vector>

#include <json.hpp>

namespace burgers {

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
};

inline constexpr int kCriterionCount = 8;

/// Runs one criterion (1..8). Exceptions are caught and reported as a
/// failure with the message in `detail`.
CriterionResult run_criterion(int id);

/// Runs the given criteria (all when empty) on up to `threads` workers;
/// results come back ordered by id.
std::vector<CriterionResult> run_acceptance(unsigned threads, const std::vector<int>& ids = {});

/// "[PASS] 3 steady solution (1.2 s): ..."
std::string format_result_line(const CriterionResult& r);

nlohmann::json to_json(const std::vector<CriterionResult>& results);

}  // namespace burgers
