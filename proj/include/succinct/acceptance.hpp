#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace succinct {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;  // 0: no time limit
  std::string detail;
};

inline constexpr int acceptance_criteria = 13;
inline constexpr std::uint64_t default_acceptance_seed = 1;

/// Runs criterion id (1..13). Exceptions count as failures.
CriterionResult run_criterion(int id, std::uint64_t seed = default_acceptance_seed);

/// One line: "criterion <id> PASS|FAIL <title>: <detail> (<s> s[, limit <l> s])".
std::string format_result(const CriterionResult& r);

} // namespace succinct
