#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace abel {

struct CriterionResult {
  std::string id;
  std::string title;
  bool passed = false;
  /// Report lines: counts, fitted constants, documented discrepancies.
  std::vector<std::string> detail;
  double seconds = 0.0;
};

/// "center", "moments", "decomp", "trig", "udef", "all".
const std::vector<std::string>& suite_names();

/// Criterion ids run by a suite, e.g. {"A8", "A9"} for "trig".
std::vector<std::string> suite_criteria(const std::string& suite);

/// Runs the criteria of a suite with seeded-deterministic samples. Throws
/// InputError for an unknown suite name.
std::vector<CriterionResult> run_suite(const std::string& suite, std::uint64_t seed);

/// Runs a single criterion by id ("A1" .. "A10").
CriterionResult run_criterion(const std::string& id, std::uint64_t seed);

/// One line: "[PASS] A1 title (1.23s)".
std::string summary_line(const CriterionResult& r);

}  // namespace abel
