#include "abel/verify.hpp"

#include <cstdio>
#include <map>

#include "abel/error.hpp"
#include "verify_internal.hpp"

namespace abel {

namespace {

using Runner = CriterionResult (*)(std::uint64_t);

const std::map<std::string, std::vector<std::string>>& suites() {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"center", {"A1", "A2", "A3", "A4"}},
      {"moments", {"A5"}},
      {"decomp", {"A6", "A7"}},
      {"trig", {"A8", "A9"}},
      {"udef", {"A10"}},
      {"all", {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "A10"}},
  };
  return table;
}

Runner runner(const std::string& id) {
  using namespace verify_detail;
  static const std::map<std::string, Runner> table = {
      {"A1", criterion_a1}, {"A2", criterion_a2}, {"A3", criterion_a3}, {"A4", criterion_a4},
      {"A5", criterion_a5}, {"A6", criterion_a6}, {"A7", criterion_a7}, {"A8", criterion_a8},
      {"A9", criterion_a9}, {"A10", criterion_a10},
  };
  auto it = table.find(id);
  if (it == table.end()) throw InputError("field 'criterion': unknown criterion '" + id + "'");
  return it->second;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"center", "moments", "decomp", "trig", "udef", "all"};
  return names;
}

std::vector<std::string> suite_criteria(const std::string& suite) {
  auto it = suites().find(suite);
  if (it == suites().end()) throw InputError("field 'suite': unknown suite '" + suite + "'");
  return it->second;
}

CriterionResult run_criterion(const std::string& id, std::uint64_t seed) {
  Runner run = runner(id);
  try {
    return run(seed);
  } catch (const std::exception& e) {
    CriterionResult r;
    r.id = id;
    r.title = "aborted";
    r.detail.push_back(std::string("exception: ") + e.what());
    return r;
  }
}

std::vector<CriterionResult> run_suite(const std::string& suite, std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (const auto& id : suite_criteria(suite)) out.push_back(run_criterion(id, seed));
  return out;
}

std::string summary_line(const CriterionResult& r) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2fs", r.seconds);
  return std::string(r.passed ? "[PASS] " : "[FAIL] ") + r.id + " " + r.title + " (" + secs + ")";
}

}  // namespace abel
