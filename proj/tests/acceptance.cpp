// Runs every acceptance criterion and prints one pass/fail line per
// criterion. Usage: acceptance [seed] [criterion...]

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "abel/verify.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 7;
  std::vector<std::string> ids;
  for (int a = 1; a < argc; ++a) {
    std::string arg = argv[a];
    if (arg.size() > 1 && arg[0] == 'A') ids.push_back(arg);
    else seed = std::strtoull(arg.c_str(), nullptr, 10);
  }
  if (ids.empty()) ids = abel::suite_criteria("all");

  int failed = 0;
  for (const auto& id : ids) {
    abel::CriterionResult r = abel::run_criterion(id, seed);
    std::cout << abel::summary_line(r) << '\n';
    for (const auto& line : r.detail) std::cout << "    " << line << '\n';
    std::cout.flush();
    if (!r.passed) ++failed;
  }
  std::cout << (ids.size() - failed) << "/" << ids.size() << " criteria passed (seed " << seed << ")\n";
  return failed == 0 ? 0 : 1;
}
