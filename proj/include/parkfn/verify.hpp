#pragma once

#include <string>
#include <vector>

namespace pf::verify {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;  // mismatch description when failing
};

using Suite = std::vector<Check>;

// Named identity suites (thm2.1, cor2.3, thm3.3, ..., table1,
// counterexamples). max_n < 0 runs the suite's default sizes.
Suite run_suite(const std::string& suite, int max_n = -1);
std::vector<std::string> suite_names();
bool all_passed(const Suite& s);

}  // namespace pf::verify
