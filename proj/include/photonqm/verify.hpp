#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace photonqm {

/// One measured invariant: passes when `measured` lies in [lower, upper].
struct CheckResult {
  std::string suite;
  std::string name;
  double measured = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  bool passed = false;
};

/// algebra, operators, scalar, spinor, maxwell, equivalence, dispersion and
/// the union "all".
const std::vector<std::string>& suite_names();

/// Runs a named suite with randomized inputs drawn from `seed`. Throws
/// ConfigError for an unknown suite name.
std::vector<CheckResult> run_suite(std::string_view suite, std::uint64_t seed = 0);

/// Fixed-width pass/fail table with one line per check and a summary line.
std::string format_report(const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace photonqm
