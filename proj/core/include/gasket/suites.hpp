#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gasket {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string details;
};

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  bool passed = false;
  std::vector<CheckResult> checks;
};

// Suites: metric, functor, initiality, finality, completion, euclid, all.
const std::vector<std::string>& suite_names();

// Runs the named property suite deterministically for the seed.  Throws
// std::invalid_argument for unknown names.  negative_control deliberately
// breaks one finality check to demonstrate the failure path.
SuiteResult run_suite(const std::string& name, std::uint64_t seed,
                      bool negative_control = false);

std::string to_json_string(const SuiteResult& result);

}  // namespace gasket
