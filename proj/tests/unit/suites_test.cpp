#include <algorithm>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "gasket/suites.hpp"

using namespace gasket;

TEST_SUITE_BEGIN("suites");

TEST_CASE("names are stable and dispatch works") {
  const auto& names = suite_names();
  for (const char* expected : {"metric", "functor", "initiality", "finality",
                               "completion", "euclid"}) {
    CHECK(std::find(names.begin(), names.end(), expected) != names.end());
  }
  CHECK_THROWS_AS(run_suite("nope", 0), std::invalid_argument);
}

TEST_CASE("every suite passes under a fresh seed") {
  for (const std::string& name : suite_names()) {
    const SuiteResult result = run_suite(name, 20260822);
    CAPTURE(name);
    CHECK(result.passed);
    CHECK(!result.checks.empty());
    for (const CheckResult& c : result.checks) {
      CAPTURE(c.name);
      CHECK(c.passed);
    }
  }
}

TEST_CASE("negative control trips exactly the finality square") {
  const SuiteResult result = run_suite("finality", 0, true);
  CHECK(!result.passed);
  std::size_t failed = 0;
  for (const CheckResult& c : result.checks) {
    if (!c.passed) {
      ++failed;
      CHECK(c.name.find("structure map") != std::string::npos);
    }
  }
  CHECK(failed == 1);
}

TEST_CASE("json rendering") {
  const SuiteResult result = run_suite("metric", 1);
  const std::string json = to_json_string(result);
  CHECK(json.find("\"schema\": 1") != std::string::npos);
  CHECK(json.find("\"suite\": \"metric\"") != std::string::npos);
  CHECK(json.find("\"passed\": true") != std::string::npos);
}

TEST_SUITE_END();
