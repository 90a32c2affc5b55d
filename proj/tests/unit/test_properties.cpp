#include <doctest.h>

#include "lcd/errors.hpp"
#include "lcd/properties.hpp"

using namespace lcd;

TEST_CASE("every suite passes a short run") {
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    const auto r = run_suite(name, 100, 99);
    CHECK(r.passed());
    CHECK(r.first_failure == "");
  }
}

TEST_CASE("runs are reproducible") {
  const auto a = run_suite("massey", 50, 5);
  const auto b = run_suite("massey", 50, 5);
  CHECK(a.trials == b.trials);
  CHECK(a.failures == b.failures);
}

TEST_CASE("unknown suite") { CHECK_THROWS_AS(run_suite("nope", 1, 1), PreconditionError); }
