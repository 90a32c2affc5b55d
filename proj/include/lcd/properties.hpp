#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace lcd {

struct SuiteResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::string first_failure;  ///< empty when everything passed

  bool passed() const noexcept { return failures == 0 && trials > 0; }
};

/// massey, directsum, split, punctured, oddlike, prop2, nplus1, hull, basis.
const std::vector<std::string>& suite_names();

/// Runs `trials` randomized checks of one property with a fixed seed.
/// Throws PreconditionError for an unknown suite name.
SuiteResult run_suite(const std::string& name, std::size_t trials, std::uint64_t seed);

}  // namespace lcd
