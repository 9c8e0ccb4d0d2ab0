#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hypint/identity/report.hpp"

namespace hypint {

struct SuiteOptions {
  int trials = 25;
  std::uint64_t seed = 42;
  TolerancePolicy policy;
  // Worker threads; 0 uses the hardware concurrency.
  unsigned threads = 0;
};

// Registered names, "all" last.
const std::vector<std::string>& suite_names();

// Runs one registered suite or "all". UnknownSuite for other names. Random
// parameters come from a generator seeded by (seed, suite name), so a suite
// draws the same values alone and inside "all".
SuiteReport run_suite(std::string_view name, const PrecisionContext& ctx, const SuiteOptions& opts = {});

}  // namespace hypint
