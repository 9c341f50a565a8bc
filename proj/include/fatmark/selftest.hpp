#pragma once

// Randomized property checks over all modules.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace fatmark {

struct SelftestReport {
  std::size_t trials = 0;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

SelftestReport run_selftest(std::uint64_t seed, std::size_t trials);

}  // namespace fatmark
