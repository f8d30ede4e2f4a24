#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace weightsum {

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t instances = 0;  // 0 picks the suite default
  std::size_t max_order = 0;  // cap on |Pi|; 0 picks the suite default
};

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> messages;          // first few failure descriptions
  std::map<std::string, std::size_t> tally;   // per-path / per-case counts
  bool ok() const { return failures == 0; }
};

std::vector<std::string> suite_names();

// Runs one named invariant suite with deterministic seeding.  Throws
// UnknownSuite for names outside suite_names().
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace weightsum
