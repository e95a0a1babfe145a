#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fqhe/sweep.hpp"

namespace fqhe {

struct ValidationOptions {
  // Multiplies k_B everywhere; anything other than 1 should break oracle
  // agreement but leave the algebraic identities intact.
  double boltzmann_scale = 1.0;
  std::int64_t max_terms = 10'000'000;
  Execution execution = Execution::Parallel;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  double worst = 0.0; // worst observed residual, in the check's own units
  double limit = 0.0;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  [[nodiscard]] bool all_passed() const;
};

/// Runs the frozen oracle points and the invariant suites of every module
/// over the default sweep.
[[nodiscard]] ValidationReport validate(const ValidationOptions& options = {});

void print_report(std::ostream& os, const ValidationReport& report);

} // namespace fqhe
