#pragma once

// Batch identity suites behind `pqknot verify`.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pqknot/parallel.hpp"

namespace pqknot {

enum class Suite { recurrence, delta_identity, homfly_factor, coeff_maps, all };

std::optional<Suite> suite_from_name(std::string_view name);
std::string_view suite_name(Suite s);

struct CheckReport {
  std::string name;
  long cases = 0;
  bool passed = true;
  /// First counterexample, rendered symbolically; empty when passed.
  std::string counterexample;
};

struct SuiteReport {
  std::vector<CheckReport> checks;

  bool passed() const;
  long failures() const;
};

/// Runs every check of the suite for indices up to max_n (max_n >= 1).
/// Check order and counterexamples do not depend on exec.
SuiteReport run_suite(Suite suite, long max_n, Execution exec = Execution::parallel);

}  // namespace pqknot
