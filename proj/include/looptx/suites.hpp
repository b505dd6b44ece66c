#pragma once

// End-to-end property sweeps. Each suite draws its inputs from a seeded
// engine, records one CheckResult per measured quantity, and is timed
// against a wall-clock budget.

#include <cstdint>
#include <string>
#include <vector>

#include "looptx/random.hpp"

namespace looptx {

/// `value` is compared against `tolerance`: for residuals value <= tolerance
/// passes; checks with `lower_bound` pass when value > tolerance.
struct CheckResult {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool lower_bound = false;
  bool pass = false;
};

CheckResult residual_check(std::string name, double value, double tolerance);
CheckResult margin_check(std::string name, double value, double threshold);
/// Exact boolean condition; value is the number of violations.
CheckResult exact_check(std::string name, std::size_t violations);

struct SuiteResult {
  int criterion = 0;
  std::string name;
  std::vector<CheckResult> checks;
  double seconds = 0.0;
  double budget_seconds = 0.0;

  bool within_budget() const { return seconds < budget_seconds; }
  bool passed() const;
};

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  /// Scales every trial count; 1.0 reproduces the acceptance counts.
  double scale = 1.0;
};

SuiteResult unitarity_suite(const SuiteOptions& options = {});
SuiteResult inclusion_suite(const SuiteOptions& options = {});
SuiteResult kernel_suite(const SuiteOptions& options = {});
SuiteResult interpolation_suite(const SuiteOptions& options = {});
SuiteResult mandelstam_suite(const SuiteOptions& options = {});
SuiteResult fourier_suite(const SuiteOptions& options = {});
SuiteResult bochner_suite(const SuiteOptions& options = {});
SuiteResult round_trip_suite(const SuiteOptions& options = {});
SuiteResult path_suite(const SuiteOptions& options = {});

/// Criteria 1-9 in order.
std::vector<SuiteResult> run_all_suites(const SuiteOptions& options = {});

}  // namespace looptx
