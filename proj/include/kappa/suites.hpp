#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kappa/linalg.hpp"

namespace kappa {

enum class Suite { Core, Groups, Brackets, Schouten, Affine, All };

std::optional<Suite> parse_suite(std::string_view name);
std::string suite_name(Suite s);

struct SuiteConfig {
  std::vector<int> dims{4, 5, 6};
  std::uint64_t seed = 1;
  int samples = 100;
  double tol_structural = 1e-10;
  double tol_numeric = 1e-9;
  double tol_fd = 1e-6;
};

struct CheckResult {
  std::string suite;
  std::string name;
  int dim = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  int samples_run = 0;
  bool pass = false;  // max_error <= tolerance
};

struct SuiteReport {
  std::string suite;
  std::vector<int> dims;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;  // ordered by (suite, dim, name)
  std::optional<double> h_match;    // present when the brackets suite ran
  int passed = 0;
  int failed = 0;
};

// Runs every invariant of the named module(s); deterministic given
// (seed, config). Throws std::invalid_argument for invalid dims (the kappa
// suites need dim >= 4; schouten/affine accept dim >= 3).
SuiteReport run_suite(Suite which, const SuiteConfig& config);

}  // namespace kappa
