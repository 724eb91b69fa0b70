/**
 * @file checks.hpp
 * @brief Named property-check suites with per-check tolerances.
 *
 * Every check computes a scalar residual and passes when it does not exceed
 * its tolerance. Residuals are seeded deterministically per check name, and
 * randomized checks draw each trial from an independent child generator, so
 * results do not depend on suite composition or trial count prefixes.
 *
 * Control checks (names ending in ".control") verify that the corresponding
 * detector actually fires on a deliberately broken input: their residual is
 * 0 when the corrupted input was flagged and 1 when it slipped through.
 */
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cskit {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct CheckOptions {
  int trials = 200;
  std::uint64_t seed = 0;
  std::map<std::string, double> tolerance_overrides;
};

/// Suite names: "algebra", "quat", "covers", "metrics", "screws", "all".
const std::vector<std::string>& check_suite_names();

/// Run one suite (or all). Throws UsageError for unknown suite names.
std::vector<CheckResult> run_checks(const std::string& suite,
                                    const CheckOptions& opt);

}  // namespace cskit
