#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hypercone {

enum class CheckStatus { Pass, Fail, Inconclusive };
const char* to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  std::string title;
  CheckStatus status = CheckStatus::Inconclusive;
  double seconds = 0;
  double time_limit = 0;
  nlohmann::json counts = nlohmann::json::object();
  /// Re-verifiable payload of the first failure, if any.
  nlohmann::json witness;
  std::vector<std::string> notes;

  bool passed() const { return status == CheckStatus::Pass; }
  /// Deterministic part only (no timing).
  nlohmann::json to_json() const;
};

struct SuiteOptions {
  std::uint64_t seed = 20240611;
  /// Substring of a check name; empty selects every check.
  std::string filter;
};

struct SuiteResult {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  double wall_seconds = 0;

  bool all_passed() const;
  nlohmann::json to_json() const;
};

/// Names of the checks in execution order.
std::vector<std::string> suite_check_names();

/// Runs the selected checks; a check fails when it exceeds its time limit.
/// Throws ParseError when the filter selects nothing.
SuiteResult run_suite(const SuiteOptions& opts);

}  // namespace hypercone
