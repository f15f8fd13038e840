#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypercone/rational.hpp"

namespace hypercone {

enum class Verdict { Holds, FailsWithWitness, Inconclusive };
const char* to_string(Verdict v);

/// Outcome of a property check. A FailsWithWitness report always carries a
/// witness that has been re-verified before the report was returned.
struct CheckReport {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<Rational> kappa;
  std::optional<RationalVector> witness;
  std::vector<std::string> diagnostics;
  nlohmann::json tolerances = nlohmann::json::object();
  int samples = 0;
  std::vector<std::string> regime_warnings;
  bool theorem_violation = false;
  nlohmann::json details = nlohmann::json::object();

  bool holds() const { return verdict == Verdict::Holds; }
  bool fails() const { return verdict == Verdict::FailsWithWitness; }
  nlohmann::json to_json() const;
};

nlohmann::json rational_json(const Rational& r);
nlohmann::json vector_json(const RationalVector& v);

}  // namespace hypercone
