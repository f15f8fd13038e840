#include "hypercone/report.hpp"

namespace hypercone {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "Holds";
    case Verdict::FailsWithWitness: return "FailsWithWitness";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

nlohmann::json rational_json(const Rational& r) {
  return {{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

nlohmann::json vector_json(const RationalVector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j{{"verdict", to_string(verdict)},
                   {"samples", samples},
                   {"tolerances", tolerances},
                   {"regime_warnings", regime_warnings}};
  if (kappa) j["kappa"] = rational_json(*kappa);
  if (witness) j["witness"] = vector_json(*witness);
  if (!diagnostics.empty()) j["diagnostics"] = diagnostics;
  if (theorem_violation) j["theorem_violation"] = true;
  if (!details.empty()) j["details"] = details;
  return j;
}

}  // namespace hypercone
