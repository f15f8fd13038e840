#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypercone/homopoly.hpp"
#include "hypercone/report.hpp"
#include "hypercone/spectrum.hpp"

namespace hypercone {

/// Hyperbolicity cone of p along e, with D_e^k p (k = 0..d) precomputed exactly
/// and in float form. Copies share the cached data.
class HyperCone {
 public:
  HyperCone() = default;
  /// Throws PreconditionError unless p(e) > 0 and deg p >= 1.
  HyperCone(HomoPoly p, RationalVector e, std::string label, bool minimality_assumed = false, bool rog = false);

  const HomoPoly& p() const { return data_->derivs.front(); }
  const RationalVector& e() const { return data_->e; }
  const std::vector<double>& e_double() const { return data_->e_double; }
  int d() const { return p().degree(); }
  int dim() const { return p().nvars(); }
  const Rational& pe() const { return data_->pe; }
  const std::string& label() const { return data_->label; }
  bool minimality_assumed() const { return data_->minimality_assumed; }
  bool rog() const { return data_->rog; }

  /// D_e^k p, 0 <= k <= d.
  const HomoPoly& deriv(int k) const;
  const FloatPoly& fderiv(int k) const;
  std::span<const HomoPoly> derivs() const { return data_->derivs; }
  /// max |coefficient| of D_e^k p, as a double.
  double coeff_scale(int k) const { return data_->coeff_scale.at(static_cast<std::size_t>(k)); }

  /// Coefficients of t -> p(te - x).
  std::vector<double> restriction(std::span<const double> x) const;
  UniPoly restriction(const RationalVector& x) const;

  nlohmann::json to_json() const;

 private:
  struct Data {
    RationalVector e;
    std::vector<double> e_double;
    Rational pe;
    std::string label;
    bool minimality_assumed = false;
    bool rog = false;
    std::vector<HomoPoly> derivs;
    std::vector<FloatPoly> fderivs;
    std::vector<double> coeff_scale;
  };
  std::shared_ptr<const Data> data_;
};

/// Cone descriptor JSON {"label", "polynomial", "e", "k"?}; "k" is ignored here.
HyperCone hypercone_from_json(const nlohmann::json& j);

/// k-th derivative relaxation of a base cone.
struct DerivedCone {
  HyperCone base;
  int k = 0;
  HomoPoly p_k;

  /// The relaxation as a cone in its own right. Minimality is assumed exactly when
  /// the base is ROG with minimality assumed and 1 <= k <= d-2.
  HyperCone as_cone() const;
};

DerivedCone derivative_cone(const HyperCone& cone, int k);

enum class Membership { In, Out, BoundaryAmbiguous };
const char* to_string(Membership m);

Spectrum eigenvalues(const HyperCone& cone, std::span<const double> x, double zero_tol = kZeroTol,
                     double residual_tol = kResidualTol);
/// Exact restriction, so zero multiplicities and repeated eigenvalues are exact.
Spectrum eigenvalues(const HyperCone& cone, const RationalVector& x, double zero_tol = kZeroTol,
                     double residual_tol = kResidualTol);

/// Float-input spectrum that falls back to the exact path on the same (exactly
/// representable) point when the companion residual is too large.
Spectrum robust_eigenvalues(const HyperCone& cone, std::span<const double> x, double zero_tol = kZeroTol);

int rank(const HyperCone& cone, const RationalVector& x, double zero_tol = kZeroTol);
int mult(const HyperCone& cone, const RationalVector& x, double zero_tol = kZeroTol);
int rank(const HyperCone& cone, std::span<const double> x, double zero_tol = kZeroTol);

/// Rank recomputed along a second interior direction e2 (checked exactly to be interior);
/// throws InconclusiveError when the two ranks disagree.
int rank_cross_checked(const HyperCone& cone, const RationalVector& x, const RationalVector& e2,
                       double zero_tol = kZeroTol);

/// In when lambda_min > tol, Out when lambda_min < -tol, otherwise BoundaryAmbiguous.
Membership contains(const HyperCone& cone, std::span<const double> x, double tol = kZeroTol);
/// Exact decision from the root census of the exact restriction; boundary points are In.
Membership contains(const HyperCone& cone, const RationalVector& x);

bool in_interior(const HyperCone& cone, std::span<const double> x, double tol = kZeroTol);
/// Exact: no zero or negative root.
bool in_interior(const HyperCone& cone, const RationalVector& x);

/// Membership in the k-th relaxation through D_e^i p(x) >= 0, i = k..d-1. A value
/// is treated as zero when |D_e^i p(x)| <= tol * scale_i with
/// scale_i = max|coeff(D_e^i p)| * ||x||_2^(d-i).
Membership contains_by_inequalities(const HyperCone& cone, int k, std::span<const double> x, double tol = kZeroTol);
/// Exact signs; boundary points are In.
Membership contains_by_inequalities(const HyperCone& cone, int k, const RationalVector& x);

Membership contains(const DerivedCone& cone, std::span<const double> x, double tol = kZeroTol);
Membership contains(const DerivedCone& cone, const RationalVector& x);

/// Exact margin tests: lambda_min(x) >= margin, and lambda_min(x) <= -margin.
bool min_eigenvalue_at_least(const HyperCone& cone, const RationalVector& x, const Rational& margin);
bool min_eigenvalue_at_most(const HyperCone& cone, const RationalVector& x, const Rational& neg_margin);

/// Searches for x in the k-th relaxation but outside the (k-1)-th, with
/// lambda_min^(k)(x) >= 10 tol and lambda_min^(k-1)(x) <= -10 tol; both margins are
/// re-verified exactly on the rationalized witness. Holds(witness) or Inconclusive.
CheckReport strict_containment_witness(const HyperCone& cone, int k, int budget, std::uint64_t seed,
                                       double tol = kZeroTol);

}  // namespace hypercone
