#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypercone/homopoly.hpp"
#include "hypercone/unipoly.hpp"

namespace hypercone {

inline constexpr double kResidualTol = 1e-8;
inline constexpr double kZeroTol = 1e-7;

struct RootResult {
  std::vector<double> roots;  ///< real parts, descending
  double residual = 0;        ///< largest imaginary magnitude seen
};

/// All roots of q (coefficients c_0..c_d, zeros trimmed) from the eigenvalues of a
/// balanced companion matrix; real parts are Newton-polished when residual <= tol.
RootResult real_roots(std::span<const double> coeffs, double tol = kResidualTol);
RootResult real_roots(const UniPoly& q, double tol = kResidualTol);

/// Sorted hyperbolic eigenvalues together with the numerical evidence behind them.
struct Spectrum {
  std::vector<double> eigenvalues;  ///< descending
  double residual = 0;
  double zero_tol = kZeroTol;
  double residual_tol = kResidualTol;
  /// An exact Sturm count confirmed every root real, so a large residual is
  /// only a conditioning artefact.
  bool certified_real = false;
  /// Exact multiplicity of the eigenvalue 0, when the input was exact.
  std::optional<int> exact_zero_mult;

  int degree() const { return static_cast<int>(eigenvalues.size()); }
  double min() const { return eigenvalues.back(); }
  double max() const { return eigenvalues.front(); }
  bool inconclusive() const { return residual > residual_tol && !certified_real; }
  /// Some |lambda| falls in the band (zero_tol/4, 4 zero_tol).
  bool rank_ambiguous() const;
  /// Throws InconclusiveError on large residuals or ambiguous zero classification.
  int rank() const;
  int mult() const { return degree() - rank(); }

  nlohmann::json to_json() const;
};

/// Spectrum of the roots of q(t) = p(te - x), given as float coefficients.
Spectrum spectrum_from_restriction(std::span<const double> coeffs, double zero_tol = kZeroTol,
                                   double residual_tol = kResidualTol);

/// Exact restriction: zero multiplicity is read off exactly and repeated roots are
/// separated by a square-free decomposition before any floating point is involved.
Spectrum spectrum_from_restriction(const UniPoly& q, double zero_tol = kZeroTol,
                                   double residual_tol = kResidualTol);

/// Number of roots in [0, inf) with multiplicity by float roots versus the exact
/// Sturm count; used as an oracle-equivalence check.
struct RootCountComparison {
  int float_count = 0;
  int sturm_count = 0;
  bool agree() const { return float_count == sturm_count; }
};
RootCountComparison compare_nonnegative_root_counts(const UniPoly& q, double zero_tol = kZeroTol);

struct HyperbolicityCertificate {
  enum class Verdict { LooksHyperbolic, RefutedWithWitness };
  Verdict verdict = Verdict::LooksHyperbolic;
  int samples_checked = 0;
  double worst_residual = 0;
  std::optional<RationalVector> witness;

  nlohmann::json to_json() const;
};

/// Falsification test: Gaussian samples and boundary-biased samples y - lambda_min(y) e.
/// A witness is reported only after its exact restriction fails the Sturm real-root count.
HyperbolicityCertificate check_hyperbolic(const HomoPoly& p, const RationalVector& e, int nsamples,
                                          std::uint64_t seed, double tol = kResidualTol);

}  // namespace hypercone
