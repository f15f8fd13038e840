#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "hypercone/cone.hpp"
#include "hypercone/gallery.hpp"
#include "hypercone/linear_map.hpp"
#include "hypercone/report.hpp"

namespace hypercone {

struct StabilizerResult {
  bool fixed = false;
  std::optional<Rational> alpha;  ///< A e = alpha e, alpha > 0
};

/// Exact test of A e = alpha e with alpha > 0.
StabilizerResult stabilizer_check(const LinearMap& a, const RationalVector& e);

/// Exact tier: kappa = p(e)/p(Ae) and kappa (p o A) = p coefficientwise, plus Ae interior.
/// Without assumed minimality a failed identity is reported as Inconclusive.
CheckReport check_automorphism(const HyperCone& cone, const LinearMap& a, std::uint64_t seed = 1);

struct FloatTierOptions {
  int samples = 1000;
  std::uint64_t seed = 1;
  double tol = kZeroTol;  ///< violations need margins of 10 tol on both sides
};

/// Float tier: x in K <=> A x in K on Gaussian and boundary-biased samples. A violation is
/// rationalized (x and the entries of A are exact doubles) and re-verified exactly.
CheckReport float_automorphism_check(const HyperCone& cone, const Eigen::MatrixXd& a, const FloatTierOptions& opts = {});

/// Derived-cone automorphism check plus the predicted equivalence
/// (A in Aut(base) and A e in R_+ e) <=> A in Aut(k-th relaxation). In the regime
/// (ROG base, d >= 4, dim >= 3, 1 <= k <= d-3) a mismatch sets theorem_violation.
/// A non-minimal relaxation is checked in the float tier with a regime warning.
CheckReport check_deriv_automorphism(const HyperCone& cone, int k, const LinearMap& a,
                                     const FloatTierOptions& float_opts = {});
/// All three ingredients in the float tier, for maps that are not rational.
CheckReport check_deriv_automorphism_float(const HyperCone& cone, int k, const Eigen::MatrixXd& a,
                                           const FloatTierOptions& opts = {});

struct WitnessSearchOptions {
  int budget = 20000;
  std::uint64_t seed = 1;
  double margin = 1e-6;
};

struct MembershipWitness {
  RationalVector x;
  bool through_inverse = false;  ///< x in K and A^{-1} x outside K
  double lambda_x = 0;
  double lambda_image = 0;
  nlohmann::json to_json() const;
};

/// Searches for x with lambda_min(x) >= margin and lambda_min(A x) <= -margin (or the same
/// with A^{-1}); the rationalized x is re-verified exactly before it is returned.
std::optional<MembershipWitness> membership_witness_search(const HyperCone& cone, const LinearMap& a,
                                                           const WitnessSearchOptions& opts = {});

/// alpha when A = alpha P with P a permutation matrix and alpha > 0.
std::optional<Rational> scaled_permutation_factor(const LinearMap& a);
/// mu when M^T M = mu I with mu > 0.
std::optional<Rational> orthogonal_scale(const LinearMap& m);

/// Orthant relaxation: predicts Holds iff A is a positive multiple of a permutation,
/// confirms exactly, and backs predicted failures by a membership witness.
CheckReport classify_orthant_deriv(int n, int k, const LinearMap& a, const WitnessSearchOptions& opts = {});
/// PSD relaxation with L_M on svec coordinates (n = 4): predicts Holds iff M^T M = mu I.
CheckReport classify_psd_deriv(int n, int k, const LinearMap& m, const WitnessSearchOptions& opts = {});
/// Float M: prediction within tolerance, confirmation in the float tier.
CheckReport classify_psd_deriv_float(int n, int k, const Eigen::MatrixXd& m, const FloatTierOptions& opts = {});

/// Singular values of M give D; checks D^2 on the orthant relaxation (float tier) and
/// reports consistency with the verdict for L_M: L_M automorphism => D^2 automorphism.
CheckReport spectral_aut_projection(int k, const Eigen::MatrixXd& m, const CheckReport& lm_report,
                                    const FloatTierOptions& opts = {});

/// exp(tL) for every t in the grid, each through the float tier.
CheckReport lie_probe(const HyperCone& cone, const Eigen::MatrixXd& l, const std::vector<double>& t_grid,
                      const FloatTierOptions& opts = {});

/// An eigenvector for the spectral radius lying in the closed cone.
CheckReport perron_eigenvector(const HyperCone& cone, const LinearMap& a, std::uint64_t seed = 1);

/// Face descriptor of z (orthant: support; PSD: range projector) is fixed by A.
/// z must be an eigenvector of A; throws PreconditionError otherwise.
CheckReport min_face_fix_check(GalleryKind kind, const LinearMap& a, const RationalVector& z, double tol = 1e-8);

/// prod p(x_i)^(1/d) <= P(x_1, ..., x_d) with the equality case. The gap is normalized
/// as P / prod p(x_i)^(1/d) - 1; equality is expected iff the tuple is proportional.
CheckReport garding_check(const HyperCone& cone, const std::vector<RationalVector>& xs, double tol = 1e-9);

/// Exactly proportional with positive ratios.
bool pairwise_proportional(const std::vector<RationalVector>& xs);

}  // namespace hypercone
