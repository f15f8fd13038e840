#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hypercone/cone.hpp"
#include "hypercone/linear_map.hpp"

namespace hypercone {

/// Nonnegative orthant: p = x1 x2 ... xn along the all-ones vector.
HyperCone orthant(int n);
/// k-th relaxation of the orthant; p_k is checked to equal k! s_{n-k} exactly.
DerivedCone orthant_deriv(int n, int k);

/// svec coordinates of symmetric n x n matrices: the n diagonal entries, then the
/// entries (i, j), i < j, row by row. No sqrt(2) scaling.
int svec_dim(int n);
int svec_index(int n, int i, int j);
std::vector<double> svec(const Eigen::MatrixXd& x);
RationalVector svec(const std::vector<RationalVector>& rows);
Eigen::MatrixXd smat(std::span<const double> v, int n);
/// Order of a symmetric matrix given the length of its svec, or -1.
int svec_order(int dim);

/// det X over svec coordinates along svec(I); n <= 4 (Leibniz expansion).
HyperCone psd(int n);
DerivedCone psd_deriv(int n, int k);

/// L_M(X) = M X M^T as a map on svec coordinates.
LinearMap lyapunov_like_map(const LinearMap& m);
Eigen::MatrixXd lyapunov_like_map(const Eigen::MatrixXd& m);
/// X -> W X + X W^T on svec coordinates (the derivative of L_{exp(tW)} at t = 0).
Eigen::MatrixXd lyapunov_generator(const Eigen::MatrixXd& w);

/// Membership of X in the spectral cone lambda^{-1}(R_+^{n,(k)}): matrix eigenvalues,
/// then s_i(lambda) >= 0, i = 1..n-k, with zero band tol * binom(n,i) ||lambda||_inf^i.
Membership psd_deriv_member(int n, int k, const Eigen::MatrixXd& x, double tol = kZeroTol);
/// Same test for a vector of eigenvalues.
Membership orthant_deriv_member_by_values(int k, std::span<const double> lambda, double tol = kZeroTol);

/// Second-order cone x0^2 >= x1^2 + ... + xn^2 in n+1 coordinates, along (1,0,...,0).
HyperCone soc(int n);

/// { x3 >= |x1| + |x2| } as the product of its four facet forms, along (0,0,1).
HyperCone l1_cone();
/// The relaxation Lambda^(1) of the l1 cone is SOC in R^3 read with x0 := x3:
/// maps (x1, x2, x3) to (x3, x1, x2).
std::vector<double> l1_to_soc_coordinates(std::span<const double> x);

/// Spectrahedral cone { x : A_1 x_1 + ... + A_m x_m is PSD } with det_A along xbar.
struct Spectrahedral {
  HyperCone cone;
  std::vector<LinearMap> matrices;
  int size = 0;  ///< order of the A_i

  Eigen::MatrixXd matrix_at(std::span<const double> x) const;
  /// Exact matrix A(x) as a LinearMap.
  LinearMap matrix_at(const RationalVector& x) const;
};

/// Checks symmetry, size <= 4, exact positive definiteness of A(xbar) (leading minors)
/// and linear independence of the A_i; throws PreconditionError otherwise.
Spectrahedral spectrahedral(const std::vector<LinearMap>& as, const RationalVector& xbar, std::string label = "spectrahedral");

/// 3x3 arrow representation of SOC in R^3 (not ROG as a hyperbolicity cone).
Spectrahedral soc_arrow_representation();
/// 2x2 representation [[x0+x1, x2], [x2, x0-x1]] of SOC in R^3 (ROG).
Spectrahedral soc_2x2_representation();

/// Matrix rank of a symmetric float matrix, relative threshold tol * max(1, ||A||).
int symmetric_matrix_rank(const Eigen::MatrixXd& a, double tol = kZeroTol);

enum class GalleryKind { Orthant, OrthantDeriv, PSD, PSDDeriv, SOC, L1, Spectrahedral };

/// A cone addressed by a CLI id ("orthant:4", "orthant:4:k=1", "psd:3", "psd:4:k=1",
/// "soc:3", "l1", "spectrahedral:<file>").
struct GalleryCone {
  GalleryKind kind = GalleryKind::Orthant;
  std::string id;
  int n = 0;  ///< orthant/psd order; ambient dimension for soc
  int k = 0;
  HyperCone base;
  /// Base for k = 0, else the relaxation as a cone.
  HyperCone cone;
  bool face_descriptor_support = false;
  std::optional<Spectrahedral> spectrahedral;

  std::optional<DerivedCone> derived() const;
};

/// Throws ParseError for unknown or malformed ids, RangeError for bad sizes.
GalleryCone gallery_cone(const std::string& id);

/// Spectrahedral file: {"matrices": [[[..]..]..], "xbar": [..]}, entries as decimal strings.
Spectrahedral spectrahedral_from_json(const nlohmann::json& j);

}  // namespace hypercone
