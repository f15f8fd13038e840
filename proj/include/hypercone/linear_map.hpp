#pragma once

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "hypercone/rational.hpp"

namespace hypercone {

/// Square matrix with exact rational entries and a cached floating view.
class LinearMap {
 public:
  LinearMap() = default;
  /// Row-major entries; throws DimensionError unless entries.size() == n*n.
  LinearMap(int n, std::vector<Rational> entries);
  explicit LinearMap(const std::vector<RationalVector>& rows);

  static LinearMap identity(int n);
  static LinearMap diagonal(const RationalVector& diag);
  /// Maps basis vector e_j to e_{perm[j]}, i.e. (Px)_{perm[j]} = x_j.
  static LinearMap permutation(const std::vector<int>& perm);

  int dim() const { return n_; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  const Eigen::MatrixXd& as_double() const { return f_; }
  bool invertible() const { return det_ != 0; }
  const Rational& determinant() const { return det_; }
  RationalVector row(int i) const;

  RationalVector apply(const RationalVector& x) const;
  std::vector<double> apply(const std::vector<double>& x) const;

  LinearMap operator*(const LinearMap& other) const;
  LinearMap scaled(const Rational& s) const;
  LinearMap transpose() const;
  /// Exact inverse; throws PreconditionError when singular.
  LinearMap inverse() const;

  bool operator==(const LinearMap& other) const { return n_ == other.n_ && a_ == other.a_; }

 private:
  void finish();

  int n_ = 0;
  std::vector<Rational> a_;
  Eigen::MatrixXd f_;
  Rational det_;
};

/// Exact determinant by Gaussian elimination over the rationals.
Rational determinant(std::vector<Rational> a, int n);

/// Exact rank of a rows x cols rational matrix (row-major).
int exact_rank(std::vector<Rational> a, int rows, int cols);

/// Solves B u = z for u where B is rows x cols (row-major); nullopt when inconsistent
/// or when the columns of B are dependent.
std::optional<RationalVector> solve_exact(std::vector<Rational> b, int rows, int cols, const RationalVector& z);

}  // namespace hypercone
