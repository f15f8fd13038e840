#include "hypercone/linear_map.hpp"

#include "hypercone/error.hpp"

namespace hypercone {

LinearMap::LinearMap(int n, std::vector<Rational> entries) : n_(n), a_(std::move(entries)) {
  if (n <= 0 || a_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw DimensionError("linear map needs n*n entries");
  finish();
}

LinearMap::LinearMap(const std::vector<RationalVector>& rows) : n_(static_cast<int>(rows.size())) {
  if (n_ == 0) throw DimensionError("empty matrix");
  a_.reserve(rows.size() * rows.size());
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw DimensionError("matrix is not square");
    a_.insert(a_.end(), r.begin(), r.end());
  }
  finish();
}

void LinearMap::finish() {
  for (auto& v : a_) v.canonicalize();
  f_.resize(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) f_(i, j) = (*this)(i, j).get_d();
  det_ = hypercone::determinant(a_, n_);
}

LinearMap LinearMap::identity(int n) {
  std::vector<Rational> a(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i * n + i)] = 1;
  return LinearMap(n, std::move(a));
}

LinearMap LinearMap::diagonal(const RationalVector& diag) {
  int n = static_cast<int>(diag.size());
  std::vector<Rational> a(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i * n + i)] = diag[static_cast<std::size_t>(i)];
  return LinearMap(n, std::move(a));
}

LinearMap LinearMap::permutation(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  std::vector<bool> seen(perm.size(), false);
  std::vector<Rational> a(static_cast<std::size_t>(n * n));
  for (int j = 0; j < n; ++j) {
    int i = perm[static_cast<std::size_t>(j)];
    if (i < 0 || i >= n || seen[static_cast<std::size_t>(i)]) throw PreconditionError("not a permutation");
    seen[static_cast<std::size_t>(i)] = true;
    a[static_cast<std::size_t>(i * n + j)] = 1;
  }
  return LinearMap(n, std::move(a));
}

RationalVector LinearMap::row(int i) const {
  return RationalVector(a_.begin() + i * n_, a_.begin() + (i + 1) * n_);
}

RationalVector LinearMap::apply(const RationalVector& x) const {
  if (static_cast<int>(x.size()) != n_) throw DimensionError("vector dimension does not match map");
  RationalVector y(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    Rational s = 0;
    for (int j = 0; j < n_; ++j)
      if (sgn((*this)(i, j)) != 0) s += (*this)(i, j) * x[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] = s;
  }
  return y;
}

std::vector<double> LinearMap::apply(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != n_) throw DimensionError("vector dimension does not match map");
  Eigen::Map<const Eigen::VectorXd> xv(x.data(), n_);
  Eigen::VectorXd y = f_ * xv;
  return {y.data(), y.data() + n_};
}

LinearMap LinearMap::operator*(const LinearMap& other) const {
  if (n_ != other.n_) throw DimensionError("matrix product dimension mismatch");
  std::vector<Rational> c(a_.size());
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const Rational& aik = (*this)(i, k);
      if (sgn(aik) == 0) continue;
      for (int j = 0; j < n_; ++j) c[static_cast<std::size_t>(i * n_ + j)] += aik * other(k, j);
    }
  return LinearMap(n_, std::move(c));
}

LinearMap LinearMap::scaled(const Rational& s) const {
  std::vector<Rational> c(a_);
  for (auto& v : c) v *= s;
  return LinearMap(n_, std::move(c));
}

LinearMap LinearMap::transpose() const {
  std::vector<Rational> c(a_.size());
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) c[static_cast<std::size_t>(j * n_ + i)] = (*this)(i, j);
  return LinearMap(n_, std::move(c));
}

LinearMap LinearMap::inverse() const {
  if (!invertible()) throw PreconditionError("matrix is singular");
  int n = n_;
  int w = 2 * n;
  std::vector<Rational> m(static_cast<std::size_t>(n * w));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i * w + j)] = (*this)(i, j);
    m[static_cast<std::size_t>(i * w + n + i)] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (sgn(m[static_cast<std::size_t>(piv * w + col)]) == 0) ++piv;
    if (piv != col)
      for (int j = 0; j < w; ++j) std::swap(m[static_cast<std::size_t>(piv * w + j)], m[static_cast<std::size_t>(col * w + j)]);
    Rational inv = 1 / m[static_cast<std::size_t>(col * w + col)];
    for (int j = 0; j < w; ++j) m[static_cast<std::size_t>(col * w + j)] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      Rational f = m[static_cast<std::size_t>(i * w + col)];
      if (sgn(f) == 0) continue;
      for (int j = 0; j < w; ++j) m[static_cast<std::size_t>(i * w + j)] -= f * m[static_cast<std::size_t>(col * w + j)];
    }
  }
  std::vector<Rational> out(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(i * n + j)] = m[static_cast<std::size_t>(i * w + n + j)];
  return LinearMap(n, std::move(out));
}

Rational determinant(std::vector<Rational> a, int n) {
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && sgn(a[static_cast<std::size_t>(piv * n + col)]) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a[static_cast<std::size_t>(piv * n + j)], a[static_cast<std::size_t>(col * n + j)]);
      det = -det;
    }
    const Rational p = a[static_cast<std::size_t>(col * n + col)];
    det *= p;
    for (int i = col + 1; i < n; ++i) {
      Rational f = a[static_cast<std::size_t>(i * n + col)] / p;
      if (sgn(f) == 0) continue;
      for (int j = col; j < n; ++j) a[static_cast<std::size_t>(i * n + j)] -= f * a[static_cast<std::size_t>(col * n + j)];
    }
  }
  return det;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(std::vector<Rational>& a, int rows, int cols) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = r;
    while (piv < rows && sgn(a[static_cast<std::size_t>(piv * cols + c)]) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (int j = 0; j < cols; ++j) std::swap(a[static_cast<std::size_t>(piv * cols + j)], a[static_cast<std::size_t>(r * cols + j)]);
    Rational inv = 1 / a[static_cast<std::size_t>(r * cols + c)];
    for (int j = 0; j < cols; ++j) a[static_cast<std::size_t>(r * cols + j)] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      Rational f = a[static_cast<std::size_t>(i * cols + c)];
      if (sgn(f) == 0) continue;
      for (int j = 0; j < cols; ++j) a[static_cast<std::size_t>(i * cols + j)] -= f * a[static_cast<std::size_t>(r * cols + j)];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int exact_rank(std::vector<Rational> a, int rows, int cols) {
  if (a.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) throw DimensionError("rank: bad shape");
  return static_cast<int>(rref(a, rows, cols).size());
}

std::optional<RationalVector> solve_exact(std::vector<Rational> b, int rows, int cols, const RationalVector& z) {
  if (b.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols) || static_cast<int>(z.size()) != rows)
    throw DimensionError("solve: bad shape");
  int w = cols + 1;
  std::vector<Rational> aug(static_cast<std::size_t>(rows * w));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) aug[static_cast<std::size_t>(i * w + j)] = b[static_cast<std::size_t>(i * cols + j)];
    aug[static_cast<std::size_t>(i * w + cols)] = z[static_cast<std::size_t>(i)];
  }
  auto piv = rref(aug, rows, w);
  if (!piv.empty() && piv.back() == cols) return std::nullopt;
  if (static_cast<int>(piv.size()) != cols) return std::nullopt;
  RationalVector u(static_cast<std::size_t>(cols));
  for (int r = 0; r < cols; ++r) u[static_cast<std::size_t>(piv[static_cast<std::size_t>(r)])] = aug[static_cast<std::size_t>(r * w + cols)];
  return u;
}

}  // namespace hypercone
