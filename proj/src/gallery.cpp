#include "hypercone/gallery.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "hypercone/error.hpp"

namespace hypercone {

namespace {

int permutation_sign(const std::vector<int>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

// Leibniz expansion of a square matrix of linear forms.
HomoPoly symbolic_det(const std::vector<std::vector<HomoPoly>>& m, int nvars) {
  const int n = static_cast<int>(m.size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  HomoPoly det(nvars, n);
  do {
    HomoPoly term = HomoPoly::constant(nvars, permutation_sign(perm));
    for (int i = 0; i < n && !term.is_zero(); ++i)
      term = term * m[static_cast<std::size_t>(i)][static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
    if (!term.is_zero()) det = det + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

double binomial(int n, int k) {
  double b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

int parse_int(const std::string& s, const std::string& id) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) || s.size() > 6)
    throw ParseError("malformed cone id '" + id + "'");
  return std::stoi(s);
}

}  // namespace

HyperCone orthant(int n) {
  if (n < 1) throw RangeError("orthant needs n >= 1");
  HomoPoly::TermMap t;
  t.emplace(Exponent(static_cast<std::size_t>(n), 1), Rational(1));
  return HyperCone(HomoPoly(n, n, std::move(t)), RationalVector(static_cast<std::size_t>(n), Rational(1)),
                   "orthant:" + std::to_string(n), true, true);
}

DerivedCone orthant_deriv(int n, int k) {
  if (k < 1 || k > n - 1) throw RangeError("orthant relaxation needs 1 <= k <= n-1");
  DerivedCone dc = derivative_cone(orthant(n), k);
  if (!(dc.p_k == factorial(k) * elementary_symmetric(n, n - k)))
    throw Error("internal: orthant relaxation differs from k! s_{n-k}");
  return dc;
}

int svec_dim(int n) { return n * (n + 1) / 2; }

int svec_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i == j) return i;
  // off-diagonal (i, j), i < j, row by row after the n diagonal entries
  int before = 0;
  for (int r = 0; r < i; ++r) before += n - 1 - r;
  return n + before + (j - i - 1);
}

int svec_order(int dim) {
  for (int n = 1; svec_dim(n) <= dim; ++n)
    if (svec_dim(n) == dim) return n;
  return -1;
}

std::vector<double> svec(const Eigen::MatrixXd& x) {
  const int n = static_cast<int>(x.rows());
  std::vector<double> v(static_cast<std::size_t>(svec_dim(n)));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) v[static_cast<std::size_t>(svec_index(n, i, j))] = x(i, j);
  return v;
}

RationalVector svec(const std::vector<RationalVector>& rows) {
  const int n = static_cast<int>(rows.size());
  RationalVector v(static_cast<std::size_t>(svec_dim(n)));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      v[static_cast<std::size_t>(svec_index(n, i, j))] = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return v;
}

Eigen::MatrixXd smat(std::span<const double> v, int n) {
  if (static_cast<int>(v.size()) != svec_dim(n)) throw DimensionError("svec length does not match matrix order");
  Eigen::MatrixXd x(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) x(i, j) = v[static_cast<std::size_t>(svec_index(n, i, j))];
  return x;
}

HyperCone psd(int n) {
  if (n < 1 || n > 4) throw RangeError("symbolic determinant supports 1 <= n <= 4");
  const int m = svec_dim(n);
  std::vector<std::vector<HomoPoly>> entries(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) entries[static_cast<std::size_t>(i)].push_back(HomoPoly::variable(m, svec_index(n, i, j)));
  RationalVector e(static_cast<std::size_t>(m), Rational(0));
  for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = 1;
  return HyperCone(symbolic_det(entries, m), std::move(e), "psd:" + std::to_string(n), true, true);
}

DerivedCone psd_deriv(int n, int k) {
  if (k < 1 || k > n - 1) throw RangeError("psd relaxation needs 1 <= k <= n-1");
  return derivative_cone(psd(n), k);
}

LinearMap lyapunov_like_map(const LinearMap& mm) {
  const int n = mm.dim(), dim = svec_dim(n);
  std::vector<Rational> a(static_cast<std::size_t>(dim * dim));
  for (int a1 = 0; a1 < n; ++a1)
    for (int b1 = a1; b1 < n; ++b1) {
      int row = svec_index(n, a1, b1);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          Rational v = mm(a1, i) * mm(b1, j);
          if (i != j) v += mm(a1, j) * mm(b1, i);
          a[static_cast<std::size_t>(row * dim + svec_index(n, i, j))] = v;
        }
    }
  return LinearMap(dim, std::move(a));
}

namespace {

template <class F>
Eigen::MatrixXd svec_operator(int n, F apply) {
  const int dim = svec_dim(n);
  Eigen::MatrixXd out(dim, dim);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
      b(i, j) = 1;
      b(j, i) = 1;
      auto col = svec(apply(b));
      out.col(svec_index(n, i, j)) = Eigen::Map<Eigen::VectorXd>(col.data(), dim);
    }
  return out;
}

}  // namespace

Eigen::MatrixXd lyapunov_like_map(const Eigen::MatrixXd& m) {
  return svec_operator(static_cast<int>(m.rows()), [&](const Eigen::MatrixXd& b) -> Eigen::MatrixXd { return m * b * m.transpose(); });
}

Eigen::MatrixXd lyapunov_generator(const Eigen::MatrixXd& w) {
  return svec_operator(static_cast<int>(w.rows()),
                       [&](const Eigen::MatrixXd& b) -> Eigen::MatrixXd { return w * b + b * w.transpose(); });
}

Membership orthant_deriv_member_by_values(int k, std::span<const double> lambda, double tol) {
  const int n = static_cast<int>(lambda.size());
  if (k < 0 || k > n - 1) throw RangeError("relaxation order out of range [0, n-1]");
  // s[i] = e_i(lambda) by the usual DP
  std::vector<double> s(static_cast<std::size_t>(n + 1), 0.0);
  s[0] = 1;
  double linf = 0;
  for (double l : lambda) {
    linf = std::max(linf, std::abs(l));
    for (int i = n; i >= 1; --i) s[static_cast<std::size_t>(i)] += l * s[static_cast<std::size_t>(i - 1)];
  }
  bool ambiguous = false;
  for (int i = 1; i <= n - k; ++i) {
    double scale = binomial(n, i) * std::pow(linf, i);
    double v = s[static_cast<std::size_t>(i)];
    if (v < -tol * scale) return Membership::Out;
    if (std::abs(v) <= tol * scale) ambiguous = true;
  }
  return ambiguous ? Membership::BoundaryAmbiguous : Membership::In;
}

Membership psd_deriv_member(int n, int k, const Eigen::MatrixXd& x, double tol) {
  if (x.rows() != n || x.cols() != n) throw DimensionError("matrix order differs from n");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(x, Eigen::EigenvaluesOnly);
  std::vector<double> l(es.eigenvalues().data(), es.eigenvalues().data() + n);
  return orthant_deriv_member_by_values(k, l, tol);
}

HyperCone soc(int n) {
  if (n < 1) throw RangeError("soc needs n >= 1");
  HomoPoly::TermMap t;
  Exponent e0(static_cast<std::size_t>(n + 1), 0);
  e0[0] = 2;
  t.emplace(e0, Rational(1));
  for (int i = 1; i <= n; ++i) {
    Exponent ei(static_cast<std::size_t>(n + 1), 0);
    ei[static_cast<std::size_t>(i)] = 2;
    t.emplace(ei, Rational(-1));
  }
  RationalVector e(static_cast<std::size_t>(n + 1), Rational(0));
  e[0] = 1;
  return HyperCone(HomoPoly(n + 1, 2, std::move(t)), std::move(e), "soc:" + std::to_string(n + 1), true, true);
}

HyperCone l1_cone() {
  HomoPoly p = HomoPoly::constant(3, 1);
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) p = p * HomoPoly::linear_form({Rational(s1), Rational(s2), Rational(1)});
  return HyperCone(p, {0, 0, 1}, "l1", true, false);
}

std::vector<double> l1_to_soc_coordinates(std::span<const double> x) {
  if (x.size() != 3) throw DimensionError("l1 cone lives in R^3");
  return {x[2], x[0], x[1]};
}

Eigen::MatrixXd Spectrahedral::matrix_at(std::span<const double> x) const {
  if (x.size() != matrices.size()) throw DimensionError("point dimension differs from number of matrices");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(size, size);
  for (std::size_t i = 0; i < matrices.size(); ++i) a += x[i] * matrices[i].as_double();
  return a;
}

LinearMap Spectrahedral::matrix_at(const RationalVector& x) const {
  if (x.size() != matrices.size()) throw DimensionError("point dimension differs from number of matrices");
  std::vector<Rational> a(static_cast<std::size_t>(size * size));
  for (std::size_t i = 0; i < matrices.size(); ++i)
    for (int r = 0; r < size; ++r)
      for (int c = 0; c < size; ++c) a[static_cast<std::size_t>(r * size + c)] += x[i] * matrices[i](r, c);
  return LinearMap(size, std::move(a));
}

Spectrahedral spectrahedral(const std::vector<LinearMap>& as, const RationalVector& xbar, std::string label) {
  if (as.empty()) throw PreconditionError("spectrahedral cone needs at least one matrix");
  const int s = as.front().dim();
  const int m = static_cast<int>(as.size());
  if (s < 1 || s > 4) throw RangeError("spectrahedral matrices must have order 1..4");
  if (static_cast<int>(xbar.size()) != m) throw DimensionError("xbar length differs from number of matrices");
  std::vector<Rational> stacked;
  for (const auto& a : as) {
    if (a.dim() != s) throw DimensionError("matrices differ in order");
    if (!(a == a.transpose())) throw PreconditionError("matrices must be symmetric");
    for (int r = 0; r < s; ++r)
      for (int c = 0; c < s; ++c) stacked.push_back(a(r, c));
  }
  if (exact_rank(stacked, m, s * s) != m) throw PreconditionError("matrices are linearly dependent");

  Spectrahedral out{HyperCone(), as, s};
  LinearMap at = out.matrix_at(xbar);
  for (int j = 1; j <= s; ++j) {
    std::vector<Rational> minor;
    for (int r = 0; r < j; ++r)
      for (int c = 0; c < j; ++c) minor.push_back(at(r, c));
    if (sgn(determinant(minor, j)) <= 0) throw PreconditionError("A(xbar) is not positive definite");
  }
  std::vector<std::vector<HomoPoly>> entries(static_cast<std::size_t>(s));
  for (int r = 0; r < s; ++r)
    for (int c = 0; c < s; ++c) {
      RationalVector coeffs(static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i) coeffs[static_cast<std::size_t>(i)] = as[static_cast<std::size_t>(i)](r, c);
      entries[static_cast<std::size_t>(r)].push_back(HomoPoly::linear_form(coeffs));
    }
  out.cone = HyperCone(symbolic_det(entries, m), xbar, std::move(label));
  return out;
}

Spectrahedral soc_arrow_representation() {
  // x0 I + x1 (E12 + E21) + x2 (E13 + E31)
  LinearMap a0 = LinearMap::identity(3);
  LinearMap a1(3, {0, 1, 0, 1, 0, 0, 0, 0, 0});
  LinearMap a2(3, {0, 0, 1, 0, 0, 0, 1, 0, 0});
  return spectrahedral({a0, a1, a2}, {1, 0, 0}, "spectrahedral:soc-arrow");
}

Spectrahedral soc_2x2_representation() {
  LinearMap a0 = LinearMap::identity(2);
  LinearMap a1(2, {1, 0, 0, -1});
  LinearMap a2(2, {0, 1, 1, 0});
  return spectrahedral({a0, a1, a2}, {1, 0, 0}, "spectrahedral:soc-2x2");
}

int symmetric_matrix_rank(const Eigen::MatrixXd& a, double tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  int r = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (std::abs(es.eigenvalues()[i]) > tol * scale) ++r;
  return r;
}

std::optional<DerivedCone> GalleryCone::derived() const {
  if (k == 0) return std::nullopt;
  return derivative_cone(base, k);
}

Spectrahedral spectrahedral_from_json(const nlohmann::json& j) {
  try {
    std::vector<LinearMap> mats;
    for (const auto& mj : j.at("matrices")) {
      std::vector<RationalVector> rows;
      for (const auto& rj : mj) {
        RationalVector row;
        for (const auto& v : rj) row.push_back(v.is_string() ? parse_rational(v.get<std::string>()) : exact_rational(v.get<double>()));
        rows.push_back(std::move(row));
      }
      mats.emplace_back(rows);
    }
    RationalVector xbar;
    for (const auto& v : j.at("xbar")) xbar.push_back(v.is_string() ? parse_rational(v.get<std::string>()) : exact_rational(v.get<double>()));
    return spectrahedral(mats, xbar, j.value("label", std::string("spectrahedral")));
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("spectrahedral JSON: ") + ex.what());
  }
}

GalleryCone gallery_cone(const std::string& id) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  const std::string spectra_prefix = "spectrahedral:";
  if (id.rfind(spectra_prefix, 0) == 0) {
    std::string path = id.substr(spectra_prefix.size());
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read spectrahedral file '" + path + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& ex) {
      throw ParseError(std::string("spectrahedral JSON: ") + ex.what());
    }
    Spectrahedral s = spectrahedral_from_json(j);
    GalleryCone g{GalleryKind::Spectrahedral, id, s.size, 0, s.cone, s.cone, false, s};
    return g;
  }
  while (true) {
    std::size_t pos = id.find(':', start);
    parts.push_back(id.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  int k = 0;
  if (parts.size() == 3 || (parts.size() == 2 && parts[0] == "l1")) {
    const std::string& kk = parts.back();
    if (kk.rfind("k=", 0) != 0) throw ParseError("malformed cone id '" + id + "'");
    k = parse_int(kk.substr(2), id);
    parts.pop_back();
  }
  if (parts.size() > 2) throw ParseError("malformed cone id '" + id + "'");
  const std::string& kind = parts[0];
  GalleryCone g;
  g.id = id;
  g.k = k;
  if (kind == "l1") {
    if (parts.size() != 1) throw ParseError("malformed cone id '" + id + "'");
    g.kind = GalleryKind::L1;
    g.n = 3;
    g.base = l1_cone();
  } else {
    if (parts.size() != 2) throw ParseError("malformed cone id '" + id + "'");
    int n = parse_int(parts[1], id);
    g.n = n;
    if (kind == "orthant") {
      g.kind = k ? GalleryKind::OrthantDeriv : GalleryKind::Orthant;
      g.base = orthant(n);
      g.face_descriptor_support = k == 0;
    } else if (kind == "psd") {
      g.kind = k ? GalleryKind::PSDDeriv : GalleryKind::PSD;
      g.base = psd(n);
      g.face_descriptor_support = k == 0;
    } else if (kind == "soc") {
      if (n < 2) throw RangeError("soc:<m> needs ambient dimension m >= 2");
      g.kind = GalleryKind::SOC;
      g.base = soc(n - 1);
    } else {
      throw ParseError("unknown cone kind '" + kind + "'");
    }
  }
  if (k < 0 || k > g.base.d() - 1) throw RangeError("relaxation order out of range [0, d-1]");
  g.cone = derivative_cone(g.base, k).as_cone();
  return g;
}

}  // namespace hypercone
