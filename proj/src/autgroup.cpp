#include "hypercone/autgroup.hpp"

#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

#include "hypercone/error.hpp"
#include "hypercone/kernels.hpp"

namespace hypercone {

namespace {

LinearMap exact_map(const Eigen::MatrixXd& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<Rational> entries;
  entries.reserve(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) entries.push_back(exact_rational(a(i, j)));
  return LinearMap(n, std::move(entries));
}

std::vector<double> col_vector(const PointBatch& pts, Eigen::Index j) {
  return std::vector<double>(pts.col(j).data(), pts.col(j).data() + pts.rows());
}

bool regime_applies(const HyperCone& cone, int k) {
  return cone.rog() && cone.minimality_assumed() && cone.d() >= 4 && cone.dim() >= 3 && k >= 1 && k <= cone.d() - 3;
}

}  // namespace

StabilizerResult stabilizer_check(const LinearMap& a, const RationalVector& e) {
  if (static_cast<int>(e.size()) != a.dim()) throw DimensionError("direction dimension differs from map");
  RationalVector ae = a.apply(e);
  std::optional<Rational> alpha;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (sgn(e[i]) == 0) {
      if (sgn(ae[i]) != 0) return {};
      continue;
    }
    Rational r = ae[i] / e[i];
    if (alpha && *alpha != r) return {};
    alpha = r;
  }
  if (!alpha || sgn(*alpha) <= 0) return {};
  return {true, alpha};
}

CheckReport check_automorphism(const HyperCone& cone, const LinearMap& a, std::uint64_t seed) {
  if (a.dim() != cone.dim()) throw DimensionError("map dimension differs from cone dimension");
  if (!a.invertible()) throw PreconditionError("map is not invertible");
  CheckReport report;
  report.tolerances = {{"tier", "exact"}};
  if (!cone.minimality_assumed())
    report.regime_warnings.push_back("minimality of p is not assumed: a Holds verdict is only sufficient evidence");
  else
    report.diagnostics.push_back("verdict conditional on the assumed minimality of p");

  RationalVector ae = a.apply(cone.e());
  Rational pae = eval(cone.p(), ae);
  if (sgn(pae) <= 0 || !in_interior(cone, ae)) {
    report.verdict = Verdict::FailsWithWitness;
    report.witness = cone.e();
    report.details = {{"reason", "A e is not interior"}, {"Ae", vector_json(ae)}, {"p(Ae)", to_string(pae)}};
    return report;
  }
  Rational kappa = cone.pe() / pae;
  report.kappa = kappa;
  HomoPoly lhs = kappa * compose(cone.p(), a);
  if (lhs == cone.p()) {
    report.verdict = Verdict::Holds;
    return report;
  }

  // first differing coefficient in canonical order
  HomoPoly diff = lhs - cone.p();
  const auto& [exp, c] = *diff.terms().begin();
  report.details["first_differing_coefficient"] = {
      {"exp", exp}, {"kappa_p_o_A", to_string(lhs.coefficient(exp))}, {"p", to_string(cone.p().coefficient(exp))}};
  if (!cone.minimality_assumed()) {
    report.verdict = Verdict::Inconclusive;
    report.diagnostics.push_back("identity fails but p is not known to be minimal");
    return report;
  }
  // a point separating the two polynomials, for independent re-verification
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-1000, 1000);
  for (int attempt = 0; attempt < 64; ++attempt) {
    RationalVector x(static_cast<std::size_t>(cone.dim()));
    for (auto& v : x) v = dist(rng);
    Rational px = eval(cone.p(), x), kpax = kappa * eval(cone.p(), a.apply(x));
    if (px != kpax) {
      report.verdict = Verdict::FailsWithWitness;
      report.witness = std::move(x);
      report.details["p(x)"] = to_string(px);
      report.details["kappa_p(Ax)"] = to_string(kpax);
      return report;
    }
  }
  report.verdict = Verdict::Inconclusive;
  report.diagnostics.push_back("coefficients differ but no separating point was found");
  return report;
}

CheckReport float_automorphism_check(const HyperCone& cone, const Eigen::MatrixXd& a, const FloatTierOptions& opts) {
  if (a.rows() != cone.dim() || a.cols() != cone.dim()) throw DimensionError("map dimension differs from cone dimension");
  CheckReport report;
  const double margin = 10 * opts.tol;
  report.tolerances = {{"tier", "float"}, {"tol", opts.tol}, {"margin", margin}};
  if (!a.allFinite()) {
    report.diagnostics.push_back("map has non-finite entries");
    return report;
  }
  const int n = cone.dim(), count = opts.samples;
  PointBatch raw = gaussian_points(n, count, opts.seed);
  std::mt19937_64 rng(opts.seed ^ 0x5bd1e995ULL);
  std::uniform_real_distribution<double> expo(-4.0, 0.0);
  std::vector<double> target(static_cast<std::size_t>(count), std::numeric_limits<double>::quiet_NaN());
  for (int j = 1; j < count; j += 2) {
    double delta = std::pow(10.0, expo(rng));
    target[static_cast<std::size_t>(j)] = (j % 4 == 1) ? delta : -delta;
  }
  PointBatch x = shift_to_min_eigenvalue(cone, raw, target);
  PointBatch y = a * x;
  auto lx = batch_min_eigenvalue(cone, x);
  auto ly = batch_min_eigenvalue(cone, y);
  report.samples = count;

  const Rational m = exact_rational(margin);
  std::optional<LinearMap> ar;
  int inconclusive = 0;
  for (int j = 0; j < count; ++j) {
    double u = lx[static_cast<std::size_t>(j)], v = ly[static_cast<std::size_t>(j)];
    if (std::isnan(u) || std::isnan(v)) {
      ++inconclusive;
      continue;
    }
    bool forward = u >= margin && v <= -margin;
    bool backward = u <= -margin && v >= margin;
    if (!forward && !backward) continue;
    if (!ar) ar = exact_map(a);
    auto xd = col_vector(x, j);
    RationalVector xr = to_rationals(xd);
    RationalVector yr = ar->apply(xr);
    bool verified = forward ? (min_eigenvalue_at_least(cone, xr, m) && min_eigenvalue_at_most(cone, yr, m))
                            : (min_eigenvalue_at_most(cone, xr, m) && min_eigenvalue_at_least(cone, yr, m));
    if (!verified) continue;
    report.verdict = Verdict::FailsWithWitness;
    report.witness = std::move(xr);
    report.details = {{"direction", forward ? "x in K, Ax not in K" : "x not in K, Ax in K"},
                      {"lambda_min_x", u},
                      {"lambda_min_Ax", v},
                      {"sample", j}};
    return report;
  }
  report.details["inconclusive_samples"] = inconclusive;
  if (inconclusive * 10 > count) {
    report.verdict = Verdict::Inconclusive;
    report.diagnostics.push_back("too many inconclusive spectra");
    return report;
  }
  report.verdict = Verdict::Holds;
  report.diagnostics.push_back("sampled evidence, not a proof");
  return report;
}

CheckReport check_deriv_automorphism(const HyperCone& cone, int k, const LinearMap& a, const FloatTierOptions& float_opts) {
  if (k < 0 || k > cone.d() - 1) throw RangeError("derivative relaxation order out of range [0, d-1]");
  CheckReport base = check_automorphism(cone, a);
  StabilizerResult stab = stabilizer_check(a, cone.e());
  HyperCone derived_cone = derivative_cone(cone, k).as_cone();
  CheckReport derived;
  std::vector<std::string> warnings;
  if (derived_cone.minimality_assumed() || k == 0) {
    derived = check_automorphism(derived_cone, a);
  } else {
    derived = float_automorphism_check(derived_cone, a.as_double(), float_opts);
    warnings.push_back("relaxation polynomial not known to be minimal: float tier used");
  }
  const bool regime = regime_applies(cone, k);
  if (!regime) warnings.push_back("outside the regime (ROG base, d >= 4, dim >= 3, 1 <= k <= d-3): only the inclusion of the e-stabilizer is expected");

  CheckReport report = derived;
  report.regime_warnings.insert(report.regime_warnings.end(), warnings.begin(), warnings.end());
  const bool predicted = base.holds() && stab.fixed;
  const bool conclusive = base.verdict != Verdict::Inconclusive && derived.verdict != Verdict::Inconclusive;
  const bool consistent = predicted == derived.holds();
  if (conclusive && ((regime && !consistent) || (predicted && !derived.holds()))) report.theorem_violation = true;
  report.details = {{"base", base.to_json()},
                    {"stabilizer", stab.fixed ? nlohmann::json{{"fixed", true}, {"alpha", to_string(*stab.alpha)}}
                                              : nlohmann::json{{"fixed", false}}},
                    {"derived", derived.to_json()},
                    {"predicted_holds", predicted},
                    {"consistent", consistent},
                    {"regime", regime},
                    {"k", k}};
  return report;
}

CheckReport check_deriv_automorphism_float(const HyperCone& cone, int k, const Eigen::MatrixXd& a, const FloatTierOptions& opts) {
  if (k < 0 || k > cone.d() - 1) throw RangeError("derivative relaxation order out of range [0, d-1]");
  CheckReport base = float_automorphism_check(cone, a, opts);
  Eigen::Map<const Eigen::VectorXd> e(cone.e_double().data(), cone.dim());
  Eigen::VectorXd ae = a * e;
  double alpha = ae.dot(e) / e.squaredNorm();
  bool fixed = alpha > 0 && (ae - alpha * e).norm() <= 1e-9 * std::max(1.0, ae.norm());
  HyperCone derived_cone = derivative_cone(cone, k).as_cone();
  CheckReport derived = float_automorphism_check(derived_cone, a, opts);

  const bool regime = regime_applies(cone, k);
  CheckReport report = derived;
  if (!regime) report.regime_warnings.push_back("outside the regime (ROG base, d >= 4, dim >= 3, 1 <= k <= d-3)");
  const bool predicted = base.holds() && fixed;
  const bool conclusive = base.verdict != Verdict::Inconclusive && derived.verdict != Verdict::Inconclusive;
  const bool consistent = predicted == derived.holds();
  if (conclusive && ((regime && !consistent) || (predicted && !derived.holds()))) report.theorem_violation = true;
  report.details = {{"base", base.to_json()},
                    {"stabilizer", {{"fixed", fixed}, {"alpha", alpha}}},
                    {"derived", derived.to_json()},
                    {"predicted_holds", predicted},
                    {"consistent", consistent},
                    {"regime", regime},
                    {"k", k}};
  return report;
}

nlohmann::json MembershipWitness::to_json() const {
  return {{"x", vector_json(x)},
          {"map", through_inverse ? "inverse" : "forward"},
          {"lambda_min_x", lambda_x},
          {"lambda_min_image", lambda_image}};
}

std::optional<MembershipWitness> membership_witness_search(const HyperCone& cone, const LinearMap& a,
                                                           const WitnessSearchOptions& opts) {
  if (a.dim() != cone.dim()) throw DimensionError("map dimension differs from cone dimension");
  const LinearMap inv = a.inverse();
  const Rational m = exact_rational(opts.margin);
  const int batch = 1000, n = cone.dim();
  std::mt19937_64 rng(opts.seed ^ 0x2545f491ULL);
  std::uniform_real_distribution<double> spread(0.6, 3.0);
  for (int start = 0; start < opts.budget; start += batch) {
    const int count = std::min(batch, opts.budget - start);
    PointBatch raw = gaussian_points(n, count, opts.seed + static_cast<std::uint64_t>(start));
    std::vector<double> target(static_cast<std::size_t>(count));
    for (auto& t : target) t = opts.margin * std::pow(10.0, spread(rng));
    PointBatch x = shift_to_min_eigenvalue(cone, raw, target);
    auto lx = batch_min_eigenvalue(cone, x);
    for (int dir = 0; dir < 2; ++dir) {
      const LinearMap& map = dir == 0 ? a : inv;
      PointBatch y = map.as_double() * x;
      auto ly = batch_min_eigenvalue(cone, y);
      for (int j = 0; j < count; ++j) {
        double u = lx[static_cast<std::size_t>(j)], v = ly[static_cast<std::size_t>(j)];
        if (std::isnan(u) || std::isnan(v) || u < 2 * opts.margin || v > -2 * opts.margin) continue;
        auto xd = col_vector(x, j);
        RationalVector xr = dyadic_vector(xd, 40);
        if (min_eigenvalue_at_least(cone, xr, m) && min_eigenvalue_at_most(cone, map.apply(xr), m))
          return MembershipWitness{std::move(xr), dir == 1, u, v};
      }
    }
  }
  return std::nullopt;
}

std::optional<Rational> scaled_permutation_factor(const LinearMap& a) {
  const int n = a.dim();
  std::optional<Rational> alpha;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    int nonzero = -1;
    for (int j = 0; j < n; ++j) {
      if (sgn(a(i, j)) == 0) continue;
      if (nonzero >= 0) return std::nullopt;
      nonzero = j;
    }
    if (nonzero < 0 || used[static_cast<std::size_t>(nonzero)]) return std::nullopt;
    used[static_cast<std::size_t>(nonzero)] = true;
    const Rational& v = a(i, nonzero);
    if (sgn(v) <= 0 || (alpha && *alpha != v)) return std::nullopt;
    alpha = v;
  }
  return alpha;
}

std::optional<Rational> orthogonal_scale(const LinearMap& m) {
  LinearMap g = m.transpose() * m;
  const Rational mu = g(0, 0);
  if (sgn(mu) <= 0) return std::nullopt;
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j)
      if (g(i, j) != (i == j ? mu : Rational(0))) return std::nullopt;
  return mu;
}

namespace {

void attach_witness(CheckReport& report, const HyperCone& derived, const LinearMap& a, bool predicted,
                    const WitnessSearchOptions& opts) {
  if (predicted) return;
  auto mw = membership_witness_search(derived, a, opts);
  if (!mw) {
    report.details["membership_witness"] = nullptr;
    report.diagnostics.push_back("membership witness search exhausted its budget");
    return;
  }
  report.details["membership_witness"] = mw->to_json();
  if (report.fails()) {
    if (report.witness) report.details["kappa_witness"] = vector_json(*report.witness);
    report.witness = mw->x;
  }
}

}  // namespace

CheckReport classify_orthant_deriv(int n, int k, const LinearMap& a, const WitnessSearchOptions& opts) {
  if (n < 4 || k < 1 || k > n - 1) throw RangeError("orthant classification needs n >= 4 and 1 <= k <= n-1");
  if (a.dim() != n) throw DimensionError("map dimension differs from n");
  HyperCone base = orthant(n);
  auto alpha = scaled_permutation_factor(a);
  const bool predicted = alpha.has_value();
  CheckReport report = check_deriv_automorphism(base, k, a);
  report.details["prediction"] = predicted ? "Holds" : "FailsWithWitness";
  if (k > n - 3) report.regime_warnings.push_back("k > n-3: the relaxation is a Lorentz-like cone or a half-space");
  if (k <= n - 3 && predicted != report.holds() && report.verdict != Verdict::Inconclusive) report.theorem_violation = true;
  attach_witness(report, derivative_cone(base, k).as_cone(), a, predicted, opts);
  return report;
}

CheckReport classify_psd_deriv(int n, int k, const LinearMap& m, const WitnessSearchOptions& opts) {
  if (n != 4) throw RangeError("PSD classification is available for n = 4 (symbolic determinant cap)");
  if (k < 1 || k > n - 1) throw RangeError("PSD classification needs 1 <= k <= n-1");
  if (m.dim() != n) throw DimensionError("M must be n x n");
  if (!m.invertible()) throw PreconditionError("M is singular");
  HyperCone base = psd(n);
  LinearMap lm = lyapunov_like_map(m);
  auto mu = orthogonal_scale(m);
  const bool predicted = mu.has_value();
  CheckReport report = check_deriv_automorphism(base, k, lm);
  report.details["prediction"] = predicted ? "Holds" : "FailsWithWitness";
  if (k > n - 3) report.regime_warnings.push_back("k > n-3 lies outside the classification regime");
  if (k <= n - 3 && predicted != report.holds() && report.verdict != Verdict::Inconclusive) report.theorem_violation = true;
  attach_witness(report, derivative_cone(base, k).as_cone(), lm, predicted, opts);
  return report;
}

CheckReport classify_psd_deriv_float(int n, int k, const Eigen::MatrixXd& m, const FloatTierOptions& opts) {
  if (n != 4) throw RangeError("PSD classification is available for n = 4 (symbolic determinant cap)");
  if (k < 1 || k > n - 1) throw RangeError("PSD classification needs 1 <= k <= n-1");
  if (m.rows() != n || m.cols() != n) throw DimensionError("M must be n x n");
  Eigen::MatrixXd g = m.transpose() * m;
  double mu = g.trace() / n;
  const bool predicted = mu > 0 && (g - mu * Eigen::MatrixXd::Identity(n, n)).norm() <= 1e-9 * mu;
  CheckReport report = check_deriv_automorphism_float(psd(n), k, lyapunov_like_map(m), opts);
  report.details["prediction"] = predicted ? "Holds" : "FailsWithWitness";
  if (k <= n - 3 && predicted != report.holds() && report.verdict != Verdict::Inconclusive) report.theorem_violation = true;
  return report;
}

CheckReport spectral_aut_projection(int k, const Eigen::MatrixXd& m, const CheckReport& lm_report, const FloatTierOptions& opts) {
  const int n = static_cast<int>(m.rows());
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  Eigen::VectorXd sigma = svd.singularValues();
  Eigen::MatrixXd d2 = sigma.cwiseProduct(sigma).asDiagonal();
  HyperCone cone = orthant_deriv(n, k).as_cone();
  CheckReport report = float_automorphism_check(cone, d2, opts);
  const bool consistent = !(lm_report.holds() && report.fails());
  if (!consistent) report.theorem_violation = true;
  report.details["singular_values"] = std::vector<double>(sigma.data(), sigma.data() + sigma.size());
  report.details["L_M_verdict"] = to_string(lm_report.verdict);
  report.details["consistent"] = consistent;
  return report;
}

CheckReport lie_probe(const HyperCone& cone, const Eigen::MatrixXd& l, const std::vector<double>& t_grid, const FloatTierOptions& opts) {
  if (l.rows() != cone.dim() || l.cols() != cone.dim()) throw DimensionError("generator dimension differs from cone");
  CheckReport report;
  report.tolerances = {{"tier", "float"}, {"tol", opts.tol}, {"margin", 10 * opts.tol}};
  bool inconclusive = false;
  nlohmann::json per_t = nlohmann::json::array();
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    const double t = t_grid[i];
    Eigen::MatrixXd scaled_l = t * l;
    Eigen::MatrixXd flow = scaled_l.exp();
    FloatTierOptions o = opts;
    o.seed = opts.seed + i;
    CheckReport r = float_automorphism_check(cone, flow, o);
    report.samples += r.samples;
    per_t.push_back({{"t", t}, {"verdict", to_string(r.verdict)}});
    if (r.fails()) {
      report.verdict = Verdict::FailsWithWitness;
      report.witness = r.witness;
      report.details = {{"t", t}, {"flow", per_t}, {"violation", r.details}};
      return report;
    }
    if (r.verdict == Verdict::Inconclusive) inconclusive = true;
  }
  report.details = {{"flow", per_t}};
  report.verdict = inconclusive ? Verdict::Inconclusive : Verdict::Holds;
  return report;
}

CheckReport perron_eigenvector(const HyperCone& cone, const LinearMap& a, std::uint64_t seed) {
  if (a.dim() != cone.dim()) throw DimensionError("map dimension differs from cone dimension");
  CheckReport report;
  const Eigen::MatrixXd& af = a.as_double();
  const int n = cone.dim();
  Eigen::EigenSolver<Eigen::MatrixXd> es(af);
  if (es.info() != Eigen::Success) {
    report.diagnostics.push_back("eigenvalue iteration did not converge");
    return report;
  }
  double rho = es.eigenvalues().cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, rho);
  report.tolerances = {{"eigen_tol", 1e-8}, {"membership_tol", kZeroTol}};

  Eigen::MatrixXd shifted = af - rho * Eigen::MatrixXd::Identity(n, n);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(shifted, Eigen::ComputeFullV);
  std::vector<Eigen::VectorXd> kernel;
  for (int i = 0; i < n; ++i)
    if (svd.singularValues()[i] <= 1e-8 * scale * std::sqrt(static_cast<double>(n))) kernel.push_back(svd.matrixV().col(i));
  if (kernel.empty()) {
    report.diagnostics.push_back("spectral radius is not (numerically) a real eigenvalue");
    report.details = {{"rho", rho}};
    return report;
  }

  std::vector<Eigen::VectorXd> candidates;
  Eigen::Map<const Eigen::VectorXd> e(cone.e_double().data(), n);
  Eigen::VectorXd proj = Eigen::VectorXd::Zero(n);
  for (const auto& v : kernel) proj += v.dot(e) * v;
  if (proj.norm() > 1e-12) candidates.push_back(proj);
  for (const auto& v : kernel) {
    candidates.push_back(v);
    candidates.push_back(-v);
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  for (int r = 0; r < 32 && kernel.size() > 1; ++r) {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(n);
    for (const auto& v : kernel) c += gauss(rng) * v;
    candidates.push_back(c);
  }
  for (auto& c : candidates) {
    ++report.samples;
    c.normalize();
    std::vector<double> cv(c.data(), c.data() + n);
    Spectrum s = robust_eigenvalues(cone, cv);
    if (s.inconclusive() || s.min() < -kZeroTol) continue;
    double residual = (af * c - rho * c).norm();
    report.verdict = Verdict::Holds;
    report.witness = to_rationals(cv);
    report.details = {{"rho", rho},
                      {"residual", residual},
                      {"kernel_dim", kernel.size()},
                      {"lambda_min", s.min()},
                      {"vector", cv}};
    return report;
  }
  report.details = {{"rho", rho}, {"kernel_dim", kernel.size()}};
  report.diagnostics.push_back("no eigenvector for the spectral radius found in the cone");
  return report;
}

CheckReport min_face_fix_check(GalleryKind kind, const LinearMap& a, const RationalVector& z, double tol) {
  if (a.dim() != static_cast<int>(z.size())) throw DimensionError("map dimension differs from point");
  auto zd = to_doubles(z);
  Eigen::Map<const Eigen::VectorXd> zv(zd.data(), static_cast<Eigen::Index>(zd.size()));
  Eigen::VectorXd az = a.as_double() * zv;
  double mu = az.dot(zv) / zv.squaredNorm();
  if ((az - mu * zv).norm() > 1e-8 * std::max(1.0, az.norm())) throw PreconditionError("z is not an eigenvector of A");

  CheckReport report;
  report.tolerances = {{"tol", tol}};
  bool fixed = false;
  nlohmann::json desc;
  if (kind == GalleryKind::Orthant) {
    auto support = [&](const Eigen::VectorXd& v) {
      std::vector<int> s;
      double m = v.cwiseAbs().maxCoeff();
      for (Eigen::Index i = 0; i < v.size(); ++i)
        if (std::abs(v[i]) > tol * std::max(1.0, m)) s.push_back(static_cast<int>(i));
      return s;
    };
    auto sz = support(zv), saz = support(az);
    fixed = sz == saz;
    desc = {{"support_z", sz}, {"support_Az", saz}};
  } else if (kind == GalleryKind::PSD) {
    const int n = svec_order(static_cast<int>(zd.size()));
    auto projector = [&](const Eigen::VectorXd& v) {
      std::vector<double> vv(v.data(), v.data() + v.size());
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(smat(vv, n));
      double m = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
      Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
      for (int i = 0; i < n; ++i)
        if (std::abs(es.eigenvalues()[i]) > tol * m) p += es.eigenvectors().col(i) * es.eigenvectors().col(i).transpose();
      return p;
    };
    Eigen::MatrixXd pz = projector(zv), paz = projector(az);
    double diff = (pz - paz).norm();
    fixed = diff <= 1e-6;
    desc = {{"projector_distance", diff}, {"rank_z", static_cast<int>(std::lround(pz.trace()))}};
  } else {
    throw PreconditionError("face descriptors are available for orthant and PSD cones only");
  }
  report.samples = 1;
  report.details = desc;
  report.details["eigenvalue"] = mu;
  if (fixed) {
    report.verdict = Verdict::Holds;
  } else {
    report.verdict = Verdict::FailsWithWitness;
    report.witness = z;
  }
  return report;
}

bool pairwise_proportional(const std::vector<RationalVector>& xs) {
  if (xs.size() < 2) return true;
  const auto& x0 = xs.front();
  std::size_t pivot = 0;
  while (pivot < x0.size() && sgn(x0[pivot]) == 0) ++pivot;
  if (pivot == x0.size()) return false;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    Rational c = xs[i][pivot] / x0[pivot];
    if (sgn(c) <= 0) return false;
    for (std::size_t j = 0; j < x0.size(); ++j)
      if (xs[i][j] != c * x0[j]) return false;
  }
  return true;
}

CheckReport garding_check(const HyperCone& cone, const std::vector<RationalVector>& xs, double tol) {
  const int d = cone.d();
  if (static_cast<int>(xs.size()) != d) throw DimensionError("Garding check needs exactly d points");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (static_cast<int>(xs[i].size()) != cone.dim()) throw DimensionError("point dimension differs from cone");
    if (!in_interior(cone, xs[i])) throw PreconditionError("point " + std::to_string(i) + " is not strictly interior");
  }
  Rational polar = polar_form(cone.p(), xs);
  double log_sum = 0;
  for (const auto& x : xs) log_sum += std::log(eval(cone.p(), x).get_d());
  const double gm = std::exp(log_sum / d);
  const double pd = polar.get_d();
  const double gap = pd - gm;
  const double ngap = pd / gm - 1;
  const bool proportional = pairwise_proportional(xs);
  const bool inequality = ngap >= -tol;
  const bool equality_consistent = proportional ? std::abs(ngap) <= tol : ngap > tol;

  CheckReport report;
  report.samples = 1;
  report.tolerances = {{"tol", tol}};
  report.details = {{"polar", to_string(polar)},
                    {"polar_value", pd},
                    {"geometric_mean", gm},
                    {"gap", gap},
                    {"normalized_gap", ngap},
                    {"proportional", proportional},
                    {"equality_consistent", equality_consistent}};
  if (inequality && equality_consistent) {
    report.verdict = Verdict::Holds;
  } else {
    report.verdict = Verdict::FailsWithWitness;
    RationalVector flat;
    for (const auto& x : xs) flat.insert(flat.end(), x.begin(), x.end());
    report.witness = std::move(flat);
    report.diagnostics.push_back(inequality ? "equality case inconsistent with proportionality" : "negative gap");
  }
  return report;
}

}  // namespace hypercone
