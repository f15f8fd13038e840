#include "hypercone/cone.hpp"

#include <cmath>
#include <random>

#include "hypercone/error.hpp"

namespace hypercone {

HyperCone::HyperCone(HomoPoly p, RationalVector e, std::string label, bool minimality_assumed, bool rog) {
  if (static_cast<int>(e.size()) != p.nvars()) throw DimensionError("direction dimension differs from nvars");
  if (p.degree() < 1) throw PreconditionError("cone polynomial must have degree >= 1");
  auto data = std::make_shared<Data>();
  data->pe = eval(p, e);
  if (sgn(data->pe) <= 0) throw PreconditionError("p(e) must be positive");
  data->e_double = to_doubles(e);
  data->e = std::move(e);
  data->label = std::move(label);
  data->minimality_assumed = minimality_assumed;
  data->rog = rog;
  data->derivs.push_back(std::move(p));
  for (int k = 1; k <= data->derivs.front().degree(); ++k)
    data->derivs.push_back(dir_deriv_step(data->derivs.back(), data->e));
  for (const auto& q : data->derivs) {
    data->fderivs.emplace_back(q);
    data->coeff_scale.push_back(q.max_abs_coefficient().get_d());
  }
  data_ = std::move(data);
}

const HomoPoly& HyperCone::deriv(int k) const {
  if (k < 0 || k > d()) throw RangeError("derivative order out of range [0, d]");
  return data_->derivs[static_cast<std::size_t>(k)];
}

const FloatPoly& HyperCone::fderiv(int k) const {
  if (k < 0 || k > d()) throw RangeError("derivative order out of range [0, d]");
  return data_->fderivs[static_cast<std::size_t>(k)];
}

std::vector<double> HyperCone::restriction(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim()) throw DimensionError("point dimension differs from cone dimension");
  const int deg = d();
  std::vector<double> c(static_cast<std::size_t>(deg + 1));
  double fact = 1;
  for (int k = 0; k <= deg; ++k) {
    if (k > 0) fact *= k;
    double v = data_->fderivs[static_cast<std::size_t>(k)](x) / fact;
    c[static_cast<std::size_t>(k)] = ((deg - k) % 2 == 0) ? v : -v;
  }
  return c;
}

UniPoly HyperCone::restriction(const RationalVector& x) const {
  if (static_cast<int>(x.size()) != dim()) throw DimensionError("point dimension differs from cone dimension");
  return restrict_line(derivs(), x);
}

nlohmann::json HyperCone::to_json() const {
  return {{"label", label()}, {"polynomial", hypercone::to_json(p())}, {"e", vector_json(e())}};
}

HyperCone hypercone_from_json(const nlohmann::json& j) {
  try {
    HomoPoly p = homopoly_from_json(j.at("polynomial"));
    RationalVector e;
    for (const auto& v : j.at("e")) e.push_back(v.is_string() ? parse_rational(v.get<std::string>()) : exact_rational(v.get<double>()));
    return HyperCone(std::move(p), std::move(e), j.value("label", std::string("user")));
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("cone JSON: ") + ex.what());
  }
}

HyperCone DerivedCone::as_cone() const {
  bool minimal = base.rog() && base.minimality_assumed() && k >= 1 && k <= base.d() - 2;
  if (k == 0) return base;
  return HyperCone(p_k, base.e(), base.label() + "^(" + std::to_string(k) + ")", minimal, false);
}

DerivedCone derivative_cone(const HyperCone& cone, int k) {
  if (k < 0 || k > cone.d() - 1) throw RangeError("derivative relaxation order out of range [0, d-1]");
  return DerivedCone{cone, k, cone.deriv(k)};
}

const char* to_string(Membership m) {
  switch (m) {
    case Membership::In: return "In";
    case Membership::Out: return "Out";
    case Membership::BoundaryAmbiguous: return "BoundaryAmbiguous";
  }
  return "?";
}

Spectrum eigenvalues(const HyperCone& cone, std::span<const double> x, double zero_tol, double residual_tol) {
  auto c = cone.restriction(x);
  return spectrum_from_restriction(std::span<const double>(c), zero_tol, residual_tol);
}

Spectrum eigenvalues(const HyperCone& cone, const RationalVector& x, double zero_tol, double residual_tol) {
  return spectrum_from_restriction(cone.restriction(x), zero_tol, residual_tol);
}

Spectrum robust_eigenvalues(const HyperCone& cone, std::span<const double> x, double zero_tol) {
  Spectrum s = eigenvalues(cone, x, zero_tol);
  if (!s.inconclusive()) return s;
  return eigenvalues(cone, to_rationals(x), zero_tol);
}

int rank(const HyperCone& cone, const RationalVector& x, double zero_tol) {
  return eigenvalues(cone, x, zero_tol).rank();
}

int mult(const HyperCone& cone, const RationalVector& x, double zero_tol) {
  return eigenvalues(cone, x, zero_tol).mult();
}

int rank(const HyperCone& cone, std::span<const double> x, double zero_tol) {
  return robust_eigenvalues(cone, x, zero_tol).rank();
}

int rank_cross_checked(const HyperCone& cone, const RationalVector& x, const RationalVector& e2, double zero_tol) {
  if (!in_interior(cone, e2)) throw PreconditionError("second direction is not interior");
  HyperCone other(cone.p(), e2, cone.label() + "@e2");
  int r1 = rank(cone, x, zero_tol);
  int r2 = rank(other, x, zero_tol);
  if (r1 != r2)
    throw InconclusiveError("rank differs between interior directions (" + std::to_string(r1) + " vs " +
                            std::to_string(r2) + ")");
  return r1;
}

Membership contains(const HyperCone& cone, std::span<const double> x, double tol) {
  Spectrum s = robust_eigenvalues(cone, x, tol);
  if (s.inconclusive()) throw InconclusiveError("eigenvalue residual above tolerance");
  double m = s.min();
  if (m > tol) return Membership::In;
  if (m < -tol) return Membership::Out;
  return Membership::BoundaryAmbiguous;
}

namespace {

// q(-t) with coefficients of one sign has no positive root: q has no negative root.
bool no_negative_roots_by_signs(const UniPoly& q, bool exclude_zero) {
  const int lead = sgn(q.coeffs.back()) * (q.degree() % 2 ? -1 : 1);
  for (std::size_t i = 0; i < q.coeffs.size(); ++i) {
    const int s = sgn(q.coeffs[i]) * (i % 2 ? -1 : 1);
    if (s != 0 && s != lead) return false;
  }
  return !exclude_zero || sgn(q.coeffs.front()) != 0;
}

}  // namespace

Membership contains(const HyperCone& cone, const RationalVector& x) {
  UniPoly q = cone.restriction(x);
  if (no_negative_roots_by_signs(q, false)) return Membership::In;
  RootCensus c = root_census(q);
  if (!c.real_rooted()) throw PreconditionError("restriction is not real-rooted: polynomial not hyperbolic");
  return c.negative == 0 ? Membership::In : Membership::Out;
}

bool in_interior(const HyperCone& cone, std::span<const double> x, double tol) {
  Spectrum s = robust_eigenvalues(cone, x, tol);
  if (s.inconclusive()) throw InconclusiveError("eigenvalue residual above tolerance");
  return s.min() > tol;
}

bool in_interior(const HyperCone& cone, const RationalVector& x) {
  UniPoly q = cone.restriction(x);
  if (no_negative_roots_by_signs(q, true)) return true;
  RootCensus c = root_census(q);
  if (!c.real_rooted()) throw PreconditionError("restriction is not real-rooted: polynomial not hyperbolic");
  return c.negative == 0 && c.zero == 0;
}

Membership contains_by_inequalities(const HyperCone& cone, int k, std::span<const double> x, double tol) {
  if (k < 0 || k > cone.d() - 1) throw RangeError("derivative relaxation order out of range [0, d-1]");
  if (static_cast<int>(x.size()) != cone.dim()) throw DimensionError("point dimension differs from cone dimension");
  double norm = 0;
  for (double v : x) norm += v * v;
  norm = std::sqrt(norm);
  bool ambiguous = false;
  for (int i = k; i <= cone.d() - 1; ++i) {
    double v = cone.fderiv(i)(x);
    double scale = cone.coeff_scale(i) * std::pow(norm, cone.d() - i);
    if (v < -tol * scale) return Membership::Out;
    if (std::abs(v) <= tol * scale) ambiguous = true;
  }
  return ambiguous ? Membership::BoundaryAmbiguous : Membership::In;
}

Membership contains_by_inequalities(const HyperCone& cone, int k, const RationalVector& x) {
  if (k < 0 || k > cone.d() - 1) throw RangeError("derivative relaxation order out of range [0, d-1]");
  if (static_cast<int>(x.size()) != cone.dim()) throw DimensionError("point dimension differs from cone dimension");
  for (int i = k; i <= cone.d() - 1; ++i)
    if (sgn(eval(cone.deriv(i), x)) < 0) return Membership::Out;
  return Membership::In;
}

Membership contains(const DerivedCone& cone, std::span<const double> x, double tol) {
  return contains_by_inequalities(cone.base, cone.k, x, tol);
}

Membership contains(const DerivedCone& cone, const RationalVector& x) {
  return contains_by_inequalities(cone.base, cone.k, x);
}

// lambda_min(x) >= margin exactly: x - margin e has no negative eigenvalue.
bool min_eigenvalue_at_least(const HyperCone& cone, const RationalVector& x, const Rational& margin) {
  RationalVector y = add(x, scaled(cone.e(), -margin));
  return contains(cone, y) == Membership::In;
}

// lambda_min(x) <= -margin exactly: x + margin e is still outside or on the boundary.
bool min_eigenvalue_at_most(const HyperCone& cone, const RationalVector& x, const Rational& neg_margin) {
  RationalVector y = add(x, scaled(cone.e(), neg_margin));
  return !in_interior(cone, y);
}

CheckReport strict_containment_witness(const HyperCone& cone, int k, int budget, std::uint64_t seed, double tol) {
  if (k < 1 || k > cone.d() - 1) throw RangeError("strict nesting needs 1 <= k <= d-1");
  CheckReport report;
  report.tolerances = {{"tol", tol}, {"margin", 10 * tol}};
  if (!(cone.rog() && cone.minimality_assumed()))
    report.regime_warnings.push_back("cone is not flagged ROG with minimality assumed");
  if (k > cone.d() - 2) report.regime_warnings.push_back("k = d-1 lies outside 1 <= k <= d-2");

  HyperCone outer = derivative_cone(cone, k).as_cone();
  HyperCone inner = derivative_cone(cone, k - 1).as_cone();
  const Rational margin = dyadic(10 * tol);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<double> y(static_cast<std::size_t>(cone.dim()));
  for (int s = 0; s < budget; ++s) {
    ++report.samples;
    for (double& v : y) v = gauss(rng);
    Spectrum si = robust_eigenvalues(inner, y, tol), so = robust_eigenvalues(outer, y, tol);
    if (si.inconclusive() || so.inconclusive()) continue;
    // Shifting along e moves every eigenvalue of every relaxation by the same amount,
    // so centering the gap between the two smallest eigenvalues gives equal margins.
    double gap = so.min() - si.min();
    if (gap < 40 * tol) continue;
    double shift = si.min() + gap / 2;
    std::vector<double> x(y);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= shift * cone.e_double()[i];
    RationalVector xr = dyadic_vector(x);
    if (min_eigenvalue_at_least(outer, xr, margin) && min_eigenvalue_at_most(inner, xr, margin)) {
      report.verdict = Verdict::Holds;
      report.witness = std::move(xr);
      report.details = {{"lambda_min_outer", gap / 2}, {"lambda_min_inner", -gap / 2}};
      return report;
    }
  }
  report.diagnostics.push_back("budget exhausted without a verified witness");
  return report;
}

}  // namespace hypercone
