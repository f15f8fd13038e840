#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypercone/linear_map.hpp"
#include "hypercone/rational.hpp"
#include "hypercone/unipoly.hpp"

namespace hypercone {

using Exponent = std::vector<int>;

/// Graded lexicographic order with x1 > x2 > ... ; maps keyed by this order
/// iterate from the leading term downwards.
struct GrlexDescending {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse homogeneous polynomial with exact rational coefficients.
///
/// Immutable once built. Every stored exponent has total degree `degree()`
/// and no stored coefficient is zero, so `==` is equality of polynomials.
class HomoPoly {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexDescending>;

  HomoPoly() = default;
  /// Zero polynomial of the given shape.
  HomoPoly(int nvars, int degree);
  /// Canonicalizes (drops zero coefficients); throws DimensionError on
  /// exponents of the wrong length or total degree.
  HomoPoly(int nvars, int degree, TermMap terms);

  static HomoPoly variable(int nvars, int i);
  static HomoPoly linear_form(const RationalVector& coeffs);
  static HomoPoly constant(int nvars, const Rational& c);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of a monomial (zero when absent).
  Rational coefficient(const Exponent& e) const;
  Rational max_abs_coefficient() const;

  bool operator==(const HomoPoly& other) const;

  friend HomoPoly operator+(const HomoPoly& a, const HomoPoly& b);
  friend HomoPoly operator-(const HomoPoly& a, const HomoPoly& b);
  friend HomoPoly operator*(const HomoPoly& a, const HomoPoly& b);
  friend HomoPoly operator*(const Rational& s, const HomoPoly& a);

  std::string to_string() const;

 private:
  int nvars_ = 0;
  int degree_ = 0;
  TermMap terms_;
};

HomoPoly pow(const HomoPoly& p, int k);

/// Exact value of p at x.
Rational eval(const HomoPoly& p, const RationalVector& x);

/// D_e p = sum_i e_i dp/dx_i (one directional derivative step).
HomoPoly dir_deriv_step(const HomoPoly& p, const RationalVector& e);

/// D_e^k p(x) = d^k/dt^k p(x + t e) at t = 0, by k single steps.
HomoPoly dir_deriv(const HomoPoly& p, const RationalVector& e, int k);

/// x -> p(Ax).
HomoPoly compose(const HomoPoly& p, const LinearMap& a);

/// Substitutes x_i -> forms[i]; every form is a degree-1 polynomial in a common
/// number of variables, which becomes the result's nvars.
HomoPoly substitute(const HomoPoly& p, const std::vector<HomoPoly>& forms);

/// Elementary symmetric polynomial s_k in n variables.
HomoPoly elementary_symmetric(int n, int k);

enum class RestrictMethod {
  /// c_k = (-1)^(d-k) / k! * (D_e^k p)(x).
  ClosedForm,
  /// Substitute x_i -> t e_i - x_i and expand; kept as an independent check.
  Expand,
};

/// q(t) = p(t e - x), full length d+1 with c_d = p(e).
UniPoly restrict_line(const HomoPoly& p, const RationalVector& e, const RationalVector& x,
                      RestrictMethod method = RestrictMethod::ClosedForm);

/// Same closed form using precomputed derivatives derivs[k] = D_e^k p, k = 0..d.
UniPoly restrict_line(std::span<const HomoPoly> derivs, const RationalVector& x);

/// Largest degree accepted by polar_form (2^d evaluations).
inline constexpr int kMaxPolarDegree = 24;

/// Symmetric multilinear form with P(x,...,x) = p(x), via the polarization identity.
Rational polar_form(const HomoPoly& p, const std::vector<RationalVector>& xs);

/// Floating-point evaluation form of a HomoPoly, used by the sampling paths.
class FloatPoly {
 public:
  FloatPoly() = default;
  explicit FloatPoly(const HomoPoly& p);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  double max_abs_coefficient() const { return max_abs_; }
  double operator()(std::span<const double> x) const;

 private:
  int nvars_ = 0;
  int degree_ = 0;
  double max_abs_ = 0;
  std::vector<double> coeffs_;
  std::vector<unsigned char> exps_;  // row-major, nvars_ per term
};

nlohmann::json to_json(const HomoPoly& p);
HomoPoly homopoly_from_json(const nlohmann::json& j);

}  // namespace hypercone
