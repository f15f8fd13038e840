#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hypercone/rational.hpp"

namespace hypercone {

/// Univariate polynomial c_0 + c_1 t + ... with exact coefficients.
///
/// Restrictions keep their declared length even when leading coefficients
/// vanish; arithmetic helpers below work on trimmed copies.
struct UniPoly {
  std::vector<Rational> coeffs;

  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> c) : coeffs(std::move(c)) {}

  /// Index of the highest nonzero coefficient, -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return degree() < 0; }
  Rational eval(const Rational& t) const;
  double eval(double t) const;
  UniPoly trimmed() const;
  std::vector<double> as_doubles() const;

  bool operator==(const UniPoly& o) const { return trimmed().coeffs == o.trimmed().coeffs; }
};

UniPoly derivative(const UniPoly& f);
UniPoly operator*(const UniPoly& a, const UniPoly& b);
UniPoly operator-(const UniPoly& a, const UniPoly& b);
/// Quotient and remainder; divisor must be nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly monic(const UniPoly& f);

/// Multiplicity of the root t = 0 (number of vanishing low-order coefficients).
int zero_multiplicity(const UniPoly& q);

/// Yun square-free decomposition f = lc * prod_j f_j^j; returns (f_j, j) with
/// nonconstant monic f_j.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f);

/// Endpoint of a Sturm counting interval; nullopt stands for -inf (lower) / +inf (upper).
using Bound = std::optional<Rational>;

/// Number of distinct real roots of f in (lo, hi].
int count_distinct_roots(const UniPoly& f, const Bound& lo, const Bound& hi);

/// Real roots of f counted with multiplicity in (lo, hi].
int count_roots_with_multiplicity(const UniPoly& f, const Bound& lo, const Bound& hi);

/// Exact root census of a univariate polynomial.
struct RootCensus {
  int degree = 0;
  int real = 0;      ///< real roots with multiplicity
  int negative = 0;  ///< in (-inf, 0)
  int zero = 0;      ///< multiplicity of 0
  int positive = 0;  ///< in (0, inf)
  bool real_rooted() const { return real == degree; }
};

RootCensus root_census(const UniPoly& q);

}  // namespace hypercone
