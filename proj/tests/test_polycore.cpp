#include <doctest.h>

#include "hypercone/error.hpp"
#include "hypercone/gallery.hpp"
#include "hypercone/homopoly.hpp"
#include "hypercone/linear_map.hpp"
#include "hypercone/unipoly.hpp"

using namespace hypercone;

namespace {

HomoPoly x(int n, int i) { return HomoPoly::variable(n, i); }

HomoPoly tilde() { return x(4, 0) * x(4, 0) * x(4, 1) * x(4, 2); }

}  // namespace

TEST_SUITE("polycore") {
  TEST_CASE("rationals parse exactly and canonically") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-0.25") == Rational(-1, 4));
    CHECK(parse_rational("1e-3") == Rational(1, 1000));
    CHECK(to_string(parse_rational("4/2")) == "2");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK(parse_rational_list("1, -2/3 ,0.5") == RationalVector{1, Rational(-2, 3), Rational(1, 2)});
  }

  TEST_CASE("evaluation") {
    HomoPoly p = x(3, 0) * x(3, 1) * x(3, 2);
    CHECK(eval(p, {1, 1, 1}) == 1);
    CHECK(eval(tilde(), {1, 0, 0, 0}) == 0);
    CHECK(eval(l1_cone().p(), {0, 0, 1}) == 1);
    // the four linear factors at (1, 2, 5): (1+2+5)(1-2+5)(-1+2+5)(-1-2+5)
    CHECK(eval(l1_cone().p(), {1, 2, 5}) == 8 * 4 * 6 * 2);
  }

  TEST_CASE("directional derivatives") {
    HomoPoly p = x(3, 0) * x(3, 1) * x(3, 2);
    CHECK(dir_deriv(p, {1, 1, 1}, 1) == x(3, 0) * x(3, 1) + x(3, 0) * x(3, 2) + x(3, 1) * x(3, 2));
    CHECK(dir_deriv(p, {1, 1, 1}, 3) == HomoPoly::constant(3, 6));
    CHECK_THROWS(dir_deriv(p, {1, 1, 1}, 4));
    HomoPoly q = x(3, 2) * x(3, 2) - x(3, 0) * x(3, 0) - x(3, 1) * x(3, 1);
    CHECK(dir_deriv(l1_cone().p(), {0, 0, 1}, 1) == Rational(4) * (x(3, 2) * q));
    CHECK(dir_deriv(l1_cone().p(), {0, 0, 1}, 2) ==
          Rational(4) * (Rational(3) * (x(3, 2) * x(3, 2)) - x(3, 0) * x(3, 0) - x(3, 1) * x(3, 1)));
  }

  TEST_CASE("elementary symmetric identity for products") {
    for (int n = 3; n <= 6; ++n) {
      HomoPoly p = orthant(n).p();
      RationalVector ones(static_cast<std::size_t>(n), Rational(1));
      for (int k = 0; k <= n; ++k) CHECK(dir_deriv(p, ones, k) == factorial(k) * elementary_symmetric(n, n - k));
    }
  }

  TEST_CASE("composition with linear maps") {
    HomoPoly p = x(3, 0) * x(3, 1) * x(3, 2);
    CHECK(compose(p, LinearMap::identity(3).scaled(2)) == Rational(8) * p);
    LinearMap swap = LinearMap::permutation({1, 0, 2});
    CHECK(compose(p, swap) == p);
    LinearMap swap4 = LinearMap::permutation({1, 0, 2, 3});
    CHECK(compose(tilde(), swap4) == x(4, 0) * x(4, 1) * x(4, 1) * x(4, 2));
  }

  TEST_CASE("line restriction: closed form agrees with expansion") {
    HomoPoly p = x(3, 0) * x(3, 1) * x(3, 2);
    RationalVector e{1, 1, 1};
    // (t-a)(t-b)(t-c) with a, b, c = 2, -1, 1/2
    UniPoly q = restrict_line(p, e, {2, -1, Rational(1, 2)});
    UniPoly expected(std::vector<Rational>{1, Rational(-3, 2), Rational(-3, 2), 1});
    CHECK(q == expected);
    CHECK(restrict_line(p, e, {0, 0, 0}) == UniPoly(std::vector<Rational>{0, 0, 0, 1}));
    HomoPoly s = soc(2).p();
    CHECK(restrict_line(s, {1, 0, 0}, {0, 1, 0}) == UniPoly(std::vector<Rational>{-1, 0, 1}));
    for (const RationalVector& pt : {RationalVector{3, -2, 7}, RationalVector{Rational(1, 3), 5, -1}}) {
      CHECK(restrict_line(p, e, pt, RestrictMethod::ClosedForm) == restrict_line(p, e, pt, RestrictMethod::Expand));
      CHECK(restrict_line(l1_cone().p(), {0, 0, 1}, pt) ==
            restrict_line(l1_cone().p(), {0, 0, 1}, pt, RestrictMethod::Expand));
    }
  }

  TEST_CASE("polar form") {
    HomoPoly p = orthant(3).p();
    RationalVector e{1, 1, 1};
    CHECK(polar_form(p, {e, e, e}) == eval(p, e));
    HomoPoly q = x(2, 0) * x(2, 1);
    RationalVector u{2, 3}, v{5, 7};
    CHECK(polar_form(q, {u, v}) == Rational(2 * 7 + 3 * 5, 2));
    CHECK(polar_form(q, {scaled(u, 2), v}) == 2 * polar_form(q, {u, v}));
    CHECK(polar_form(p, {{1, 1, 1}, {1, 1, 1}, {1, 1, 4}}) == 2);
    CHECK_THROWS_AS(polar_form(p, {e, e}), DimensionError);
  }

  TEST_CASE("univariate toolkit") {
    // (t-1)^2 (t+2) (t^2+1)
    UniPoly a(std::vector<Rational>{-1, 1}), b(std::vector<Rational>{2, 1}), c(std::vector<Rational>{1, 0, 1});
    UniPoly f = a * a * b * c;
    RootCensus census = root_census(f);
    CHECK(census.degree == 5);
    CHECK(census.real == 3);
    CHECK_FALSE(census.real_rooted());
    CHECK(count_distinct_roots(f, std::nullopt, std::nullopt) == 2);
    auto sqf = squarefree_decomposition(f);
    int total = 0;
    for (const auto& [g, m] : sqf) total += g.degree() * m;
    CHECK(total == 5);
  }

  TEST_CASE("json round trip") {
    HomoPoly p = l1_cone().p();
    CHECK(homopoly_from_json(to_json(p)) == p);
    CHECK_THROWS_AS(homopoly_from_json(nlohmann::json{{"nvars", 2}}), ParseError);
  }

  TEST_CASE("linear maps") {
    LinearMap a(2, {1, 2, 3, 4});
    CHECK(a.determinant() == -2);
    CHECK(a * a.inverse() == LinearMap::identity(2));
    CHECK(LinearMap(2, {Rational(4, 2), 0, 0, 1}) == LinearMap::diagonal({2, 1}));
    CHECK_THROWS_AS(LinearMap(2, {1, 2, 3}), DimensionError);
  }
}
