#include <doctest.h>

#include "hypercone/cone.hpp"
#include "hypercone/error.hpp"
#include "hypercone/gallery.hpp"

using namespace hypercone;

TEST_SUITE("cones") {
  TEST_CASE("membership examples") {
    HyperCone o4 = orthant(4);
    CHECK(contains(o4, std::vector<double>{1, 2, 3, 4}) == Membership::In);
    CHECK(contains(o4, std::vector<double>{-1, 3, 3, 3}) == Membership::Out);
    CHECK(contains(o4, RationalVector{-1, 3, 3, 3}) == Membership::Out);
    CHECK(contains(o4, RationalVector{0, 3, 3, 3}) == Membership::In);
    CHECK(contains(l1_cone(), std::vector<double>{1, 1, 2}) == Membership::BoundaryAmbiguous);
    CHECK(contains(l1_cone(), RationalVector{1, 1, 2}) == Membership::In);
    CHECK_THROWS_AS(contains(o4, std::vector<double>{1, 2}), DimensionError);
  }

  TEST_CASE("interior examples") {
    HyperCone o3 = orthant(3);
    CHECK(in_interior(o3, RationalVector{1, 1, 1}));
    CHECK_FALSE(in_interior(o3, RationalVector{1, 1, 0}));
    CHECK(in_interior(soc(2), RationalVector{2, 1, 0}));
    CHECK(in_interior(o3, std::vector<double>{1, 1, 1}));
    CHECK_FALSE(in_interior(o3, std::vector<double>{1, 1, 0}));
  }

  TEST_CASE("rank and multiplicity") {
    CHECK(rank(orthant(3), RationalVector{1, 1, 0}) == 2);
    CHECK(mult(orthant(3), RationalVector{1, 1, 0}) == 1);
    RationalVector uut = svec(std::vector<RationalVector>{{1, 2, -1}, {2, 4, -2}, {-1, -2, 1}});
    CHECK(rank(psd(3), uut) == 1);
    CHECK(rank_cross_checked(orthant(3), {1, 1, 0}, {1, 2, 3}) == 2);
  }

  TEST_CASE("derivative relaxations") {
    HyperCone o4 = orthant(4);
    CHECK(derivative_cone(o4, 0).as_cone().p() == o4.p());
    CHECK(derivative_cone(o4, 1).p_k == elementary_symmetric(4, 3));
    HomoPoly half = derivative_cone(o4, 3).p_k;
    CHECK(half.degree() == 1);
    CHECK(half == Rational(6) * elementary_symmetric(4, 1));
    CHECK_THROWS_AS(derivative_cone(o4, 4), RangeError);
    CHECK(derivative_cone(o4, 1).as_cone().minimality_assumed());
    CHECK_FALSE(derivative_cone(o4, 3).as_cone().minimality_assumed());
  }

  TEST_CASE("relaxation membership by inequalities") {
    DerivedCone d = orthant_deriv(4, 1);
    CHECK(contains(d, RationalVector{-1, 3, 3, 3}) == Membership::In);
    CHECK(contains(d, RationalVector{1, 1, 1, 1}) == Membership::In);
    CHECK(contains(d, RationalVector{-5, 1, 1, 1}) == Membership::Out);
    CHECK(contains(d, std::vector<double>{-1, 3, 3, 3}) == Membership::BoundaryAmbiguous);
    CHECK(contains(d, std::vector<double>{-0.9, 3, 3, 3}) == Membership::In);
    // the eigenvalue route on the relaxation agrees
    CHECK(contains(d.as_cone(), RationalVector{-5, 1, 1, 1}) == Membership::Out);
    CHECK(contains(d.as_cone(), RationalVector{-1, 3, 3, 3}) == Membership::In);
  }

  TEST_CASE("strict containment witnesses are re-verifiable") {
    for (int k : {1, 2, 3}) {
      CheckReport r = strict_containment_witness(orthant(4), k, 5000, 11);
      REQUIRE(r.holds());
      REQUIRE(r.witness);
      CHECK(contains_by_inequalities(orthant(4), k, *r.witness) == Membership::In);
      CHECK(contains_by_inequalities(orthant(4), k - 1, *r.witness) == Membership::Out);
      CHECK(min_eigenvalue_at_least(derivative_cone(orthant(4), k).as_cone(), *r.witness, Rational(1, 1000000)));
    }
    CHECK_FALSE(strict_containment_witness(orthant(4), 3, 100, 1).regime_warnings.empty());
    CHECK_THROWS_AS(strict_containment_witness(orthant(4), 0, 100, 1), RangeError);
  }

  TEST_CASE("cone descriptors round trip through json") {
    HyperCone c = l1_cone();
    HyperCone back = hypercone_from_json(c.to_json());
    CHECK(back.p() == c.p());
    CHECK(back.e() == c.e());
    CHECK_THROWS_AS(HyperCone(orthant(3).p(), {-1, 1, 1}, "bad"), PreconditionError);
  }
}
