#include <doctest.h>

#include "hypercone/error.hpp"
#include "hypercone/faces.hpp"

using namespace hypercone;

TEST_SUITE("faces") {
  TEST_CASE("face ranks of generator sums") {
    GeneratedFaceModel o = orthant_model(4);
    CHECK(face_rank_of_points(o, {0, 1}) == 2);
    CHECK(face_rank_of_points(o, {2}) == 1);
    GeneratedFaceModel p = psd_model(3, 0, 4);
    CHECK(face_rank_of_points(p, {0, 1}) == 2);
    CHECK_THROWS_AS(face_rank_of_points(o, {}), PreconditionError);
  }

  TEST_CASE("chains climb one rank at a time") {
    GeneratedFaceModel o = orthant_model(6);
    FaceChain c = build_chain(o, 0, 1);
    CHECK(c.ranks == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
    std::vector<int> picks = c.picks;
    std::sort(picks.begin(), picks.end());
    CHECK(picks == std::vector<int>{0, 1, 2, 3, 4, 5});
    GeneratedFaceModel p = psd_model(4, 4, 9);
    FaceChain pc = build_chain(p, 0, 9, true);
    CHECK(pc.ranks == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(build_chain(p, 0, 9, true).picks == pc.picks);
  }

  TEST_CASE("a single generator cannot extend") {
    GeneratedFaceModel m = make_face_model(orthant(3), {{1, 0, 0}}, "one");
    CHECK_THROWS_AS(build_chain(m, 0, 1), PreconditionError);
  }

  TEST_CASE("rank-one generation") {
    CHECK(rog_check(orthant_model(3)).holds());
    CHECK(rog_check(psd_model(3, 3, 2)).holds());
    auto v = [](int i) { return HomoPoly::variable(4, i); };
    HyperCone tilde(v(0) * v(0) * v(1) * v(2), {1, 1, 1, 1}, "tilde");
    GeneratedFaceModel m = make_face_model(tilde, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, "tilde");
    CheckReport r = rog_check(m);
    CHECK(r.fails());
    REQUIRE(r.witness);
    CHECK(*r.witness == RationalVector{1, 0, 0, 0});
    CHECK(rog_check(l1_model()).fails());
    CHECK(rog_check(soc_sphere_model(soc(3), 12, 5, "soc:4")).holds());
  }

  TEST_CASE("face models reject points outside the cone") {
    CHECK_THROWS_AS(make_face_model(orthant(3), {{-1, 0, 0}}, "bad"), PreconditionError);
  }

  TEST_CASE("restriction to a face") {
    HyperCone o4 = orthant(4);
    HyperCone f = face_restrict(o4, {1, 1, 0, 0}, {{1, 0, 0, 0}, {0, 1, 0, 0}});
    CHECK(f.dim() == 2);
    CHECK(f.d() == 2);
    // D_e^2 (x1 x2 x3 x4) on span{e1, e2} is 2 u1 u2
    auto u = [](int i) { return HomoPoly::variable(2, i); };
    CHECK(f.p() == Rational(2) * (u(0) * u(1)));

    HyperCone p3 = psd(3);
    RationalVector z = svec(std::vector<RationalVector>{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}});
    std::vector<RationalVector> block{svec(std::vector<RationalVector>{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}),
                                      svec(std::vector<RationalVector>{{0, 0, 0}, {0, 1, 0}, {0, 0, 0}}),
                                      svec(std::vector<RationalVector>{{0, 1, 0}, {1, 0, 0}, {0, 0, 0}})};
    HyperCone g = face_restrict(p3, z, block);
    CHECK(g.d() == 2);
    auto w = [](int i) { return HomoPoly::variable(3, i); };
    CHECK(g.p() == w(0) * w(1) - w(2) * w(2));

    HyperCone same = face_restrict(o4, {1, 1, 1, 1},
                                   {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    CHECK(same.p() == o4.p());
  }
}
