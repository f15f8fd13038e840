#include <doctest.h>

#include <Eigen/Dense>

#include "hypercone/error.hpp"
#include "hypercone/gallery.hpp"

using namespace hypercone;

TEST_SUITE("gallery") {
  TEST_CASE("orthant") {
    HyperCone c = orthant(4);
    CHECK(c.rog());
    CHECK(c.minimality_assumed());
    CHECK(in_interior(c, c.e()));
    CHECK(rank(c, RationalVector{1, 0, 0, 0}) == 1);
    CHECK(orthant_deriv(5, 2).p_k == Rational(2) * elementary_symmetric(5, 3));
    CHECK_THROWS_AS(orthant_deriv(4, 0), RangeError);
    CHECK_THROWS_AS(orthant_deriv(4, 4), RangeError);
  }

  TEST_CASE("svec layout") {
    CHECK(svec_dim(3) == 6);
    CHECK(svec_order(10) == 4);
    Eigen::MatrixXd x(2, 2);
    x << 1, 5, 5, 2;
    CHECK(svec(x) == std::vector<double>{1, 2, 5});
    std::vector<double> v{1, 2, 5};
    CHECK(smat(v, 2).isApprox(x));
  }

  TEST_CASE("PSD cone") {
    HyperCone c = psd(3);
    Spectrum s = eigenvalues(c, c.e());
    for (double l : s.eigenvalues) CHECK(l == doctest::Approx(1.0));
    RationalVector uut = svec(std::vector<RationalVector>{{1, 1, 0}, {1, 1, 0}, {0, 0, 0}});
    CHECK(rank(c, uut) == 1);
    Eigen::MatrixXd indefinite = Eigen::Vector3d(1, -1, 2).asDiagonal();
    CHECK(contains(c, svec(indefinite)) == Membership::Out);
    CHECK(psd(4).p().size() == 17);
    CHECK_THROWS_AS(psd(5), RangeError);
  }

  TEST_CASE("spectral relaxation membership") {
    Eigen::MatrixXd id = Eigen::MatrixXd::Identity(4, 4);
    CHECK(psd_deriv_member(4, 1, id) == Membership::In);
    CHECK(psd_deriv_member(4, 1, Eigen::Vector4d(-0.9, 3, 3, 3).asDiagonal()) == Membership::In);
    CHECK(psd_deriv_member(4, 1, Eigen::Vector4d(-5, 1, 1, 1).asDiagonal()) == Membership::Out);
    CHECK(contains(psd_deriv(4, 1), svec(Eigen::MatrixXd(Eigen::Vector4d(-5, 1, 1, 1).asDiagonal()))) ==
          Membership::Out);
  }

  TEST_CASE("Lyapunov-like maps act by congruence") {
    Eigen::MatrixXd m(3, 3);
    m << 1, 2, 0, 0, 1, 3, 1, 0, 1;
    Eigen::MatrixXd x(3, 3);
    x << 2, 1, 0, 1, 3, 1, 0, 1, 4;
    std::vector<double> lhs = svec(Eigen::MatrixXd(m * x * m.transpose()));
    Eigen::VectorXd sx = Eigen::Map<const Eigen::VectorXd>(svec(x).data(), 6);
    Eigen::VectorXd rhs = lyapunov_like_map(m) * sx;
    for (int i = 0; i < 6; ++i) CHECK(rhs(i) == doctest::Approx(lhs[static_cast<std::size_t>(i)]));
    LinearMap exact = lyapunov_like_map(LinearMap(3, {1, 2, 0, 0, 1, 3, 1, 0, 1}));
    CHECK(exact.as_double().isApprox(lyapunov_like_map(m)));
  }

  TEST_CASE("second-order cone") {
    HyperCone c = soc(2);
    CHECK(c.label() == "soc:3");
    CHECK(rank(c, RationalVector{1, 1, 0}) == 1);
    CHECK(in_interior(c, RationalVector{2, 1, 0}));
    CHECK(contains(c, RationalVector{0, 1, 0}) == Membership::Out);
    Spectrum s = eigenvalues(c, RationalVector{3, 3, 4});
    CHECK(s.eigenvalues == std::vector<double>{8, -2});
  }

  TEST_CASE("l1 cone") {
    HyperCone c = l1_cone();
    CHECK_FALSE(c.rog());
    CHECK(c.minimality_assumed());
    CHECK(contains(c, RationalVector{1, 0, 1}) == Membership::In);
    CHECK_FALSE(in_interior(c, RationalVector{1, 0, 1}));
    CHECK(rank(c, RationalVector{1, 0, 1}) == 2);
    CHECK(eigenvalues(c, RationalVector{0, 0, 1}).eigenvalues == std::vector<double>{1, 1, 1, 1});
    CHECK(l1_to_soc_coordinates(std::vector<double>{1, 2, 3}) == std::vector<double>{3, 1, 2});
  }

  TEST_CASE("spectrahedral representations of the Lorentz cone") {
    Spectrahedral a1 = soc_arrow_representation();
    Spectrahedral a2 = soc_2x2_representation();
    CHECK(a1.cone.d() == 3);
    CHECK(a2.cone.d() == 2);
    for (const RationalVector& x : {RationalVector{1, 1, 0}, RationalVector{2, 1, 1}, RationalVector{5, 3, 4}}) {
      const int r1 = rank(a1.cone, x), r2 = rank(a2.cone, x);
      CHECK(r1 == symmetric_matrix_rank(a1.matrix_at(to_doubles(x))));
      CHECK(r2 == symmetric_matrix_rank(a2.matrix_at(to_doubles(x))));
    }
    CHECK(rank(a1.cone, RationalVector{1, 1, 0}) == 2);
    CHECK(rank(a2.cone, RationalVector{1, 1, 0}) == 1);
    CHECK_THROWS(spectrahedral({LinearMap::identity(2), LinearMap::identity(2)}, {1, 0}));
  }

  TEST_CASE("cone ids") {
    CHECK(gallery_cone("orthant:4").cone.dim() == 4);
    GalleryCone g = gallery_cone("orthant:4:k=1");
    CHECK(g.k == 1);
    CHECK(g.cone.d() == 3);
    CHECK(gallery_cone("psd:3").cone.dim() == 6);
    CHECK(gallery_cone("soc:3").cone.dim() == 3);
    CHECK(gallery_cone("l1").cone.d() == 4);
    CHECK(gallery_cone("l1:k=1").cone.d() == 3);
    CHECK_THROWS_AS(gallery_cone("cube:3"), ParseError);
    CHECK_THROWS_AS(gallery_cone("orthant:x"), ParseError);
    CHECK_THROWS_AS(gallery_cone("orthant:4:k=4"), RangeError);
  }
}
