#include <doctest.h>

#include <Eigen/Dense>

#include "hypercone/autgroup.hpp"
#include "hypercone/error.hpp"

using namespace hypercone;

namespace {

bool witness_separates(const HyperCone& base, int k, const LinearMap& a, const CheckReport& r) {
  const auto& mw = r.details.at("membership_witness");
  if (mw.is_null() || !r.witness) return false;
  LinearMap map = mw.at("map") == "inverse" ? a.inverse() : a;
  return contains_by_inequalities(base, k, *r.witness) == Membership::In &&
         contains_by_inequalities(base, k, map.apply(*r.witness)) == Membership::Out;
}

}  // namespace

TEST_SUITE("autgroup") {
  TEST_CASE("stabilizer") {
    auto s = stabilizer_check(LinearMap::identity(3).scaled(5), {1, 2, 3});
    CHECK(s.fixed);
    CHECK(*s.alpha == 5);
    CHECK(*stabilizer_check(LinearMap::permutation({2, 0, 1}), {1, 1, 1}).alpha == 1);
    CHECK_FALSE(stabilizer_check(LinearMap::diagonal({1, 2, 1}), {1, 1, 1}).fixed);
  }

  TEST_CASE("exact automorphism tier") {
    LinearMap a = LinearMap::diagonal({1, 2, 3}) * LinearMap::permutation({1, 2, 0});
    CheckReport r = check_automorphism(orthant(3), a);
    CHECK(r.holds());
    CHECK(*r.kappa == Rational(1, 6));

    CheckReport q = check_automorphism(psd(3), lyapunov_like_map(LinearMap::diagonal({1, -1, 1}) *
                                                                 LinearMap::permutation({2, 0, 1})));
    CHECK(q.holds());
    CHECK(*q.kappa == 1);

    auto v = [](int i) { return HomoPoly::variable(4, i); };
    LinearMap swap = LinearMap::permutation({1, 0, 2, 3});
    HyperCone tilde(v(0) * v(0) * v(1) * v(2), {1, 1, 1, 1}, "tilde");
    CheckReport t = check_automorphism(tilde, swap);
    CHECK(t.verdict == Verdict::Inconclusive);
    CHECK(t.details.contains("first_differing_coefficient"));

    HyperCone minimal(v(0) * v(0) * v(1) * v(2), {1, 1, 1, 1}, "tilde", true);
    CheckReport m = check_automorphism(minimal, swap);
    REQUIRE(m.fails());
    CHECK(eval(minimal.p(), *m.witness) != *m.kappa * eval(minimal.p(), swap.apply(*m.witness)));
  }

  TEST_CASE("maps moving e out of the interior fail with witness e") {
    CheckReport r = check_automorphism(orthant(3), LinearMap::diagonal({1, 1, -1}));
    CHECK(r.fails());
    CHECK(*r.witness == orthant(3).e());
  }

  TEST_CASE("derivative relaxations inherit exactly the e-stabilizer") {
    CheckReport holds = check_deriv_automorphism(orthant(5), 1, LinearMap::permutation({1, 2, 3, 4, 0}).scaled(3));
    CHECK(holds.holds());
    CHECK(holds.details["base"]["verdict"] == "Holds");
    CHECK_FALSE(holds.theorem_violation);

    CheckReport fails = check_deriv_automorphism(orthant(5), 1, LinearMap::diagonal({1, 2, 1, 1, 1}));
    CHECK(fails.fails());
    CHECK(fails.details["base"]["verdict"] == "Holds");
    CHECK(fails.details["stabilizer"]["fixed"] == false);
    CHECK_FALSE(fails.theorem_violation);

    LinearMap boost(3, {Rational(5, 4), 0, Rational(3, 4), 0, 1, 0, Rational(3, 4), 0, Rational(5, 4)});
    CheckReport l1 = check_deriv_automorphism(l1_cone(), 1, boost);
    CHECK(l1.holds());
    CHECK(l1.details["base"]["verdict"] == "FailsWithWitness");
    CHECK_FALSE(l1.regime_warnings.empty());
    CHECK_FALSE(l1.theorem_violation);
  }

  TEST_CASE("orthant relaxation classification") {
    CHECK(classify_orthant_deriv(4, 1, LinearMap::permutation({3, 2, 1, 0}).scaled(7)).holds());
    LinearMap d = LinearMap::diagonal({1, 1, 1, 2});
    CheckReport r = classify_orthant_deriv(4, 1, d);
    CHECK(r.fails());
    CHECK(witness_separates(orthant(4), 1, d, r));
    CheckReport lorentz = classify_orthant_deriv(4, 2, LinearMap::permutation({1, 0, 3, 2}).scaled(2));
    CHECK(lorentz.holds());
    CHECK_FALSE(lorentz.regime_warnings.empty());
    CHECK_THROWS_AS(classify_orthant_deriv(3, 1, LinearMap::identity(3)), RangeError);
  }

  TEST_CASE("PSD relaxation classification") {
    LinearMap q = LinearMap::diagonal({1, -1, 1, -1}) * LinearMap::permutation({1, 0, 3, 2});
    CHECK(classify_psd_deriv(4, 1, q).holds());
    CheckReport scaled = classify_psd_deriv(4, 1, q.scaled(3));
    CHECK(scaled.holds());
    CHECK(*scaled.kappa == Rational(1, 729));  // degree 3 relaxation, L_{3Q} = 9 L_Q
    LinearMap d = LinearMap::diagonal({1, 1, 1, 2});
    CheckReport r = classify_psd_deriv(4, 1, d);
    CHECK(r.fails());
    CHECK(witness_separates(psd(4), 1, lyapunov_like_map(d), r));
    CHECK_THROWS_AS(classify_psd_deriv(3, 1, LinearMap::identity(3)), RangeError);
  }

  TEST_CASE("float tier and singular-value projection") {
    Eigen::MatrixXd a = Eigen::MatrixXd::Random(4, 4);
    Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(a).householderQ();
    CheckReport r = classify_psd_deriv_float(4, 1, q, {500, 3, 1e-8});
    CHECK(r.holds());
    CheckReport proj = spectral_aut_projection(1, q, r, {500, 3, 1e-8});
    CHECK(proj.holds());
    Eigen::MatrixXd d = Eigen::Vector4d(1, 2, 1, 1).asDiagonal();
    CheckReport lm = classify_psd_deriv(4, 1, LinearMap::diagonal({1, 2, 1, 1}));
    CheckReport dp = spectral_aut_projection(1, d, lm, {1000, 3, 1e-7});
    CHECK(lm.fails());
    CHECK(dp.fails());
    CHECK(dp.details["consistent"] == true);
  }

  TEST_CASE("Lie algebra probes") {
    HyperCone o = orthant_deriv(4, 1).as_cone();
    CHECK(lie_probe(o, Eigen::MatrixXd::Identity(4, 4), {0.1, -0.1, 1, -1}).holds());
    CHECK(lie_probe(o, Eigen::Vector4d(1, 0, 0, 0).asDiagonal().toDenseMatrix(), {0.1, -0.1, 1, -1}).fails());
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(4, 4);
    w(0, 2) = 1;
    w(2, 0) = -1;
    CHECK(lie_probe(psd_deriv(4, 1).as_cone(), lyapunov_generator(w), {0.1, -0.1, 1, -1}).holds());
  }

  TEST_CASE("Perron eigenvectors and face fixing") {
    CheckReport r = perron_eigenvector(orthant(3), LinearMap::permutation({1, 0, 2}));
    REQUIRE(r.holds());
    std::vector<double> v = to_doubles(*r.witness);
    CHECK(v[0] == doctest::Approx(v[1]));
    CHECK(contains(orthant(3), v) != Membership::Out);
    CHECK(r.details["rho"].get<double>() == doctest::Approx(1.0));

    CheckReport id = perron_eigenvector(orthant(3), LinearMap::identity(3).scaled(2));
    CHECK(id.holds());

    LinearMap rot(3, {Rational(3, 5), Rational(-4, 5), 0, Rational(4, 5), Rational(3, 5), 0, 0, 0, 1});
    CheckReport p = perron_eigenvector(psd(3), lyapunov_like_map(rot));
    CHECK(p.holds());

    CHECK(min_face_fix_check(GalleryKind::Orthant, LinearMap::permutation({1, 0, 2}), {1, 1, 0}).holds());
    RationalVector uut = svec(std::vector<RationalVector>{{0, 0, 0}, {0, 0, 0}, {0, 0, 1}});
    CHECK(min_face_fix_check(GalleryKind::PSD, lyapunov_like_map(rot), uut).holds());
    CHECK_THROWS_AS(min_face_fix_check(GalleryKind::Orthant, LinearMap::permutation({1, 0, 2}), {1, 0, 0}),
                    PreconditionError);
  }

  TEST_CASE("Garding inequality") {
    HyperCone c = orthant(3);
    CheckReport eq = garding_check(c, {{1, 1, 1}, {2, 2, 2}, {3, 3, 3}});
    CHECK(eq.holds());
    CHECK(eq.details["polar_value"].get<double>() == doctest::Approx(6.0));
    CHECK(eq.details["geometric_mean"].get<double>() == doctest::Approx(6.0));
    CheckReport strict = garding_check(c, {{1, 1, 1}, {1, 1, 1}, {1, 1, 4}});
    CHECK(strict.holds());
    CHECK(strict.details["polar"] == "2");
    CHECK(strict.details["geometric_mean"].get<double>() == doctest::Approx(std::cbrt(4.0)));
    CHECK_THROWS_AS(garding_check(c, {{1, 1, 1}, {1, 1, 0}, {1, 1, 1}}), PreconditionError);
  }
}
