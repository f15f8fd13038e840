#include <doctest.h>

#include <random>

#include <Eigen/Dense>

#include "hypercone/cone.hpp"
#include "hypercone/error.hpp"
#include "hypercone/gallery.hpp"
#include "hypercone/spectrum.hpp"

using namespace hypercone;

namespace {

HyperCone tilde_cone() {
  auto v = [](int i) { return HomoPoly::variable(4, i); };
  return HyperCone(v(0) * v(0) * v(1) * v(2), {1, 1, 1, 1}, "tilde");
}

UniPoly from_roots(const std::vector<Rational>& roots) {
  UniPoly q(std::vector<Rational>{1});
  for (const auto& r : roots) q = q * UniPoly(std::vector<Rational>{-r, 1});
  return q;
}

}  // namespace

TEST_SUITE("spectrum") {
  TEST_CASE("real roots of constructed polynomials") {
    RootResult r = real_roots(from_roots({0, 0, 0}));
    REQUIRE(r.roots.size() == 3);
    for (double v : r.roots) CHECK(v == doctest::Approx(0.0));
    CHECK(r.residual == doctest::Approx(0.0));

    r = real_roots(from_roots({1, 2, 3}));
    REQUIRE(r.roots.size() == 3);
    CHECK(std::abs(r.roots[0] - 3) < 1e-12);
    CHECK(std::abs(r.roots[1] - 2) < 1e-12);
    CHECK(std::abs(r.roots[2] - 1) < 1e-12);

    r = real_roots(UniPoly(std::vector<Rational>{-1, 0, 1}));
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0] == doctest::Approx(1.0));
    CHECK(r.roots[1] == doctest::Approx(-1.0));
  }

  TEST_CASE("complex pairs raise the residual") {
    RootResult r = real_roots(UniPoly(std::vector<Rational>{1, 0, 1}));
    CHECK(r.residual > kResidualTol);
    Spectrum s = spectrum_from_restriction(UniPoly(std::vector<Rational>{1, 0, 1}));
    CHECK(s.inconclusive());
    CHECK_THROWS_AS(s.rank(), InconclusiveError);
  }

  TEST_CASE("exact restrictions give exact multiplicities") {
    Spectrum s = eigenvalues(tilde_cone(), RationalVector{1, 0, 0, 0});
    CHECK(s.eigenvalues == std::vector<double>{1, 1, 0, 0});
    CHECK(s.rank() == 2);
    REQUIRE(s.exact_zero_mult);
    CHECK(*s.exact_zero_mult == 2);
    s = eigenvalues(tilde_cone(), RationalVector{0, 1, 0, 0});
    CHECK(s.eigenvalues == std::vector<double>{1, 0, 0, 0});
    CHECK(s.rank() == 1);
  }

  TEST_CASE("rank ambiguity near the zero tolerance") {
    Spectrum s = spectrum_from_restriction(std::vector<double>{-1e-7 * 1.5, 1.0});
    CHECK(s.rank_ambiguous());
    CHECK_THROWS_AS(s.rank(), InconclusiveError);
    nlohmann::json j = s.to_json();
    CHECK(j["rank"].is_null());
    CHECK(j["inconclusive"] == true);
  }

  TEST_CASE("orthant eigenvalues are the sorted coordinates") {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    HyperCone c = orthant(5);
    for (int s = 0; s < 50; ++s) {
      std::vector<double> x(5);
      for (double& v : x) v = g(rng);
      Spectrum sp = eigenvalues(c, x);
      std::vector<double> sorted = x;
      std::sort(sorted.rbegin(), sorted.rend());
      for (int i = 0; i < 5; ++i) CHECK(std::abs(sp.eigenvalues[static_cast<std::size_t>(i)] - sorted[static_cast<std::size_t>(i)]) < 1e-9);
    }
  }

  TEST_CASE("PSD eigenvalues match the matrix eigensolver") {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> g;
    for (int n = 2; n <= 4; ++n) {
      HyperCone c = psd(n);
      for (int s = 0; s < 20; ++s) {
        Eigen::MatrixXd a(n, n);
        for (int i = 0; i < n * n; ++i) a.data()[i] = g(rng);
        Eigen::MatrixXd x = (a + a.transpose()).eval();
        Spectrum sp = eigenvalues(c, svec(x));
        Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(x).eigenvalues().reverse();
        for (int i = 0; i < n; ++i) CHECK(std::abs(sp.eigenvalues[static_cast<std::size_t>(i)] - ev(i)) < 1e-8);
      }
    }
  }

  TEST_CASE("float and Sturm root counts agree") {
    UniPoly q = from_roots({3, 1, 0, -2});
    RootCountComparison c = compare_nonnegative_root_counts(q);
    CHECK(c.agree());
    CHECK(c.sturm_count == 3);
  }

  TEST_CASE("hyperbolicity sampling") {
    auto v = [](int n, int i) { return HomoPoly::variable(n, i); };
    CHECK(check_hyperbolic(orthant(3).p(), {1, 1, 1}, 200, 1).verdict ==
          HyperbolicityCertificate::Verdict::LooksHyperbolic);
    CHECK(check_hyperbolic(soc(2).p(), {1, 0, 0}, 200, 1).verdict == HyperbolicityCertificate::Verdict::LooksHyperbolic);
    HomoPoly bad = v(2, 0) * v(2, 0) + v(2, 1) * v(2, 1);
    auto cert = check_hyperbolic(bad, {1, 0}, 200, 1);
    CHECK(cert.verdict == HyperbolicityCertificate::Verdict::RefutedWithWitness);
    REQUIRE(cert.witness);
    CHECK_FALSE(root_census(restrict_line(bad, {1, 0}, *cert.witness)).real_rooted());
  }
}
