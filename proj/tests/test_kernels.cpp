#include <doctest.h>

#include <cmath>

#include "hypercone/gallery.hpp"
#include "hypercone/kernels.hpp"

using namespace hypercone;

namespace {

bool same(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i] || (std::isnan(a[i]) && std::isnan(b[i])))) return false;
  return true;
}

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("gaussian points are seeded") {
    CHECK(gaussian_points(3, 10, 5) == gaussian_points(3, 10, 5));
    CHECK(gaussian_points(3, 10, 5) != gaussian_points(3, 10, 6));
  }

  TEST_CASE("serial and parallel kernels agree") {
    for (const HyperCone& c : {orthant(5), psd(3), soc(4), l1_cone()}) {
      CAPTURE(c.label());
      PointBatch pts = gaussian_points(c.dim(), 400, 11);
      auto ls = batch_min_eigenvalue(c, pts, ExecPolicy::Serial);
      auto lp = batch_min_eigenvalue(c, pts, ExecPolicy::Parallel);
      CHECK(same(ls, lp));
      CHECK(batch_contains(c, pts, kZeroTol, ExecPolicy::Serial) == batch_contains(c, pts, kZeroTol, ExecPolicy::Parallel));
      for (int k = 0; k < c.d(); ++k)
        CHECK(batch_contains_by_inequalities(c, k, pts, kZeroTol, ExecPolicy::Serial) ==
              batch_contains_by_inequalities(c, k, pts, kZeroTol, ExecPolicy::Parallel));
      std::vector<double> target(static_cast<std::size_t>(pts.cols()), 0.25);
      CHECK(shift_to_min_eigenvalue(c, pts, target, ExecPolicy::Serial) ==
            shift_to_min_eigenvalue(c, pts, target, ExecPolicy::Parallel));
    }
  }

  TEST_CASE("shifting sets the smallest eigenvalue") {
    HyperCone c = psd(3);
    PointBatch pts = gaussian_points(c.dim(), 50, 2);
    std::vector<double> target(50, 0.0);
    for (int j = 0; j < 50; j += 2) target[static_cast<std::size_t>(j)] = 0.5;
    auto lam = batch_min_eigenvalue(c, shift_to_min_eigenvalue(c, pts, target));
    for (std::size_t j = 0; j < lam.size(); ++j) CHECK(lam[j] == doctest::Approx(target[j]).epsilon(1e-9));
  }

  TEST_CASE("batch membership matches the pointwise routes") {
    HyperCone c = orthant(4);
    PointBatch pts = gaussian_points(4, 100, 9);
    std::vector<double> target(100, 0.1);
    pts = shift_to_min_eigenvalue(c, pts, target);
    auto in = batch_contains(c, pts, kZeroTol);
    for (auto m : in) CHECK(m == Membership::In);
  }
}
