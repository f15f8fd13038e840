#include "hypercone/kernels.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace hypercone {

namespace {

std::span<const double> column(const PointBatch& pts, Eigen::Index j) {
  return {pts.col(j).data(), static_cast<std::size_t>(pts.rows())};
}

double min_eig_or_nan(const HyperCone& cone, std::span<const double> x) {
  try {
    Spectrum s = robust_eigenvalues(cone, x);
    if (s.inconclusive()) return std::numeric_limits<double>::quiet_NaN();
    return s.min();
  } catch (const std::exception&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

template <class F>
void for_each_index(Eigen::Index count, ExecPolicy policy, F&& body) {
  if (policy == ExecPolicy::Serial) {
    for (Eigen::Index j = 0; j < count; ++j) body(j);
    return;
  }
#pragma omp parallel for schedule(dynamic, 16)
  for (Eigen::Index j = 0; j < count; ++j) body(j);
}

}  // namespace

PointBatch gaussian_points(int dim, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  PointBatch pts(dim, count);
  for (int j = 0; j < count; ++j)
    for (int i = 0; i < dim; ++i) pts(i, j) = gauss(rng);
  return pts;
}

std::vector<double> batch_min_eigenvalue(const HyperCone& cone, const PointBatch& pts, ExecPolicy policy) {
  std::vector<double> out(static_cast<std::size_t>(pts.cols()));
  for_each_index(pts.cols(), policy, [&](Eigen::Index j) { out[static_cast<std::size_t>(j)] = min_eig_or_nan(cone, column(pts, j)); });
  return out;
}

std::vector<std::optional<Membership>> batch_contains(const HyperCone& cone, const PointBatch& pts, double tol,
                                                      ExecPolicy policy) {
  std::vector<std::optional<Membership>> out(static_cast<std::size_t>(pts.cols()));
  for_each_index(pts.cols(), policy, [&](Eigen::Index j) {
    try {
      out[static_cast<std::size_t>(j)] = contains(cone, column(pts, j), tol);
    } catch (const std::exception&) {
      out[static_cast<std::size_t>(j)] = std::nullopt;
    }
  });
  return out;
}

std::vector<std::optional<Membership>> batch_contains_by_inequalities(const HyperCone& cone, int k,
                                                                      const PointBatch& pts, double tol,
                                                                      ExecPolicy policy) {
  std::vector<std::optional<Membership>> out(static_cast<std::size_t>(pts.cols()));
  for_each_index(pts.cols(), policy, [&](Eigen::Index j) {
    out[static_cast<std::size_t>(j)] = contains_by_inequalities(cone, k, column(pts, j), tol);
  });
  return out;
}

PointBatch shift_to_min_eigenvalue(const HyperCone& cone, const PointBatch& pts, const std::vector<double>& target,
                                   ExecPolicy policy) {
  PointBatch out = pts;
  Eigen::Map<const Eigen::VectorXd> e(cone.e_double().data(), cone.dim());
  for_each_index(pts.cols(), policy, [&](Eigen::Index j) {
    if (std::isnan(target[static_cast<std::size_t>(j)])) return;
    double m = min_eig_or_nan(cone, column(pts, j));
    if (!std::isnan(m)) out.col(j) -= (m - target[static_cast<std::size_t>(j)]) * e;
  });
  return out;
}

}  // namespace hypercone
