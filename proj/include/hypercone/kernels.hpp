#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "hypercone/cone.hpp"

namespace hypercone {

/// Serial reference or OpenMP data-parallel evaluation; results are identical and
/// independent of the schedule because points are generated before the loop.
enum class ExecPolicy { Serial, Parallel };

/// Points stored column-wise: one point per column.
using PointBatch = Eigen::MatrixXd;

/// Gaussian points (seeded), one per column.
PointBatch gaussian_points(int dim, int count, std::uint64_t seed);

/// lambda_min of each point; NaN where the spectrum stays inconclusive.
std::vector<double> batch_min_eigenvalue(const HyperCone& cone, const PointBatch& pts,
                                         ExecPolicy policy = ExecPolicy::Parallel);

/// Membership code per point: In, Out, BoundaryAmbiguous; std::nullopt when inconclusive.
std::vector<std::optional<Membership>> batch_contains(const HyperCone& cone, const PointBatch& pts, double tol,
                                                      ExecPolicy policy = ExecPolicy::Parallel);
std::vector<std::optional<Membership>> batch_contains_by_inequalities(const HyperCone& cone, int k,
                                                                      const PointBatch& pts, double tol,
                                                                      ExecPolicy policy = ExecPolicy::Parallel);

/// Shifts each column along e so that its lambda_min becomes target[j] (columns whose
/// spectrum is inconclusive, or whose target is NaN, are left unchanged).
PointBatch shift_to_min_eigenvalue(const HyperCone& cone, const PointBatch& pts, const std::vector<double>& target,
                                   ExecPolicy policy = ExecPolicy::Parallel);

}  // namespace hypercone
