#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypercone/cone.hpp"
#include "hypercone/gallery.hpp"
#include "hypercone/report.hpp"

namespace hypercone {

/// A cone together with explicit extreme-ray representatives.
struct GeneratedFaceModel {
  HyperCone cone;
  std::vector<RationalVector> generators;
  std::string label;
};

/// Checks exactly that every generator lies in the cone.
GeneratedFaceModel make_face_model(HyperCone cone, std::vector<RationalVector> generators, std::string label);

/// Coordinate vectors of the orthant.
GeneratedFaceModel orthant_model(int n);
/// svec(u u^T) for a random basis {u_i} (Gram-determinant rejection) plus `extras`
/// further random u; the u are rounded to a coarse dyadic grid so the generators are exact.
GeneratedFaceModel psd_model(int n, int extras, std::uint64_t seed);
/// Rational boundary rays (1, (1-s^2)/(1+s^2), 2s/(1+s^2)) of SOC in R^3 for the given cone.
GeneratedFaceModel soc_circle_model(const HyperCone& cone, int count, std::string label);
/// The four extreme rays (+-1, 0, 1), (0, +-1, 1) of the l1 cone.
/// Rays (1, u) with u rational on the unit sphere, for a second-order cone in R^m.
GeneratedFaceModel soc_sphere_model(const HyperCone& cone, int count, std::uint64_t seed, std::string label);
GeneratedFaceModel l1_model();

/// Exact multiplicity of the eigenvalue 0 (Sturm census of the exact restriction).
int exact_mult(const HyperCone& cone, const RationalVector& x);
inline int exact_rank(const HyperCone& cone, const RationalVector& x) { return cone.d() - exact_mult(cone, x); }

/// Rank of the sum of the selected generators, i.e. of the minimal face containing them.
int face_rank_of_points(const GeneratedFaceModel& model, const std::vector<int>& indices);

struct FaceChain {
  std::vector<int> picks;
  std::vector<RationalVector> partial_sums;  ///< partial_sums[0] = 0
  std::vector<int> ranks;                    ///< ranks[i] = rank(partial_sums[i])
  std::vector<Spectrum> spectra;             ///< float spectra of partial_sums[1..]

  nlohmann::json to_json() const;
};

/// Greedy chain: extends by the first candidate raising the rank by exactly one, up to d.
/// Candidates are scanned by index, or in a seeded shuffle when `randomized`.
/// Throws PreconditionError with a diagnostic when the chain cannot be extended.
FaceChain build_chain(const GeneratedFaceModel& model, int start_index, std::uint64_t seed, bool randomized = false);

/// Holds iff every generator has rank 1; otherwise the first offending generator.
CheckReport rog_check(const GeneratedFaceModel& model, double zero_tol = kZeroTol);

/// Cone of q = (D_e^m p) o B along the coordinates of z in the basis, m = mult(z).
/// Throws PreconditionError when z is not in the span of the basis, the basis is
/// dependent, or q(z) <= 0.
HyperCone face_restrict(const HyperCone& cone, const RationalVector& z, const std::vector<RationalVector>& basis);

/// Coordinates of x in the basis (exact), or nullopt when x is outside its span.
std::optional<RationalVector> basis_coordinates(const std::vector<RationalVector>& basis, const RationalVector& x);

}  // namespace hypercone
