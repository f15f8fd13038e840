#include "hypercone/faces.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "hypercone/error.hpp"

namespace hypercone {

GeneratedFaceModel make_face_model(HyperCone cone, std::vector<RationalVector> generators, std::string label) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (static_cast<int>(generators[i].size()) != cone.dim()) throw DimensionError("generator dimension differs from cone");
    if (contains(cone, generators[i]) != Membership::In)
      throw PreconditionError("generator " + std::to_string(i) + " is not in the cone");
  }
  return GeneratedFaceModel{std::move(cone), std::move(generators), std::move(label)};
}

GeneratedFaceModel orthant_model(int n) {
  std::vector<RationalVector> gens;
  for (int i = 0; i < n; ++i) {
    RationalVector g(static_cast<std::size_t>(n), Rational(0));
    g[static_cast<std::size_t>(i)] = 1;
    gens.push_back(std::move(g));
  }
  return make_face_model(orthant(n), std::move(gens), "orthant:" + std::to_string(n));
}

namespace {

RationalVector rank_one_svec(const RationalVector& u) {
  const std::size_t n = u.size();
  std::vector<RationalVector> rows(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = u[i] * u[j];
  return svec(rows);
}

double gram_determinant(const std::vector<RationalVector>& us) {
  const int r = static_cast<int>(us.size());
  Eigen::MatrixXd g(r, r);
  std::vector<Eigen::VectorXd> v;
  for (const auto& u : us) {
    auto d = to_doubles(u);
    Eigen::VectorXd x = Eigen::Map<Eigen::VectorXd>(d.data(), static_cast<Eigen::Index>(d.size()));
    v.push_back(x.normalized());
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) g(i, j) = v[static_cast<std::size_t>(i)].dot(v[static_cast<std::size_t>(j)]);
  return g.determinant();
}

}  // namespace

GeneratedFaceModel psd_model(int n, int extras, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  auto draw = [&] {
    std::vector<double> u(static_cast<std::size_t>(n));
    RationalVector ur;
    do {
      for (double& x : u) x = gauss(rng);
      ur = dyadic_vector(u, 6);
    } while (std::all_of(ur.begin(), ur.end(), [](const Rational& q) { return sgn(q) == 0; }));
    return ur;
  };
  std::vector<RationalVector> basis;
  while (static_cast<int>(basis.size()) < n) {
    auto cand = basis;
    cand.push_back(draw());
    if (gram_determinant(cand) >= 1e-6) basis = std::move(cand);
  }
  std::vector<RationalVector> gens;
  for (const auto& u : basis) gens.push_back(rank_one_svec(u));
  for (int i = 0; i < extras; ++i) gens.push_back(rank_one_svec(draw()));
  return make_face_model(psd(n), std::move(gens), "psd:" + std::to_string(n));
}

GeneratedFaceModel soc_circle_model(const HyperCone& cone, int count, std::string label) {
  if (cone.dim() != 3) throw DimensionError("circle model needs a cone in R^3");
  std::vector<RationalVector> gens;
  for (int i = 0; i < count; ++i) {
    Rational s = Rational(i - count / 2) / 3;
    Rational den = 1 + s * s;
    gens.push_back({Rational(1), (1 - s * s) / den, 2 * s / den});
  }
  return make_face_model(cone, std::move(gens), std::move(label));
}

GeneratedFaceModel soc_sphere_model(const HyperCone& cone, int count, std::uint64_t seed, std::string label) {
  const int m = cone.dim();
  if (m < 3) throw DimensionError("sphere model needs a cone in R^m with m >= 3");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-6, 6);
  std::vector<RationalVector> gens;
  for (int i = 0; i < count; ++i) {
    // inverse stereographic projection of a rational point t in Q^{m-2}
    RationalVector t;
    Rational s = 0;
    for (int j = 0; j < m - 2; ++j) {
      t.push_back(Rational(dist(rng)) / 3);
      s += t.back() * t.back();
    }
    RationalVector g{Rational(1), (s - 1) / (s + 1)};
    for (const auto& v : t) g.push_back(2 * v / (s + 1));
    gens.push_back(std::move(g));
  }
  return make_face_model(cone, std::move(gens), std::move(label));
}

GeneratedFaceModel l1_model() {
  std::vector<RationalVector> gens{{1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 1}};
  return make_face_model(l1_cone(), std::move(gens), "l1");
}

int exact_mult(const HyperCone& cone, const RationalVector& x) {
  RootCensus c = root_census(cone.restriction(x));
  if (!c.real_rooted()) throw PreconditionError("restriction is not real-rooted");
  return c.zero;
}

int face_rank_of_points(const GeneratedFaceModel& model, const std::vector<int>& indices) {
  if (indices.empty()) throw PreconditionError("face_rank_of_points needs at least one index");
  RationalVector sum(static_cast<std::size_t>(model.cone.dim()), Rational(0));
  for (int i : indices) {
    if (i < 0 || i >= static_cast<int>(model.generators.size())) throw RangeError("generator index out of range");
    sum = add(sum, model.generators[static_cast<std::size_t>(i)]);
  }
  return exact_rank(model.cone, sum);
}

nlohmann::json FaceChain::to_json() const {
  nlohmann::json steps = nlohmann::json::array();
  for (std::size_t i = 0; i < spectra.size(); ++i)
    steps.push_back({{"pick", picks[i]}, {"rank", ranks[i + 1]}, {"spectrum", spectra[i].to_json()}});
  return {{"picks", picks}, {"ranks", ranks}, {"steps", steps}};
}

FaceChain build_chain(const GeneratedFaceModel& model, int start_index, std::uint64_t seed, bool randomized) {
  const int ng = static_cast<int>(model.generators.size());
  if (start_index < 0 || start_index >= ng) throw RangeError("start index out of range");
  const HyperCone& cone = model.cone;
  FaceChain chain;
  chain.partial_sums.emplace_back(static_cast<std::size_t>(cone.dim()), Rational(0));
  chain.ranks.push_back(0);

  auto push = [&](int idx, RationalVector sum, int r) {
    chain.picks.push_back(idx);
    chain.spectra.push_back(eigenvalues(cone, sum));
    chain.partial_sums.push_back(std::move(sum));
    chain.ranks.push_back(r);
  };

  const RationalVector& g0 = model.generators[static_cast<std::size_t>(start_index)];
  int r0 = exact_rank(cone, g0);
  if (r0 != 1) throw PreconditionError("start generator has rank " + std::to_string(r0) + ", not 1");
  push(start_index, g0, 1);

  std::vector<int> order(static_cast<std::size_t>(ng));
  std::iota(order.begin(), order.end(), 0);
  if (randomized) {
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  while (chain.ranks.back() < cone.d()) {
    const int r = chain.ranks.back();
    bool extended = false;
    for (int idx : order) {
      if (std::find(chain.picks.begin(), chain.picks.end(), idx) != chain.picks.end()) continue;
      const RationalVector& g = model.generators[static_cast<std::size_t>(idx)];
      if (exact_rank(cone, g) != 1) throw PreconditionError("generator " + std::to_string(idx) + " does not have rank 1");
      RationalVector sum = add(chain.partial_sums.back(), g);
      int rs = exact_rank(cone, sum);
      if (rs == r) continue;  // already in the current face
      if (rs != r + 1)
        throw PreconditionError("adding generator " + std::to_string(idx) + " raised the rank from " +
                                std::to_string(r) + " to " + std::to_string(rs));
      push(idx, std::move(sum), rs);
      extended = true;
      break;
    }
    if (!extended)
      throw PreconditionError("no generator raises the rank beyond " + std::to_string(r) + " (d = " +
                              std::to_string(cone.d()) + ")");
  }
  return chain;
}

CheckReport rog_check(const GeneratedFaceModel& model, double zero_tol) {
  CheckReport report;
  report.tolerances = {{"zero_tol", zero_tol}};
  for (std::size_t i = 0; i < model.generators.size(); ++i) {
    ++report.samples;
    const auto& g = model.generators[i];
    int r = exact_rank(model.cone, g);
    Spectrum s = eigenvalues(model.cone, g, zero_tol);
    if (!s.inconclusive() && !s.rank_ambiguous() && s.rank() != r) {
      report.verdict = Verdict::Inconclusive;
      report.diagnostics.push_back("float rank disagrees with exact rank for generator " + std::to_string(i));
      return report;
    }
    if (r != 1) {
      report.verdict = Verdict::FailsWithWitness;
      report.witness = g;
      report.details = {{"generator", i}, {"rank", r}, {"spectrum", s.to_json()}};
      return report;
    }
  }
  report.verdict = Verdict::Holds;
  return report;
}

std::optional<RationalVector> basis_coordinates(const std::vector<RationalVector>& basis, const RationalVector& x) {
  if (basis.empty()) throw PreconditionError("empty basis");
  const int n = static_cast<int>(x.size()), r = static_cast<int>(basis.size());
  std::vector<Rational> b(static_cast<std::size_t>(n * r));
  for (int j = 0; j < r; ++j) {
    if (static_cast<int>(basis[static_cast<std::size_t>(j)].size()) != n) throw DimensionError("basis vector dimension differs");
    for (int i = 0; i < n; ++i) b[static_cast<std::size_t>(i * r + j)] = basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  }
  return solve_exact(std::move(b), n, r, x);
}

HyperCone face_restrict(const HyperCone& cone, const RationalVector& z, const std::vector<RationalVector>& basis) {
  if (contains(cone, z) != Membership::In) throw PreconditionError("z is not in the cone");
  const int m = exact_mult(cone, z);
  auto uz = basis_coordinates(basis, z);
  if (!uz) throw PreconditionError("z is not in the span of the basis, or the basis is dependent");
  const int n = cone.dim(), r = static_cast<int>(basis.size());
  std::vector<HomoPoly> forms;
  for (int i = 0; i < n; ++i) {
    RationalVector row(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j) row[static_cast<std::size_t>(j)] = basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    forms.push_back(HomoPoly::linear_form(row));
  }
  HomoPoly q = substitute(cone.deriv(m), forms);
  if (sgn(eval(q, *uz)) <= 0) throw PreconditionError("restricted polynomial is not positive at z: wrong basis or multiplicity");
  return HyperCone(std::move(q), *uz, cone.label() + "|face", false, cone.rog());
}

}  // namespace hypercone
