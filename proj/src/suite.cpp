#include "hypercone/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>

#include <Eigen/Dense>

#include "hypercone/autgroup.hpp"
#include "hypercone/error.hpp"
#include "hypercone/faces.hpp"
#include "hypercone/gallery.hpp"
#include "hypercone/kernels.hpp"

namespace hypercone {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

nlohmann::json CheckResult::to_json() const {
  nlohmann::json j = {{"name", name}, {"title", title}, {"status", hypercone::to_string(status)},
                      {"time_limit_s", time_limit}, {"counts", counts}};
  if (!witness.is_null()) j["witness"] = witness;
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

bool SuiteResult::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

nlohmann::json SuiteResult::to_json() const {
  nlohmann::json j = {{"seed", seed}, {"all_passed", all_passed()}, {"checks", nlohmann::json::array()}};
  for (const auto& c : checks) j["checks"].push_back(c.to_json());
  return j;
}

namespace {

using Rng = std::mt19937_64;

struct Context {
  std::uint64_t seed = 0;
  std::vector<CheckReport> candidates;  // structured automorphism candidates
  bool candidates_ready = false;
};

/// Accumulates pass/fail bookkeeping; the first failure keeps its payload.
struct Tally {
  CheckResult& r;
  bool ok = true;

  void fail(const std::string& what, nlohmann::json payload) {
    if (ok) r.witness = {{"failure", what}, {"payload", std::move(payload)}};
    ok = false;
    r.counts["failures"] = r.counts.value("failures", 0) + 1;
  }
  void expect(bool cond, const std::string& what, const std::function<nlohmann::json()>& payload) {
    if (!cond) fail(what, payload());
  }
  void count(const std::string& key, int by = 1) { r.counts[key] = r.counts.value(key, 0) + by; }
};

Rational small_positive(Rng& rng, int hi) {
  std::uniform_int_distribution<int> d(1, hi);
  const int num = d(rng);
  return Rational(num) / d(rng);
}

std::vector<int> random_perm(Rng& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

Eigen::MatrixXd gaussian_matrix(Rng& rng, int rows, int cols) {
  std::normal_distribution<double> g;
  Eigen::MatrixXd m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = g(rng);
  return m;
}

LinearMap dyadic_map(const Eigen::MatrixXd& m, int bits) {
  std::vector<Rational> entries;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) entries.push_back(dyadic(m(i, j), bits));
  return LinearMap(static_cast<int>(m.rows()), std::move(entries));
}

nlohmann::json map_json(const LinearMap& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < a.dim(); ++i) rows.push_back(vector_json(a.row(i)));
  return rows;
}

/// Witness re-verification through the inequality description, independent of the eigenvalue route.
bool membership_witness_verified(const HyperCone& base, int k, const LinearMap& a, const CheckReport& report) {
  const auto& mw = report.details.value("membership_witness", nlohmann::json());
  if (mw.is_null() || !report.witness) return false;
  const RationalVector& x = *report.witness;
  const LinearMap map = mw.at("map") == "inverse" ? a.inverse() : a;
  const HyperCone derived = derivative_cone(base, k).as_cone();
  const Rational margin(1, 1000000);
  return contains_by_inequalities(base, k, x) == Membership::In &&
         contains_by_inequalities(base, k, map.apply(x)) == Membership::Out &&
         min_eigenvalue_at_least(derived, x, margin) && min_eigenvalue_at_most(derived, map.apply(x), margin);
}

// ---------------------------------------------------------------------------

void c01(CheckResult& r, Context&) {
  Tally t{r};
  for (int n = 3; n <= 8; ++n) {
    HyperCone cone = orthant(n);
    RationalVector ones(static_cast<std::size_t>(n), Rational(1));
    for (int k = 0; k <= n; ++k) {
      HomoPoly lhs = dir_deriv(cone.p(), ones, k);
      HomoPoly rhs = factorial(k) * elementary_symmetric(n, n - k);
      t.expect(lhs == rhs, "derivative differs from k! s_{n-k}",
               [&] { return nlohmann::json{{"n", n}, {"k", k}, {"lhs", lhs.to_string()}}; });
      t.count("identities");
    }
  }
  r.status = t.ok ? CheckStatus::Pass : CheckStatus::Fail;
}

void c02(CheckResult& r, Context&) {
  Tally t{r};
  HyperCone l1 = l1_cone();
  auto x = [](int i) { return HomoPoly::variable(3, i); };
  HomoPoly q = x(2) * x(2) - x(0) * x(0) - x(1) * x(1);
  HomoPoly d1 = Rational(4) * (x(2) * q);
  HomoPoly d2 = Rational(4) * (Rational(3) * (x(2) * x(2)) - x(0) * x(0) - x(1) * x(1));
  t.expect(l1.deriv(1) == d1, "first derivative", [&] { return nlohmann::json(l1.deriv(1).to_string()); });
  t.expect(l1.deriv(2) == d2, "second derivative", [&] { return nlohmann::json(l1.deriv(2).to_string()); });
  t.count("identities", 2);
  r.counts["D_e p"] = l1.deriv(1).to_string();
  r.counts["D_e^2 p"] = l1.deriv(2).to_string();
  r.status = t.ok ? CheckStatus::Pass : CheckStatus::Fail;
}

void c03(CheckResult& r, Context& ctx) {
  Tally t{r};
  Rng rng(ctx.seed ^ 0x0303);
  for (int n = 4; n <= 6; ++n) {
    for (int k = 1; k <= n - 3; ++k) {
      const std::string where = "n=" + std::to_string(n) + ",k=" + std::to_string(k);
      for (int s = 0; s < 20; ++s) {
        Rational alpha = small_positive(rng, 9);
        LinearMap a = LinearMap::permutation(random_perm(rng, n)).scaled(alpha);
        CheckReport rep = classify_orthant_deriv(n, k, a, {20000, rng(), 1e-6});
        Rational expected = 1;
        for (int i = 0; i < n - k; ++i) expected /= alpha;
        t.expect(rep.holds() && rep.kappa && *rep.kappa == expected && !rep.theorem_violation,
                 "scaled permutation not certified (" + where + ")",
                 [&] { return nlohmann::json{{"map", map_json(a)}, {"report", rep.to_json()}}; });
        t.count("scaled_permutations");
        ctx.candidates.push_back(std::move(rep));
      }
      for (int s = 0; s < 100; ++s) {
        RationalVector c;
        do {
          c.clear();
          for (int i = 0; i < n; ++i) c.push_back(small_positive(rng, 6));
        } while (std::all_of(c.begin(), c.end(), [&](const Rational& v) { return v == c[0]; }));
        LinearMap a = LinearMap::diagonal(c) * LinearMap::permutation(random_perm(rng, n));
        CheckReport rep = classify_orthant_deriv(n, k, a, {20000, rng(), 1e-6});
        const bool kappa_refuted =
            rep.details.at("derived").at("verdict") == "FailsWithWitness" && rep.details.contains("kappa_witness");
        const bool witnessed = rep.fails() && membership_witness_verified(orthant(n), k, a, rep);
        t.expect(kappa_refuted && witnessed && !rep.theorem_violation, "diag(c)P not refuted (" + where + ")",
                 [&] { return nlohmann::json{{"map", map_json(a)}, {"report", rep.to_json()}}; });
        t.count("diagonal_refutations");
        ctx.candidates.push_back(std::move(rep));
      }
    }
  }
  r.status = t.ok ? CheckStatus::Pass : CheckStatus::Fail;
}

void c04(CheckResult& r, Context& ctx) {
  Tally t{r};
  Rng rng(ctx.seed ^ 0x0404);
  const int n = 4, k = 1;
  for (int s = 0; s < 20; ++s) {
    std::vector<int> perm = random_perm(rng, n);
    RationalVector signs;
    for (int i = 0; i < n; ++i) signs.push_back(rng() & 1 ? 1 : -1);
    LinearMap q = LinearMap::diagonal(signs) * LinearMap::permutation(perm);
    CheckReport rep = classify_psd_deriv(n, k, q);
    t.expect(rep.holds() && rep.kappa && *rep.kappa == 1 && !rep.theorem_violation,
             "signed permutation not certified", [&] { return nlohmann::json{{"Q", map_json(q)}, {"report", rep.to_json()}}; });
    t.count("signed_permutations");
    ctx.candidates.push_back(std::move(rep));
  }
  for (int s = 0; s < 20; ++s) {
    Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(gaussian_matrix(rng, n, n)).householderQ();
    CheckReport rep = classify_psd_deriv_float(n, k, q, {1000, rng(), 1e-8});
    t.expect(rep.holds() && !rep.theorem_violation, "float orthogonal Q not preserved", [&] {
      return nlohmann::json{{"Q", std::vector<double>(q.data(), q.data() + q.size())}, {"report", rep.to_json()}};
    });
    t.count("float_orthogonal");
    ctx.candidates.push_back(std::move(rep));
  }
  int tried = 0;
  for (int s = 0; s < 20;) {
    ++tried;
    LinearMap m = dyadic_map(gaussian_matrix(rng, n, n), 3);
    if (!m.invertible() || orthogonal_scale(m)) continue;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m.as_double());
    const auto& sv = svd.singularValues();
    if (sv(0) / sv(n - 1) < 1.5) continue;
    ++s;
    CheckReport rep = classify_psd_deriv(n, k, m);
    const bool witnessed = rep.fails() && membership_witness_verified(psd(n), k, lyapunov_like_map(m), rep);
    t.expect(witnessed && !rep.theorem_violation, "non-orthogonal M not refuted",
             [&] { return nlohmann::json{{"M", map_json(m)}, {"report", rep.to_json()}}; });
    CheckReport proj = spectral_aut_projection(k, m.as_double(), rep, {1000, rng(), 1e-8});
    t.expect(!proj.theorem_violation, "singular-value projection inconsistent",
             [&] { return nlohmann::json{{"M", map_json(m)}, {"report", proj.to_json()}}; });
    t.count("nonorthogonal_refutations");
    ctx.candidates.push_back(std::move(rep));
  }
  r.counts["nonorthogonal_draws"] = tried;
  r.status = t.ok ? CheckStatus::Pass : CheckStatus::Fail;
  ctx.candidates_ready = true;
}

void c05(CheckResult& r, Context& ctx) {
  Tally t{r};
  if (!ctx.candidates_ready) {
    CheckResult scratch3, scratch4;
    ctx.candidates.clear();
    c03(scratch3, ctx);
    c04(scratch4, ctx);
    r.notes.push_back("candidates regenerated for the audit");
  }
  for (std::size_t i = 0; i < ctx.candidates.size(); ++i) {
    const CheckReport& rep = ctx.candidates[i];
    const auto& det = rep.details;
    const bool predicted = det.at("predicted_holds").get<bool>();
    const bool conclusive = rep.verdict != Verdict::Inconclusive;
    t.expect(conclusive && predicted == rep.holds() && det.at("consistent").get<bool>() && !rep.theorem_violation,
             "equivalence broken for candidate " + std::to_string(i), [&] { return rep.to_json(); });
    t.count("candidates");
    if (rep.theorem_violation) t.count("theorem_violations");
  }
  if (!r.counts.contains("theorem_violations")) r.counts["theorem_violations"] = 0;
  t.expect(!ctx.candidates.empty(), "no candidates", [] { return nlohmann::json(); });
  r.status = t.ok ? CheckStatus::Pass : CheckStatus::Fail;
}

// Rational interior points: Gaussian draws shifted along e to a positive minimum eigenvalue.
std::vector<RationalVector> interior_points(const HyperCone& cone, int count, Rng& rng) {
  std::vector<RationalVector> out;
  std::uniform_real_distribution<double> u(0.2, 1.5);
  while (static_cast<int>(out.size()) < count) {
    const int want = count - static_cast<int>(out.size());
    PointBatch raw = gaussian_points(cone.dim(), want, rng());
    std::vector<double> target(static_cast<std::size_t>(want));
    for (auto& v : target) v = u(rng);
    PointBatch x = shift_to_min_eigenvalue(cone, raw, target);
    for (int j = 0; j < want; ++j) {
      if (std::isnan(target[static_cast<std::size_t>(j)]) || !x.col(j).allFinite()) continue;
      std::vector<double> col(x.col(j).data(), x.col(j).data() + x.rows());
      RationalVector xr = dyadic_vector(col, 12);
      if (in_interior(cone, xr)) out.push_back(std::move(xr));
    }
  }
  return out;
}

std::vector<std::pair<std::string, HyperCone>> garding_gallery() {
  return {{"orthant:3", orthant(3)},
          {"orthant:5", orthant(5)},
          {"orthant:5:k=1", orthant_deriv(5, 1).as_cone()},
          {"psd:3", psd(3)},
          {"psd:4", psd(4)},
          {"psd:4:k=1", psd_deriv(4, 1).as_cone()},
          {"soc:3", soc(2)},
          {"soc:5", soc(4)},
          {"l1", l1_cone()},
          {"spectrahedral:A1", soc_arrow_representation().cone},
          {"spectrahedral:A2", soc_2x2_representation().cone}};
}

void c06(CheckResult& r, Context& ctx) {
  Tally t{r};
  Rng rng(ctx.seed ^ 0x0606);
  double worst_random = 1e300, worst_prop = 0, worst_nonprop = 1e300;
  for (const auto& [id, cone] : garding_gallery()) {
    const int d = cone.d();
    auto pool = interior_points(cone, 1000 * d, rng);
    for (int s = 0; s < 1000; ++s) {
      std::vector<RationalVector> xs(pool.begin() + s * d, pool.begin() + (s + 1) * d);
      CheckReport rep = garding_check(cone, xs);
      double g = rep.details.at("normalized_gap").get<double>();
      worst_random = std::min(worst_random, g);
      t.expect(g >= -1e-9, "negative gap on " + id, [&] { return rep.to_json(); });
      t.count("random_tuples");
    }
    for (int s = 0; s < 100; ++s) {
      std::vector<RationalVector> xs;
      for (int i = 0; i < d; ++i) xs.push_back(scaled(pool[static_cast<std::size_t>(s)], small_positive(rng, 7)));
      CheckReport rep = garding_check(cone, xs);
      double g = rep.details.at("normalized_gap").get<double>();
      worst_prop = std::max(worst_prop, std::abs(g));
      t.expect(std::abs(g) <= 1e-9 && rep.details.at("proportional").get<bool>(), "proportional tuple gap on " + id,
               [&] { return rep.to_json(); });
      t.count("proportional_tuples");
    }
    for (int s = 0; s < 100; ++s) {
      const RationalVector& x = pool[static_cast<std::size_t>(100 + s)];
      std::vector<RationalVector> xs{x};
      for (int i = 1; i < d; ++i) xs.push_back(add(x, pool[static_cast<std::size_t>(200 + s * d + i)]));
      CheckReport rep = garding_check(cone, xs);
      double g = rep.details.at("normalized_gap").get<double>();
      worst_nonprop = std::min(worst_nonprop, g);
      t.expect(g >= 1e-6 && !rep.details.at("proportional").get<bool>(), "non-proportional tuple gap on " + id,
               [&] { return rep.to_json(); });
      t.count("nonproportional_tuples");
    }
    t.count("cones");
  }
  r.counts["min_random_gap"] = worst_random;
  r.counts["max_proportional_gap"] = worst_prop;
  r.counts["min_nonproportional_gap"] = worst_nonprop;
  r.status = t.ok ? CheckStatus::Pass : CheckStatus::Fail;
}

void c07(CheckResult& r, Context& ctx) {
  Tally t{r};
  std::vector<GeneratedFaceModel> models{orthant_model(6), psd_model(4, 4, ctx.seed)};
  for (const auto& model : models) {
    for (bool randomized : {false, true}) {
      FaceChain chain = build_chain(model, 0, ctx.seed, randomized);
      FaceChain again = build_chain(model, 0, ctx.seed, randomized);
      const int d = model.cone.d();
      bool ok = static_cast<int>(chain.ranks.size()) == d + 1;
      for (int i = 0; ok && i <= d; ++i) ok = chain.ranks[static_cast<std::size_t>(i)] == i;
      for (int i = 1; ok && i <= d; ++i)
        ok = exact_rank(model.cone, chain.partial_sums[static_cast<std::size_t>(i)]) == i;
      t.expect(ok, "chain ranks on " + model.label, [&] { return chain.to_json(); });
      t.expect(chain.picks == again.picks, "chain not deterministic on " + model.label,
               [&] { return nlohmann::json{{"first", chain.picks}, {"second", again.picks}}; });
      t.count("chains");
      r.counts[model.label + (randomized ? ":randomized" : ":lowest_index")] = chain.picks;
    }
  }
  r.status = t.ok ? CheckStatus::Pass : CheckStatus::Fail;
}

void c08(CheckResult& r, Context& ctx) {
  Tally t{r};
  auto expect_verdict = [&](const GeneratedFaceModel& m, Verdict want) {
    CheckReport rep = rog_check(m);
    t.expect(rep.verdict == want, "ROG verdict on " + m.label, [&] { return rep.to_json(); });
    r.counts[m.label] = to_string(rep.verdict);
    return rep;
  };
  expect_verdict(orthant_model(4), Verdict::Holds);
  expect_verdict(psd_model(3, 3, ctx.seed), Verdict::Holds);
  expect_verdict(soc_circle_model(soc(2), 8, "soc:3"), Verdict::Holds);

  const int nv = 4;
  auto v = [&](int i) { return HomoPoly::variable(nv, i); };
  HyperCone tilde(v(0) * v(0) * v(1) * v(2), RationalVector(4, Rational(1)), "x1^2 x2 x3");
  std::vector<RationalVector> gens;
  for (int i = 0; i < nv; ++i) {
    RationalVector g(4, Rational(0));
    g[static_cast<std::size_t>(i)] = 1;
    gens.push_back(g);
  }
  CheckReport rep = expect_verdict(make_face_model(tilde, gens, "x1^2 x2 x3"), Verdict::FailsWithWitness);
  RationalVector e1{1, 0, 0, 0};
  t.expect(rep.witness && *rep.witness == e1 && exact_rank(tilde, e1) == 2, "tilde witness is not e1 of rank 2",
           [&] { return rep.to_json(); });
  Spectrum sp = eigenvalues(tilde, e1);
  r.counts["tilde_e1_eigenvalues"] = sp.eigenvalues;

  GeneratedFaceModel l1 = l1_model();
  for (const auto& g : l1.generators) {
    t.expect(exact_rank(l1.cone, g) == 2, "l1 extreme ray rank", [&] { return vector_json(g); });
    t.count("l1_rays_rank2");
  }
  expect_verdict(soc_circle_model(soc_arrow_representation().cone, 8, "spectrahedral:A1"), Verdict::FailsWithWitness);
  expect_verdict(soc_circle_model(soc_2x2_representation().cone, 8, "spectrahedral:A2"), Verdict::Holds);
  t.expect(orthant(4).rog() && psd(3).rog() && soc(2).rog() && !l1_cone().rog(), "gallery ROG metadata",
           [] { return nlohmann::json(); });
  r.status = t.ok ? CheckStatus::Pass : CheckStatus::Fail;
}

void c09(CheckResult& r, Context& ctx) {
  Tally t{r};
  std::vector<HyperCone> cones;
  for (int n = 2; n <= 6; ++n) cones.push_back(orthant(n));
  cones.push_back(psd(4));
  for (const auto& cone : cones) {
    for (int k = 1; k <= cone.d() - 1; ++k) {
      CheckReport rep = strict_containment_witness(cone, k, 20000, ctx.seed + static_cast<std::uint64_t>(k));
      bool ok = rep.holds() && rep.witness.has_value();
      if (ok) {
        // x lies in the k-th relaxation with margin and outside the (k-1)-th with margin
        const Rational m(1, 1000000);
        const RationalVector& x = *rep.witness;
        ok = min_eigenvalue_at_least(derivative_cone(cone, k).as_cone(), x, m) &&
             min_eigenvalue_at_most(derivative_cone(cone, k - 1).as_cone(), x, m) &&
             contains_by_inequalities(cone, k, x) == Membership::In &&
             contains_by_inequalities(cone, k - 1, x) == Membership::Out;
      }
      t.expect(ok, "no strict nesting witness for " + cone.label() + " k=" + std::to_string(k),
               [&] { return rep.to_json(); });
      t.count("witnesses");
    }
  }
  r.status = t.ok ? CheckStatus::Pass : CheckStatus::Fail;
}

void c10(CheckResult& r, Context& ctx) {
  Tally t{r};
  Rng rng(ctx.seed ^ 0x1010);
  auto run = [&](const HyperCone& cone, GalleryKind kind, const LinearMap& a, const std::string& what) {
    CheckReport cert = check_automorphism(cone, a, rng());
    t.expect(cert.holds(), what + " not certified", [&] { return nlohmann::json{{"map", map_json(a)}}; });
    if (!cert.holds()) return;
    CheckReport pf = perron_eigenvector(cone, a, rng());
    bool ok = pf.holds() && pf.witness && contains(cone, to_doubles(*pf.witness), kZeroTol) != Membership::Out;
    if (ok) {
      CheckReport fix = min_face_fix_check(kind, a, *pf.witness);
      ok = fix.holds();
      if (!ok) pf = fix;
    }
    if (pf.theorem_violation) t.count("theorem_violations");
    t.expect(ok && !pf.theorem_violation, what + " Perron eigenvector",
             [&] { return nlohmann::json{{"map", map_json(a)}, {"report", pf.to_json()}}; });
    t.count(what);
  };
  HyperCone o4 = orthant(4);
  for (int s = 0; s < 50; ++s) {
    RationalVector dg;
    for (int i = 0; i < 4; ++i) dg.push_back(small_positive(rng, 5));
    run(o4, GalleryKind::Orthant, LinearMap::diagonal(dg) * LinearMap::permutation(random_perm(rng, 4)), "orthant:4");
  }
  HyperCone p3 = psd(3);
  for (int s = 0; s < 50;) {
    LinearMap m = dyadic_map(gaussian_matrix(rng, 3, 3), 2);
    if (!m.invertible()) continue;
    ++s;
    run(p3, GalleryKind::PSD, lyapunov_like_map(m), "psd:3");
  }
  if (!r.counts.contains("theorem_violations")) r.counts["theorem_violations"] = 0;
  r.status = t.ok ? CheckStatus::Pass : CheckStatus::Fail;
}

void c11(CheckResult& r, Context& ctx) {
  Tally t{r};
  const std::vector<double> grid{0.1, -0.1, 1.0, -1.0};
  FloatTierOptions opts{1000, ctx.seed, kZeroTol};
  auto probe = [&](const HyperCone& cone, const Eigen::MatrixXd& l, bool want_hold, const std::string& what) {
    opts.seed += 1;
    CheckReport rep = lie_probe(cone, l, grid, opts);
    const bool ok = want_hold ? rep.holds() : rep.fails() && rep.witness.has_value();
    t.expect(ok, what, [&] { return rep.to_json(); });
    t.count(cone.label() + (want_hold ? ":passing_generators" : ":refuted_generators"));
  };
  HyperCone p41 = psd_deriv(4, 1).as_cone();
  probe(p41, Eigen::MatrixXd::Identity(10, 10), true, "psd:4:k=1 identity flow");
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      Eigen::MatrixXd w = Eigen::MatrixXd::Zero(4, 4);
      w(i, j) = 1;
      w(j, i) = -1;
      probe(p41, lyapunov_generator(w), true, "psd:4:k=1 skew flow");
      w(j, i) = 1;
      probe(p41, lyapunov_generator(w), false, "psd:4:k=1 symmetric flow");
    }
  HyperCone o41 = orthant_deriv(4, 1).as_cone();
  probe(o41, Eigen::MatrixXd::Identity(4, 4), true, "orthant:4:k=1 identity flow");
  for (int i = 0; i < 3; ++i) {
    Eigen::VectorXd dg = Eigen::VectorXd::Zero(4);
    dg(i) = 1;
    dg(i + 1) = -1;
    probe(o41, dg.asDiagonal().toDenseMatrix(), false, "orthant:4:k=1 traceless diagonal flow");
  }
  r.status = t.ok ? CheckStatus::Pass : CheckStatus::Fail;
}

struct RouteCase {
  std::string id;
  HyperCone base;
};

std::vector<RouteCase> route_gallery() {
  return {{"orthant:3", orthant(3)}, {"orthant:4", orthant(4)}, {"orthant:6", orthant(6)},
          {"psd:2", psd(2)},         {"psd:3", psd(3)},         {"psd:4", psd(4)},
          {"soc:3", soc(2)},         {"soc:4", soc(3)},         {"l1", l1_cone()},
          {"spectrahedral:A1", soc_arrow_representation().cone},
          {"spectrahedral:A2", soc_2x2_representation().cone}};
}

// Half plain Gaussian points, half pushed along e so that both sides of the boundary are exercised.
PointBatch route_points(const HyperCone& cone, int count, Rng& rng) {
  PointBatch x = gaussian_points(cone.dim(), count, rng());
  Eigen::Map<const Eigen::VectorXd> e(cone.e_double().data(), cone.dim());
  std::uniform_real_distribution<double> u(0.0, 3.0);
  for (int j = count / 2; j < count; ++j) x.col(j) += u(rng) * x.col(j).norm() / e.norm() * e;
  return x;
}

void c12(CheckResult& r, Context& ctx) {
  Tally t{r};
  Rng rng(ctx.seed ^ 0x1212);
  const int count = 10000;
  for (const auto& rc : route_gallery()) {
    for (int k = 0; k <= rc.base.d() - 1; ++k) {
      HyperCone derived = derivative_cone(rc.base, k).as_cone();
      PointBatch x = route_points(rc.base, count, rng);
      auto eig = batch_contains(derived, x, kZeroTol);
      auto ineq = batch_contains_by_inequalities(rc.base, k, x, kZeroTol);
      int compared = 0, disagree = 0, in = 0;
      for (int j = 0; j < count; ++j) {
        const auto& a = eig[static_cast<std::size_t>(j)];
        const auto& b = ineq[static_cast<std::size_t>(j)];
        if (!a || !b || *a == Membership::BoundaryAmbiguous || *b == Membership::BoundaryAmbiguous) continue;
        ++compared;
        if (*a == Membership::In) ++in;
        if (*a != *b) {
          ++disagree;
          t.fail("route disagreement on " + rc.id + " k=" + std::to_string(k),
                 {{"x", std::vector<double>(x.col(j).data(), x.col(j).data() + x.rows())},
                  {"eigenvalue_route", to_string(*a)},
                  {"inequality_route", to_string(*b)}});
        }
      }
      const std::string key = rc.id + ":k=" + std::to_string(k);
      r.counts["compared"][key] = compared;
      r.counts["inside"][key] = in;
      r.counts["disagreements"] = r.counts.value("disagreements", 0) + disagree;
      t.expect(compared >= count * 9 / 10, "too many ambiguous points on " + key,
               [&] { return nlohmann::json(compared); });
    }
  }
  // l1 first relaxation against SOC(3) in the (x3, x1, x2) identification
  {
    HyperCone l1d = derivative_cone(l1_cone(), 1).as_cone();
    HyperCone s = soc(2);
    PointBatch x = route_points(l1_cone(), count, rng);
    PointBatch y(3, count);
    for (int j = 0; j < count; ++j) {
      std::vector<double> col(x.col(j).data(), x.col(j).data() + 3);
      auto m = l1_to_soc_coordinates(col);
      for (int i = 0; i < 3; ++i) y(i, j) = m[static_cast<std::size_t>(i)];
    }
    auto a = batch_contains(l1d, x, kZeroTol);
    auto b = batch_contains(s, y, kZeroTol);
    int compared = 0, disagree = 0;
    for (int j = 0; j < count; ++j) {
      const auto& u = a[static_cast<std::size_t>(j)];
      const auto& v = b[static_cast<std::size_t>(j)];
      if (!u || !v || *u == Membership::BoundaryAmbiguous || *v == Membership::BoundaryAmbiguous) continue;
      ++compared;
      if (*u != *v) {
        ++disagree;
        t.fail("l1 relaxation differs from SOC(3)",
               {{"x", std::vector<double>(x.col(j).data(), x.col(j).data() + 3)}});
      }
    }
    r.counts["compared"]["l1:k=1~soc:3"] = compared;
    r.counts["disagreements"] = r.counts.value("disagreements", 0) + disagree;
  }
  r.status = t.ok ? CheckStatus::Pass : CheckStatus::Fail;
}

Eigen::MatrixXd random_symmetric(Rng& rng, int n) {
  Eigen::MatrixXd a = gaussian_matrix(rng, n, n);
  return (0.5 * (a + a.transpose())).eval();
}

void c13(CheckResult& r, Context& ctx) {
  Tally t{r};
  Rng rng(ctx.seed ^ 0x1313);
  double worst = 0;
  for (int n = 1; n <= 4; ++n) {
    HyperCone cone = psd(n);
    for (int s = 0; s < 1000; ++s) {
      Eigen::MatrixXd x = random_symmetric(rng, n);
      Spectrum sp = eigenvalues(cone, svec(x));
      Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(x).eigenvalues().reverse();
      double err = 0;
      for (int i = 0; i < n; ++i) err = std::max(err, std::abs(sp.eigenvalues[static_cast<std::size_t>(i)] - ev(i)));
      worst = std::max(worst, err);
      t.expect(!sp.inconclusive() && err <= 1e-8, "hyperbolic and matrix eigenvalues differ",
               [&] { return nlohmann::json{{"n", n}, {"svec", svec(x)}, {"error", err}}; });
      t.count("eigenvalue_agreements");
    }
    for (int k = 1; k <= n - 1; ++k) {
      DerivedCone dc = psd_deriv(n, k);
      int compared = 0;
      for (int s = 0; s < 1000; ++s) {
        Eigen::MatrixXd x = random_symmetric(rng, n);
        x += std::abs(std::normal_distribution<double>(0.5, 1.0)(rng)) * Eigen::MatrixXd::Identity(n, n);
        Membership a = psd_deriv_member(n, k, x);
        Membership b = contains(dc, svec(x));
        if (a == Membership::BoundaryAmbiguous || b == Membership::BoundaryAmbiguous) continue;
        ++compared;
        t.expect(a == b, "spectral and symbolic relaxation membership differ", [&] {
          return nlohmann::json{{"n", n}, {"k", k}, {"svec", svec(x)}, {"spectral", to_string(a)}, {"symbolic", to_string(b)}};
        });
      }
      t.count("spectral_membership_agreements", compared);
    }
  }
  r.counts["max_eigenvalue_error"] = worst;

  // rank pairing on random nondegenerate 3x3 slices through the identity
  int pairs = 0, deficient = 0, slices = 0;
  while (slices < 10) {
    std::vector<LinearMap> as{LinearMap::identity(3)};
    for (int i = 0; i < 3; ++i) as.push_back(dyadic_map(random_symmetric(rng, 3), 3));
    RationalVector xbar{1, 0, 0, 0};
    std::optional<Spectrahedral> sp;
    try {
      sp = spectrahedral(as, xbar, "slice");
    } catch (const Error&) {
      continue;
    }
    ++slices;
    PointBatch raw = gaussian_points(4, 100, rng());
    std::vector<double> target(100);
    for (int j = 0; j < 100; ++j) target[static_cast<std::size_t>(j)] = j % 2 ? 0.0 : 0.5;
    PointBatch x = shift_to_min_eigenvalue(sp->cone, raw, target);
    for (int j = 0; j < 100; ++j) {
      if (std::isnan(target[static_cast<std::size_t>(j)])) continue;
      std::vector<double> col(x.col(j).data(), x.col(j).data() + 4);
      Spectrum s = robust_eigenvalues(sp->cone, col);
      if (s.inconclusive() || s.rank_ambiguous()) continue;
      Eigen::MatrixXd m = sp->matrix_at(col);
      const double scale = std::max(1.0, m.norm());
      const int mr = symmetric_matrix_rank(m / scale);
      ++pairs;
      if (mr < 3) ++deficient;
      t.expect(s.rank() == mr, "hyperbolic rank differs from matrix rank",
               [&] { return nlohmann::json{{"x", col}, {"hyperbolic", s.rank()}, {"matrix", mr}}; });
    }
  }
  r.counts["rank_pairs"] = pairs;
  r.counts["rank_deficient_pairs"] = deficient;
  t.expect(pairs >= 900, "too few conclusive rank pairs", [&] { return nlohmann::json(pairs); });
  r.status = t.ok ? CheckStatus::Pass : CheckStatus::Fail;
}

struct CheckDef {
  const char* name;
  const char* title;
  double limit;
  void (*fn)(CheckResult&, Context&);
};

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs{
      {"c01_orthant_derivative_identity", "derivatives of x1...xn equal k! s_{n-k}", 1, c01},
      {"c02_l1_derivatives", "l1-cone derivatives", 1, c02},
      {"c03_orthant_relaxation_automorphisms", "automorphisms of orthant relaxations", 60, c03},
      {"c04_psd_relaxation_automorphisms", "automorphisms of PSD relaxations", 120, c04},
      {"c05_equivalence_audit", "base-Aut and stabilizer versus derived-Aut", 180, c05},
      {"c06_garding", "Garding inequality and equality cases", 30, c06},
      {"c07_face_chains", "rank chains through faces", 10, c07},
      {"c08_rog_flags", "rank-one generation flags", 5, c08},
      {"c09_strict_nesting", "strict nesting of relaxations", 30, c09},
      {"c10_perron_frobenius", "Perron eigenvectors fix their faces", 30, c10},
      {"c11_lyapunov_support", "Lie algebra probes", 60, c11},
      {"c12_route_equivalence", "eigenvalue versus inequality membership", 60, c12},
      {"c13_spectral_agreement", "spectral cones and rank pairing", 30, c13},
  };
  return defs;
}

}  // namespace

std::vector<std::string> suite_check_names() {
  std::vector<std::string> names;
  for (const auto& d : registry()) names.emplace_back(d.name);
  return names;
}

SuiteResult run_suite(const SuiteOptions& opts) {
  using clock = std::chrono::steady_clock;
  std::vector<const CheckDef*> selected;
  for (const auto& d : registry())
    if (opts.filter.empty() || std::string(d.name).find(opts.filter) != std::string::npos) selected.push_back(&d);
  if (selected.empty()) throw ParseError("suite filter '" + opts.filter + "' matches no check");

  SuiteResult result;
  result.seed = opts.seed;
  Context ctx;
  ctx.seed = opts.seed;
  const auto start = clock::now();
  for (const CheckDef* d : selected) {
    CheckResult r;
    r.name = d->name;
    r.title = d->title;
    r.time_limit = d->limit;
    const auto t0 = clock::now();
    try {
      d->fn(r, ctx);
    } catch (const std::exception& ex) {
      r.status = CheckStatus::Fail;
      r.witness = {{"failure", "exception"}, {"payload", ex.what()}};
    }
    r.seconds = std::chrono::duration<double>(clock::now() - t0).count();
    if (r.seconds >= r.time_limit) {
      r.status = CheckStatus::Fail;
      r.notes.push_back("time limit exceeded");
    }
    result.checks.push_back(std::move(r));
  }
  result.wall_seconds = std::chrono::duration<double>(clock::now() - start).count();
  return result;
}

}  // namespace hypercone
