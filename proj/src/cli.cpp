#include "hypercone/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>

#include <CLI11.hpp>

#include "hypercone/autgroup.hpp"
#include "hypercone/error.hpp"
#include "hypercone/faces.hpp"
#include "hypercone/gallery.hpp"
#include "hypercone/suite.hpp"

namespace hypercone {

namespace {

struct Options {
  std::string cone_id;
  std::string point;
  std::string file;
  std::string filter;
  double tol = kZeroTol;
  std::optional<double> tol_given;
  std::optional<std::uint64_t> seed_flag;
  std::optional<int> k;
  int start = 0;
  bool compact = false;
  bool use_float = false;
  bool randomized = false;
};

std::uint64_t resolve_seed(const Options& o, std::uint64_t fallback) {
  if (o.seed_flag) return *o.seed_flag;
  if (const char* env = std::getenv("HYPERCONE_SEED")) {
    try {
      std::size_t used = 0;
      auto v = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
      return v;
    } catch (const std::exception&) {
      throw ParseError(std::string("HYPERCONE_SEED is not an unsigned integer: '") + env + "'");
    }
  }
  return fallback;
}

void emit(std::ostream& out, const Options& o, const nlohmann::json& j) { out << (o.compact ? j.dump() : j.dump(2)) << "\n"; }

int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::Holds: return kExitHolds;
    case Verdict::FailsWithWitness: return kExitFails;
    case Verdict::Inconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

RationalVector parse_point(const std::string& text, const HyperCone& cone) {
  RationalVector x = parse_rational_list(text);
  if (static_cast<int>(x.size()) != cone.dim())
    throw DimensionError("point has " + std::to_string(x.size()) + " coordinates, cone dimension is " +
                         std::to_string(cone.dim()));
  return x;
}

LinearMap read_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read matrix file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("matrix JSON: ") + ex.what());
  }
  if (!j.is_array() || j.empty()) throw ParseError("matrix file must hold a non-empty array of rows");
  std::vector<RationalVector> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError("matrix rows must be arrays");
    RationalVector r;
    for (const auto& v : row) {
      if (v.is_string()) r.push_back(parse_rational(v.get<std::string>()));
      else if (v.is_number_integer()) r.push_back(Rational(v.get<long>()));
      else throw ParseError("matrix entries must be decimal strings or integers");
    }
    if (r.size() != j.size()) throw DimensionError("matrix is not square");
    rows.push_back(std::move(r));
  }
  return LinearMap(rows);
}

GeneratedFaceModel model_for(const GalleryCone& g, std::uint64_t seed) {
  if (g.k != 0) throw PreconditionError("face models exist for base gallery cones only");
  switch (g.kind) {
    case GalleryKind::Orthant: return orthant_model(g.n);
    case GalleryKind::PSD: return psd_model(g.n, g.n, seed);
    case GalleryKind::SOC:
      return g.n == 3 ? soc_circle_model(g.cone, 8, g.id) : soc_sphere_model(g.cone, 4 * g.n, seed, g.id);
    case GalleryKind::L1: return l1_model();
    case GalleryKind::Spectrahedral:
      if (g.cone.dim() == 3) return soc_circle_model(g.cone, 8, g.id);
      break;
    default: break;
  }
  throw PreconditionError("no generator model for '" + g.id + "'");
}

int cmd_eig(const Options& o, std::ostream& out) {
  GalleryCone g = gallery_cone(o.cone_id);
  RationalVector x = parse_point(o.point, g.cone);
  Spectrum s = eigenvalues(g.cone, x, o.tol);
  nlohmann::json j = s.to_json();
  j["cone"] = g.id;
  emit(out, o, j);
  return s.inconclusive() ? kExitInconclusive : kExitHolds;
}

int cmd_member(const Options& o, std::ostream& out) {
  GalleryCone g = gallery_cone(o.cone_id);
  RationalVector x = parse_point(o.point, g.cone);
  auto derived = g.derived();
  Membership m;
  std::string route;
  if (o.use_float) {
    auto xd = to_doubles(x);
    m = derived ? contains(*derived, xd, o.tol) : contains(g.cone, xd, o.tol);
    route = derived ? "inequalities (float)" : "eigenvalues (float)";
  } else {
    m = derived ? contains(*derived, x) : contains(g.cone, x);
    route = derived ? "inequalities (exact)" : "eigenvalues (exact)";
  }
  Spectrum s = eigenvalues(g.cone, x, o.tol);
  nlohmann::json j = {{"cone", g.id}, {"point", vector_json(x)}, {"membership", to_string(m)}, {"route", route},
                      {"lambda_min", s.min()}};
  if (o.use_float) j["tolerances"] = {{"zero_tol", o.tol}};
  else j["on_boundary"] = m == Membership::In && s.exact_zero_mult.value_or(0) > 0;
  emit(out, o, j);
  switch (m) {
    case Membership::In: return kExitHolds;
    case Membership::Out: return kExitFails;
    case Membership::BoundaryAmbiguous: return kExitInconclusive;
  }
  return kExitInconclusive;
}

int cmd_deriv(const Options& o, std::ostream& out) {
  GalleryCone g = gallery_cone(o.cone_id);
  const int k = o.k.value_or(1);
  if (k < 0 || k > g.cone.d()) throw RangeError("k must lie in [0, deg p]");
  const HomoPoly& q = g.cone.deriv(k);
  nlohmann::json j = {{"cone", g.id}, {"k", k}, {"e", vector_json(g.cone.e())}, {"text", q.to_string()},
                      {"polynomial", to_json(q)}};
  emit(out, o, j);
  return kExitHolds;
}

int cmd_autcheck(const Options& o, std::ostream& out, std::ostream& err) {
  GalleryCone g = gallery_cone(o.cone_id);
  const std::uint64_t seed = resolve_seed(o, 1);
  LinearMap m = read_matrix(o.file);
  int k = g.k;
  if (o.k) {
    if (g.k != 0 && *o.k != g.k) throw ParseError("--k conflicts with the k in the cone id");
    k = *o.k;
  }
  const bool psd_kind = g.kind == GalleryKind::PSD || g.kind == GalleryKind::PSDDeriv;
  const bool lifted = psd_kind && m.dim() == g.n && m.dim() != g.base.dim();
  LinearMap a = lifted ? lyapunov_like_map(m) : m;
  if (a.dim() != g.base.dim())
    throw DimensionError("map has order " + std::to_string(m.dim()) + ", cone dimension is " +
                         std::to_string(g.base.dim()));
  if (!a.invertible()) throw PreconditionError("map is singular");
  const double tol = o.tol_given.value_or(kZeroTol);
  FloatTierOptions fopts{1000, seed, tol};
  WitnessSearchOptions wopts{20000, seed, 1e-6};
  const bool orthant_kind = g.kind == GalleryKind::Orthant || g.kind == GalleryKind::OrthantDeriv;

  CheckReport rep;
  if (k == 0) {
    rep = o.use_float ? float_automorphism_check(g.base, a.as_double(), fopts) : check_automorphism(g.base, a, seed);
  } else if (o.use_float) {
    rep = lifted && g.n == 4 ? classify_psd_deriv_float(4, k, m.as_double(), fopts)
                             : check_deriv_automorphism_float(g.base, k, a.as_double(), fopts);
  } else if (orthant_kind && g.n >= 4) {
    rep = classify_orthant_deriv(g.n, k, a, wopts);
  } else if (lifted && g.n == 4) {
    rep = classify_psd_deriv(4, k, m, wopts);
  } else {
    rep = check_deriv_automorphism(g.base, k, a, fopts);
  }
  for (const auto& w : rep.regime_warnings) err << "warning: " << w << "\n";
  if (rep.theorem_violation) err << "warning: derived verdict contradicts the predicted classification\n";
  nlohmann::json j = rep.to_json();
  j["cone"] = g.id;
  j["k"] = k;
  j["map_lifted_from_matrix"] = lifted;
  emit(out, o, j);
  return verdict_code(rep.verdict);
}

int cmd_chain(const Options& o, std::ostream& out, std::ostream& err) {
  GalleryCone g = gallery_cone(o.cone_id);
  const std::uint64_t seed = resolve_seed(o, 1);
  GeneratedFaceModel model = model_for(g, seed);
  if (o.start < 0 || o.start >= static_cast<int>(model.generators.size()))
    throw RangeError("--start must index a generator");
  try {
    FaceChain chain = build_chain(model, o.start, seed, o.randomized);
    nlohmann::json j = chain.to_json();
    j["cone"] = g.id;
    j["generators"] = model.generators.size();
    emit(out, o, j);
    return kExitHolds;
  } catch (const PreconditionError& ex) {
    err << "chain: " << ex.what() << "\n";
    emit(out, o, {{"cone", g.id}, {"verdict", "FailsWithWitness"}, {"diagnostic", ex.what()}});
    return kExitFails;
  }
}

int cmd_rogcheck(const Options& o, std::ostream& out) {
  GalleryCone g = gallery_cone(o.cone_id);
  GeneratedFaceModel model = model_for(g, resolve_seed(o, 1));
  CheckReport rep = rog_check(model, o.tol);
  nlohmann::json j = rep.to_json();
  j["cone"] = g.id;
  j["generators"] = model.generators.size();
  emit(out, o, j);
  return verdict_code(rep.verdict);
}

int cmd_garding(const Options& o, std::ostream& out) {
  GalleryCone g = gallery_cone(o.cone_id);
  std::vector<RationalVector> xs;
  std::size_t start = 0;
  while (start <= o.point.size()) {
    std::size_t pos = o.point.find(';', start);
    if (pos == std::string::npos) pos = o.point.size();
    xs.push_back(parse_point(o.point.substr(start, pos - start), g.cone));
    start = pos + 1;
  }
  CheckReport rep = garding_check(g.cone, xs, o.tol_given.value_or(1e-9));
  nlohmann::json j = rep.to_json();
  j["cone"] = g.id;
  emit(out, o, j);
  return verdict_code(rep.verdict);
}

int cmd_suite(const Options& o, std::ostream& out, std::ostream& err) {
  SuiteOptions so;
  so.seed = resolve_seed(o, so.seed);
  so.filter = o.filter;
  SuiteResult r = run_suite(so);
  for (const auto& c : r.checks)
    err << std::left << std::setw(40) << c.name << " " << to_string(c.status) << "  " << std::fixed
        << std::setprecision(3) << c.seconds << " s (limit " << c.time_limit << " s)\n";
  emit(out, o, r.to_json());
  return r.all_passed() ? kExitHolds : kExitFails;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Hyperbolicity cones, derivative relaxations and their automorphisms", "hypercone"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--tol", o.tol_given, "zero tolerance for float decisions");
  app.add_option("--seed", o.seed_flag, "random seed (default: $HYPERCONE_SEED or built-in)");
  app.add_option("--k", o.k, "derivative order");
  app.add_flag("--json", o.compact, "single-line JSON output");

  auto* eig = app.add_subcommand("eig", "hyperbolic eigenvalues of a point");
  eig->add_option("cone", o.cone_id, "cone id")->required();
  eig->add_option("point", o.point, "comma-separated coordinates")->required();

  auto* member = app.add_subcommand("member", "cone membership of a point");
  member->add_option("cone", o.cone_id, "cone id")->required();
  member->add_option("point", o.point, "comma-separated coordinates")->required();
  member->add_flag("--float", o.use_float, "decide in floating point with --tol instead of exactly");

  auto* deriv = app.add_subcommand("deriv", "print the k-th directional derivative along e");
  deriv->add_option("cone", o.cone_id, "cone id")->required();

  auto* aut = app.add_subcommand("autcheck", "automorphism check of a linear map");
  aut->add_option("cone", o.cone_id, "cone id")->required();
  aut->add_option("matrix", o.file, "JSON file with rows of decimal strings")->required();
  aut->add_flag("--float", o.use_float, "sampled floating-point tier");

  auto* chain = app.add_subcommand("chain", "rank chain through the faces of a generated model");
  chain->add_option("cone", o.cone_id, "cone id")->required();
  chain->add_option("--start", o.start, "index of the first generator");
  chain->add_flag("--random", o.randomized, "seeded random choice among admissible generators");

  auto* rog = app.add_subcommand("rogcheck", "rank-one generation check of a generated model");
  rog->add_option("cone", o.cone_id, "cone id")->required();

  auto* garding = app.add_subcommand("garding", "polar form against the geometric mean");
  garding->add_option("cone", o.cone_id, "cone id")->required();
  garding->add_option("points", o.point, "interior points separated by ';'")->required();

  auto* suite = app.add_subcommand("suite", "acceptance checks");
  suite->add_option("--filter", o.filter, "substring of check names");

  // points such as "-1,3,3,3" must not be taken for options; a leading blank hides the dash
  std::vector<std::string> rev;
  for (const auto& a : args) {
    const bool numeric_dash =
        a.size() > 1 && a[0] == '-' && (std::isdigit(static_cast<unsigned char>(a[1])) || a[1] == '.');
    rev.push_back(numeric_dash ? " " + a : a);
  }
  std::reverse(rev.begin(), rev.end());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitHolds;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitHolds;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitParse;
  }
  if (o.tol_given) {
    if (!(*o.tol_given > 0)) {
      err << "error: --tol must be positive\n";
      return kExitParse;
    }
    o.tol = *o.tol_given;
  }

  try {
    if (eig->parsed()) return cmd_eig(o, out);
    if (member->parsed()) return cmd_member(o, out);
    if (deriv->parsed()) return cmd_deriv(o, out);
    if (aut->parsed()) return cmd_autcheck(o, out, err);
    if (chain->parsed()) return cmd_chain(o, out, err);
    if (rog->parsed()) return cmd_rogcheck(o, out);
    if (garding->parsed()) return cmd_garding(o, out);
    if (suite->parsed()) return cmd_suite(o, out, err);
  } catch (const DimensionError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitDimension;
  } catch (const InconclusiveError& ex) {
    err << "inconclusive: " << ex.what() << "\n";
    return kExitInconclusive;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitParse;
  }
  return kExitParse;
}

}  // namespace hypercone
