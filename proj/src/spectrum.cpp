#include "hypercone/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "hypercone/error.hpp"

namespace hypercone {

namespace {

// Parlett-Reinsch balancing by powers of two; leaves the spectrum unchanged.
void balance(Eigen::MatrixXd& a) {
  const double radix = 2.0, sqrdx = radix * radix;
  const Eigen::Index n = a.rows();
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double r = 0, c = 0;
      for (Eigen::Index j = 0; j < n; ++j)
        if (j != i) {
          c += std::abs(a(j, i));
          r += std::abs(a(i, j));
        }
      if (c == 0 || r == 0) continue;
      double g = r / radix, f = 1, s = c + r;
      while (c < g) {
        f *= radix;
        c *= sqrdx;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= sqrdx;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

double horner(std::span<const double> c, double t) {
  double acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double horner_deriv(std::span<const double> c, double t) {
  double acc = 0;
  for (std::size_t i = c.size() - 1; i >= 1; --i) acc = acc * t + c[i] * static_cast<double>(i);
  return acc;
}

std::vector<double> trim(std::span<const double> coeffs) {
  std::vector<double> c(coeffs.begin(), coeffs.end());
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  return c;
}

double polish(std::span<const double> c, double r) {
  for (int it = 0; it < 8; ++it) {
    double f = horner(c, r), fp = horner_deriv(c, r);
    if (f == 0 || fp == 0) break;
    double step = f / fp;
    if (!std::isfinite(step) || std::abs(step) > 1e-3 * (1 + std::abs(r))) break;
    double next = r - step;
    if (std::abs(horner(c, next)) >= std::abs(f)) break;
    r = next;
  }
  return r;
}

RootResult roots_of_trimmed(const std::vector<double>& c, double tol) {
  RootResult out;
  const int d = static_cast<int>(c.size()) - 1;
  if (d < 0) throw PreconditionError("root extraction of the zero polynomial");
  if (d == 0) return out;
  if (d == 1) {
    out.roots.push_back(-c[0] / c[1]);
    return out;
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) m(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) m(i, d - 1) = -c[static_cast<std::size_t>(i)] / c[static_cast<std::size_t>(d)];
  balance(m);
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
  if (es.info() != Eigen::Success) throw InconclusiveError("companion eigenvalue iteration did not converge");
  for (int i = 0; i < d; ++i) {
    auto z = es.eigenvalues()[i];
    out.residual = std::max(out.residual, std::abs(z.imag()));
    out.roots.push_back(z.real());
  }
  if (out.residual <= tol)
    for (double& r : out.roots) r = polish(c, r);
  return out;
}

void sort_descending(std::vector<double>& v) { std::sort(v.begin(), v.end(), std::greater<>()); }

}  // namespace

RootResult real_roots(std::span<const double> coeffs, double tol) {
  auto c = trim(coeffs);
  if (c.empty()) throw PreconditionError("root extraction of the zero polynomial");
  RootResult r = roots_of_trimmed(c, tol);
  sort_descending(r.roots);
  return r;
}

RootResult real_roots(const UniPoly& q, double tol) {
  auto c = q.trimmed().as_doubles();
  return real_roots(std::span<const double>(c), tol);
}

bool Spectrum::rank_ambiguous() const {
  return std::any_of(eigenvalues.begin(), eigenvalues.end(), [&](double l) {
    double a = std::abs(l);
    return a > zero_tol / 4 && a < 4 * zero_tol;
  });
}

int Spectrum::rank() const {
  if (inconclusive()) throw InconclusiveError("eigenvalue residual above tolerance");
  if (rank_ambiguous()) throw InconclusiveError("eigenvalue inside the ambiguous zero band");
  return static_cast<int>(
      std::count_if(eigenvalues.begin(), eigenvalues.end(), [&](double l) { return std::abs(l) > zero_tol; }));
}

nlohmann::json Spectrum::to_json() const {
  nlohmann::json j{{"eigs", eigenvalues}, {"residual", residual}, {"zero_tol", zero_tol}};
  if (inconclusive() || rank_ambiguous()) {
    j["rank"] = nullptr;
    j["mult"] = nullptr;
    j["inconclusive"] = true;
  } else {
    j["rank"] = rank();
    j["mult"] = mult();
  }
  return j;
}

Spectrum spectrum_from_restriction(std::span<const double> coeffs, double zero_tol, double residual_tol) {
  auto c = trim(coeffs);
  if (c.size() != coeffs.size()) throw PreconditionError("restriction has vanishing leading coefficient (p(e) = 0)");
  Spectrum s;
  s.zero_tol = zero_tol;
  s.residual_tol = residual_tol;
  RootResult r = roots_of_trimmed(c, residual_tol);
  s.eigenvalues = std::move(r.roots);
  s.residual = r.residual;
  sort_descending(s.eigenvalues);
  return s;
}

namespace {

// Best rational approximation with bounded denominator (continued fractions).
Rational small_rational_near(double x, long max_den) {
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int it = 0; it < 40; ++it) {
    const double a = std::floor(r);
    if (std::abs(a) > 1e15) break;
    const long ai = static_cast<long>(a);
    const long k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    const long h2 = ai * h1 + h0;
    h0 = h1, h1 = h2, k0 = k1, k1 = k2;
    if (r - a < 1e-12) break;
    r = 1 / (r - a);
  }
  Rational out(h1, k1);
  out.canonicalize();
  return out;
}

// Replaces a float root by an exact rational root of the factor when one is that close.
double snap_rational_root(const UniPoly& factor, double root) {
  if (!std::isfinite(root) || std::abs(root) > 1e9) return root;
  Rational cand = small_rational_near(root, 1L << 20);
  if (std::abs(cand.get_d() - root) > 1e-6 * std::max(1.0, std::abs(root))) return root;
  return sgn(factor.eval(cand)) == 0 ? cand.get_d() : root;
}

}  // namespace

Spectrum spectrum_from_restriction(const UniPoly& q, double zero_tol, double residual_tol) {
  if (q.degree() != static_cast<int>(q.coeffs.size()) - 1)
    throw PreconditionError("restriction has vanishing leading coefficient (p(e) = 0)");
  Spectrum s;
  s.zero_tol = zero_tol;
  s.residual_tol = residual_tol;
  int z = zero_multiplicity(q);
  s.exact_zero_mult = z;
  s.eigenvalues.assign(static_cast<std::size_t>(z), 0.0);
  UniPoly rest(std::vector<Rational>(q.coeffs.begin() + z, q.coeffs.end()));
  bool all_certified = true;
  if (rest.degree() > 0) {
    for (const auto& [factor, mult] : squarefree_decomposition(rest)) {
      auto c = factor.as_doubles();
      RootResult r = roots_of_trimmed(c, residual_tol);
      s.residual = std::max(s.residual, r.residual);
      if (r.residual > residual_tol) {
        // Sturm count on the exact factor decides whether the imaginary parts are real.
        if (count_distinct_roots(factor, std::nullopt, std::nullopt) == factor.degree()) {
          for (double& root : r.roots) root = polish(c, root);
        } else {
          all_certified = false;
        }
      }
      for (double root : r.roots) {
        const double snapped = snap_rational_root(factor, root);
        for (int m = 0; m < mult; ++m) s.eigenvalues.push_back(snapped);
      }
    }
  }
  s.certified_real = all_certified;
  sort_descending(s.eigenvalues);
  return s;
}

RootCountComparison compare_nonnegative_root_counts(const UniPoly& q, double zero_tol) {
  RootCountComparison out;
  Spectrum s = spectrum_from_restriction(q, zero_tol);
  out.float_count = static_cast<int>(
      std::count_if(s.eigenvalues.begin(), s.eigenvalues.end(), [&](double l) { return l >= -zero_tol; }));
  RootCensus c = root_census(q);
  out.sturm_count = c.zero + c.positive;
  return out;
}

nlohmann::json HyperbolicityCertificate::to_json() const {
  nlohmann::json j{{"verdict", verdict == Verdict::LooksHyperbolic ? "LooksHyperbolic" : "RefutedWithWitness"},
                   {"samples_checked", samples_checked},
                   {"worst_residual", worst_residual}};
  if (witness) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& v : *witness) w.push_back(to_string(v));
    j["witness"] = w;
  }
  return j;
}

HyperbolicityCertificate check_hyperbolic(const HomoPoly& p, const RationalVector& e, int nsamples,
                                          std::uint64_t seed, double tol) {
  HyperbolicityCertificate cert;
  if (static_cast<int>(e.size()) != p.nvars()) throw DimensionError("direction dimension differs from nvars");
  if (sgn(eval(p, e)) <= 0) {
    cert.verdict = HyperbolicityCertificate::Verdict::RefutedWithWitness;
    cert.witness = e;
    return cert;
  }
  const int d = p.degree(), n = p.nvars();
  std::vector<HomoPoly> derivs{p};
  for (int k = 1; k <= d; ++k) derivs.push_back(dir_deriv_step(derivs.back(), e));
  std::vector<FloatPoly> fd(derivs.begin(), derivs.end());
  auto ed = to_doubles(e);

  auto coeffs_at = [&](const std::vector<double>& x) {
    std::vector<double> c(static_cast<std::size_t>(d + 1));
    double fact = 1;
    for (int k = 0; k <= d; ++k) {
      if (k > 0) fact *= k;
      double v = fd[static_cast<std::size_t>(k)](x) / fact;
      c[static_cast<std::size_t>(k)] = ((d - k) % 2 == 0) ? v : -v;
    }
    return c;
  };

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<double> x(static_cast<std::size_t>(n));
  for (int s = 0; s < nsamples; ++s) {
    for (double& v : x) v = gauss(rng);
    if (s % 2 == 1) {
      RootResult r = real_roots(coeffs_at(x), tol);
      if (r.residual <= tol)
        for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] -= r.roots.back() * ed[static_cast<std::size_t>(i)];
    }
    RootResult r = real_roots(coeffs_at(x), tol);
    ++cert.samples_checked;
    if (r.residual > tol) {
      RationalVector xr = to_rationals(x);
      UniPoly q = restrict_line(std::span<const HomoPoly>(derivs), xr);
      if (!root_census(q).real_rooted()) {
        cert.verdict = HyperbolicityCertificate::Verdict::RefutedWithWitness;
        cert.witness = std::move(xr);
        cert.worst_residual = std::max(cert.worst_residual, r.residual);
        return cert;
      }
      continue;  // a conditioning artefact, not evidence against hyperbolicity
    }
    cert.worst_residual = std::max(cert.worst_residual, r.residual);
  }
  return cert;
}

}  // namespace hypercone
