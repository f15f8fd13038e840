#include "hypercone/unipoly.hpp"

#include "hypercone/error.hpp"

namespace hypercone {

int UniPoly::degree() const {
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
    if (sgn(coeffs[i]) != 0) return i;
  return -1;
}

Rational UniPoly::eval(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double UniPoly::eval(double t) const {
  double acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

UniPoly UniPoly::trimmed() const {
  int d = degree();
  return UniPoly(std::vector<Rational>(coeffs.begin(), coeffs.begin() + (d + 1)));
}

std::vector<double> UniPoly::as_doubles() const {
  std::vector<double> out(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) out[i] = coeffs[i].get_d();
  return out;
}

UniPoly derivative(const UniPoly& f) {
  if (f.coeffs.size() <= 1) return UniPoly{};
  std::vector<Rational> c(f.coeffs.size() - 1);
  for (std::size_t i = 1; i < f.coeffs.size(); ++i) c[i - 1] = f.coeffs[i] * static_cast<long>(i);
  return UniPoly(std::move(c)).trimmed();
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a.trimmed(), y = b.trimmed();
  if (x.is_zero() || y.is_zero()) return UniPoly{};
  std::vector<Rational> c(x.coeffs.size() + y.coeffs.size() - 1);
  for (std::size_t i = 0; i < x.coeffs.size(); ++i)
    for (std::size_t j = 0; j < y.coeffs.size(); ++j) c[i + j] += x.coeffs[i] * y.coeffs[j];
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] -= b.coeffs[i];
  return UniPoly(std::move(c)).trimmed();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  UniPoly den = b.trimmed();
  if (den.is_zero()) throw PreconditionError("division by the zero polynomial");
  std::vector<Rational> r = a.trimmed().coeffs;
  int db = den.degree();
  int da = static_cast<int>(r.size()) - 1;
  if (da < db) return {UniPoly{}, UniPoly(r)};
  std::vector<Rational> q(static_cast<std::size_t>(da - db + 1));
  const Rational& lead = den.coeffs[static_cast<std::size_t>(db)];
  for (int i = da; i >= db; --i) {
    if (sgn(r[i]) == 0) continue;
    Rational f = r[i] / lead;
    q[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * den.coeffs[static_cast<std::size_t>(j)];
  }
  return {UniPoly(std::move(q)).trimmed(), UniPoly(std::move(r)).trimmed()};
}

UniPoly monic(const UniPoly& f) {
  UniPoly g = f.trimmed();
  if (g.is_zero()) return g;
  Rational lead = g.coeffs.back();
  for (auto& c : g.coeffs) c /= lead;
  return g;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a.trimmed(), y = b.trimmed();
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = monic(r);
  }
  return monic(x);
}

int zero_multiplicity(const UniPoly& q) {
  int m = 0;
  for (const auto& c : q.coeffs) {
    if (sgn(c) != 0) return m;
    ++m;
  }
  return m;
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f) {
  std::vector<std::pair<UniPoly, int>> out;
  UniPoly g = monic(f);
  if (g.degree() <= 0) return out;
  UniPoly dg = derivative(g);
  UniPoly a = gcd(g, dg);
  UniPoly b = divmod(g, a).first;
  UniPoly c = divmod(dg, a).first;
  UniPoly d = c - derivative(b);
  // g monic and every gcd monic, so every b stays monic
  for (int i = 1; b.degree() > 0; ++i) {
    UniPoly ai = gcd(b, d);
    if (ai.degree() > 0) out.emplace_back(ai, i);
    c = divmod(d, ai).first;
    b = divmod(b, ai).first;
    d = c - derivative(b);
  }
  return out;
}

namespace {

std::vector<UniPoly> sturm_sequence(const UniPoly& f) {
  std::vector<UniPoly> seq{f.trimmed(), derivative(f)};
  while (!seq.back().is_zero()) {
    UniPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    for (auto& v : r.coeffs) v = -v;
    seq.push_back(r.trimmed());
  }
  seq.pop_back();
  return seq;
}

int sign_at(const UniPoly& p, const Bound& x, bool lower) {
  if (x) return sgn(p.eval(*x));
  int d = p.degree();
  int lead = sgn(p.coeffs[static_cast<std::size_t>(d)]);
  if (lower && (d % 2 == 1)) lead = -lead;
  return lead;
}

int variations(const std::vector<UniPoly>& seq, const Bound& x, bool lower) {
  int count = 0, prev = 0;
  for (const auto& p : seq) {
    int s = sign_at(p, x, lower);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

int count_distinct_roots(const UniPoly& f, const Bound& lo, const Bound& hi) {
  UniPoly g = f.trimmed();
  if (g.is_zero()) throw PreconditionError("root count of the zero polynomial");
  if (g.degree() == 0) return 0;
  UniPoly sf = divmod(g, gcd(g, derivative(g))).first;
  auto seq = sturm_sequence(sf);
  return variations(seq, lo, true) - variations(seq, hi, false);
}

int count_roots_with_multiplicity(const UniPoly& f, const Bound& lo, const Bound& hi) {
  int total = 0;
  for (const auto& [factor, mult] : squarefree_decomposition(f)) total += mult * count_distinct_roots(factor, lo, hi);
  return total;
}

RootCensus root_census(const UniPoly& q) {
  RootCensus c;
  UniPoly t = q.trimmed();
  if (t.is_zero()) throw PreconditionError("root census of the zero polynomial");
  c.degree = t.degree();
  c.zero = zero_multiplicity(t);
  UniPoly rest(std::vector<Rational>(t.coeffs.begin() + c.zero, t.coeffs.end()));
  for (const auto& [factor, mult] : squarefree_decomposition(rest)) {
    c.negative += mult * count_distinct_roots(factor, std::nullopt, Rational(0));
    c.positive += mult * count_distinct_roots(factor, Rational(0), std::nullopt);
  }
  c.real = c.negative + c.zero + c.positive;
  return c;
}

}  // namespace hypercone
