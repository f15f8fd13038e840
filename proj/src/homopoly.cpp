#include "hypercone/homopoly.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "hypercone/error.hpp"

namespace hypercone {

bool GrlexDescending::operator()(const Exponent& a, const Exponent& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return a.size() < b.size();
}

HomoPoly::HomoPoly(int nvars, int degree) : nvars_(nvars), degree_(degree) {
  if (nvars <= 0) throw DimensionError("polynomial needs at least one variable");
  if (degree < 0) throw RangeError("negative degree");
}

HomoPoly::HomoPoly(int nvars, int degree, TermMap terms) : HomoPoly(nvars, degree) {
  for (auto& [exp, c] : terms) {
    if (static_cast<int>(exp.size()) != nvars) throw DimensionError("exponent length differs from nvars");
    int total = 0;
    for (int a : exp) {
      if (a < 0) throw DimensionError("negative exponent");
      total += a;
    }
    if (total != degree) throw DimensionError("term degree differs from polynomial degree");
    c.canonicalize();
    if (sgn(c) != 0) terms_.emplace(exp, c);
  }
}

HomoPoly HomoPoly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw RangeError("variable index out of range");
  Exponent e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(i)] = 1;
  TermMap t;
  t.emplace(std::move(e), Rational(1));
  return HomoPoly(nvars, 1, std::move(t));
}

HomoPoly HomoPoly::linear_form(const RationalVector& coeffs) {
  int n = static_cast<int>(coeffs.size());
  TermMap t;
  for (int i = 0; i < n; ++i) {
    if (sgn(coeffs[i]) == 0) continue;
    Exponent e(coeffs.size(), 0);
    e[static_cast<std::size_t>(i)] = 1;
    t.emplace(std::move(e), coeffs[i]);
  }
  return HomoPoly(n, 1, std::move(t));
}

HomoPoly HomoPoly::constant(int nvars, const Rational& c) {
  TermMap t;
  t.emplace(Exponent(static_cast<std::size_t>(nvars), 0), c);
  return HomoPoly(nvars, 0, std::move(t));
}

Rational HomoPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational HomoPoly::max_abs_coefficient() const {
  Rational m = 0;
  for (const auto& [e, c] : terms_) m = std::max(m, Rational(abs(c)));
  return m;
}

bool HomoPoly::operator==(const HomoPoly& other) const {
  return nvars_ == other.nvars_ && degree_ == other.degree_ && terms_ == other.terms_;
}

namespace {

void check_same_shape(const HomoPoly& a, const HomoPoly& b) {
  if (a.nvars() != b.nvars() || a.degree() != b.degree())
    throw DimensionError("polynomials differ in nvars or degree");
}

void accumulate(HomoPoly::TermMap& acc, const Exponent& e, const Rational& c) {
  auto [it, inserted] = acc.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) acc.erase(it);
  }
}

}  // namespace

HomoPoly operator+(const HomoPoly& a, const HomoPoly& b) {
  check_same_shape(a, b);
  HomoPoly::TermMap t = a.terms();
  for (const auto& [e, c] : b.terms()) accumulate(t, e, c);
  return HomoPoly(a.nvars(), a.degree(), std::move(t));
}

HomoPoly operator-(const HomoPoly& a, const HomoPoly& b) { return a + Rational(-1) * b; }

HomoPoly operator*(const Rational& s, const HomoPoly& a) {
  HomoPoly::TermMap t;
  if (sgn(s) != 0)
    for (const auto& [e, c] : a.terms()) t.emplace(e, c * s);
  return HomoPoly(a.nvars(), a.degree(), std::move(t));
}

HomoPoly operator*(const HomoPoly& a, const HomoPoly& b) {
  if (a.nvars() != b.nvars()) throw DimensionError("polynomials differ in nvars");
  HomoPoly::TermMap t;
  Exponent e(static_cast<std::size_t>(a.nvars()));
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      accumulate(t, e, ca * cb);
    }
  return HomoPoly(a.nvars(), a.degree() + b.degree(), std::move(t));
}

HomoPoly pow(const HomoPoly& p, int k) {
  if (k < 0) throw RangeError("negative power");
  HomoPoly r = HomoPoly::constant(p.nvars(), 1);
  for (int i = 0; i < k; ++i) r = r * p;
  return r;
}

std::string HomoPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    bool constant_term = std::all_of(e.begin(), e.end(), [](int a) { return a == 0; });
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool show_coeff = mag != 1 || constant_term;
    if (show_coeff) os << hypercone::to_string(mag);
    bool need_star = show_coeff;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << "x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

Rational eval(const HomoPoly& p, const RationalVector& x) {
  if (static_cast<int>(x.size()) != p.nvars()) throw DimensionError("point dimension differs from nvars");
  Rational sum = 0, term;
  for (const auto& [e, c] : p.terms()) {
    term = c;
    for (std::size_t i = 0; i < e.size() && sgn(term) != 0; ++i)
      for (int a = 0; a < e[i]; ++a) term *= x[i];
    sum += term;
  }
  return sum;
}

HomoPoly dir_deriv_step(const HomoPoly& p, const RationalVector& e) {
  if (static_cast<int>(e.size()) != p.nvars()) throw DimensionError("direction dimension differs from nvars");
  if (p.degree() == 0) return HomoPoly(p.nvars(), 0);
  HomoPoly::TermMap t;
  for (const auto& [ex, c] : p.terms()) {
    for (std::size_t i = 0; i < ex.size(); ++i) {
      if (ex[i] == 0 || sgn(e[i]) == 0) continue;
      Exponent d = ex;
      --d[i];
      accumulate(t, d, c * e[i] * ex[i]);
    }
  }
  return HomoPoly(p.nvars(), p.degree() - 1, std::move(t));
}

HomoPoly dir_deriv(const HomoPoly& p, const RationalVector& e, int k) {
  if (k < 0 || k > p.degree()) throw RangeError("derivative order out of range [0, degree]");
  HomoPoly r = p;
  for (int i = 0; i < k; ++i) r = dir_deriv_step(r, e);
  return r;
}

HomoPoly substitute(const HomoPoly& p, const std::vector<HomoPoly>& forms) {
  if (static_cast<int>(forms.size()) != p.nvars()) throw DimensionError("one form per variable required");
  if (forms.empty()) throw DimensionError("no forms");
  int m = forms.front().nvars();
  for (const auto& f : forms)
    if (f.nvars() != m || f.degree() != 1) throw DimensionError("forms must be linear in a common set of variables");

  // powers[i][a] = forms[i]^a, built lazily
  std::vector<std::vector<HomoPoly>> powers(forms.size());
  auto power = [&](std::size_t i, int a) -> const HomoPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(HomoPoly::constant(m, 1));
    while (static_cast<int>(cache.size()) <= a) cache.push_back(cache.back() * forms[i]);
    return cache[static_cast<std::size_t>(a)];
  };

  HomoPoly::TermMap acc;
  for (const auto& [e, c] : p.terms()) {
    HomoPoly prod = HomoPoly::constant(m, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) prod = prod * power(i, e[i]);
    for (const auto& [pe, pc] : prod.terms()) accumulate(acc, pe, pc);
  }
  return HomoPoly(m, p.degree(), std::move(acc));
}

HomoPoly compose(const HomoPoly& p, const LinearMap& a) {
  if (a.dim() != p.nvars()) throw DimensionError("map dimension differs from nvars");
  std::vector<HomoPoly> forms;
  forms.reserve(static_cast<std::size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i) forms.push_back(HomoPoly::linear_form(a.row(i)));
  return substitute(p, forms);
}

HomoPoly elementary_symmetric(int n, int k) {
  if (n <= 0 || k < 0 || k > n) throw RangeError("elementary symmetric polynomial index out of range");
  HomoPoly::TermMap t;
  std::vector<int> pick(static_cast<std::size_t>(n), 0);
  std::fill(pick.begin(), pick.begin() + k, 1);
  // enumerate all 0/1 vectors with k ones
  std::sort(pick.begin(), pick.end());
  do {
    t.emplace(Exponent(pick.begin(), pick.end()), Rational(1));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return HomoPoly(n, k, std::move(t));
}

UniPoly restrict_line(std::span<const HomoPoly> derivs, const RationalVector& x) {
  if (derivs.empty()) throw DimensionError("no derivatives supplied");
  int d = derivs.front().degree();
  if (static_cast<int>(derivs.size()) != d + 1) throw DimensionError("need derivatives of order 0..d");
  std::vector<Rational> c(static_cast<std::size_t>(d + 1));
  for (int k = 0; k <= d; ++k) {
    Rational v = eval(derivs[static_cast<std::size_t>(k)], x) / factorial(k);
    c[static_cast<std::size_t>(k)] = ((d - k) % 2 == 0) ? v : Rational(-v);
  }
  return UniPoly(std::move(c));
}

UniPoly restrict_line(const HomoPoly& p, const RationalVector& e, const RationalVector& x, RestrictMethod method) {
  if (static_cast<int>(e.size()) != p.nvars() || static_cast<int>(x.size()) != p.nvars())
    throw DimensionError("direction/point dimension differs from nvars");
  if (method == RestrictMethod::ClosedForm) {
    std::vector<HomoPoly> derivs{p};
    for (int k = 1; k <= p.degree(); ++k) derivs.push_back(dir_deriv_step(derivs.back(), e));
    return restrict_line(derivs, x);
  }
  // x_i -> t e_i - x_i, expanded term by term
  std::vector<Rational> acc(static_cast<std::size_t>(p.degree() + 1));
  for (const auto& [ex, c] : p.terms()) {
    UniPoly prod(std::vector<Rational>{c});
    for (std::size_t i = 0; i < ex.size(); ++i) {
      UniPoly lin(std::vector<Rational>{-x[i], e[i]});
      for (int a = 0; a < ex[i]; ++a) prod = prod * lin;
    }
    for (std::size_t k = 0; k < prod.coeffs.size(); ++k) acc[k] += prod.coeffs[k];
  }
  return UniPoly(std::move(acc));
}

Rational polar_form(const HomoPoly& p, const std::vector<RationalVector>& xs) {
  int d = p.degree();
  if (d > kMaxPolarDegree) throw RangeError("polar form degree exceeds the cap of 24");
  if (static_cast<int>(xs.size()) != d) throw DimensionError("polar form needs exactly degree(p) arguments");
  for (const auto& x : xs)
    if (static_cast<int>(x.size()) != p.nvars()) throw DimensionError("argument dimension differs from nvars");
  if (d == 0) return p.coefficient(Exponent(static_cast<std::size_t>(p.nvars()), 0));

  // Gray-code walk over nonempty subsets keeps a running sum of the selected points.
  RationalVector sum(static_cast<std::size_t>(p.nvars()), Rational(0));
  Rational total = 0;
  unsigned long gray_prev = 0;
  const unsigned long count = 1UL << d;
  for (unsigned long i = 1; i < count; ++i) {
    unsigned long gray = i ^ (i >> 1);
    unsigned long flipped = gray ^ gray_prev;
    int bit = __builtin_ctzl(flipped);
    const auto& x = xs[static_cast<std::size_t>(bit)];
    if (gray & flipped) {
      for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += x[j];
    } else {
      for (std::size_t j = 0; j < sum.size(); ++j) sum[j] -= x[j];
    }
    gray_prev = gray;
    int size = __builtin_popcountl(gray);
    Rational v = eval(p, sum);
    if ((d - size) % 2 == 0)
      total += v;
    else
      total -= v;
  }
  return total / factorial(d);
}

FloatPoly::FloatPoly(const HomoPoly& p) : nvars_(p.nvars()), degree_(p.degree()) {
  coeffs_.reserve(p.size());
  exps_.reserve(p.size() * static_cast<std::size_t>(nvars_));
  for (const auto& [e, c] : p.terms()) {
    coeffs_.push_back(c.get_d());
    max_abs_ = std::max(max_abs_, std::abs(coeffs_.back()));
    for (int a : e) exps_.push_back(static_cast<unsigned char>(a));
  }
}

double FloatPoly::operator()(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != nvars_) throw DimensionError("point dimension differs from nvars");
  double sum = 0;
  const unsigned char* e = exps_.data();
  for (double c : coeffs_) {
    double term = c;
    for (int i = 0; i < nvars_; ++i, ++e)
      for (unsigned char a = 0; a < *e; ++a) term *= x[static_cast<std::size_t>(i)];
    sum += term;
  }
  return sum;
}

nlohmann::json to_json(const HomoPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back({{"exp", e}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  return {{"nvars", p.nvars()}, {"degree", p.degree()}, {"terms", std::move(terms)}};
}

HomoPoly homopoly_from_json(const nlohmann::json& j) {
  try {
    int nvars = j.at("nvars").get<int>();
    int degree = j.at("degree").get<int>();
    HomoPoly::TermMap t;
    for (const auto& term : j.at("terms")) {
      auto e = term.at("exp").get<Exponent>();
      Rational num = parse_rational(term.at("num").get<std::string>());
      Rational den = term.contains("den") ? parse_rational(term.at("den").get<std::string>()) : Rational(1);
      if (sgn(den) == 0) throw ParseError("zero denominator");
      if (num.get_den() != 1 || den.get_den() != 1) throw ParseError("num/den must be integers");
      Rational c = num / den;
      if (t.count(e)) throw ParseError("duplicate exponent in polynomial JSON");
      t.emplace(std::move(e), c);
    }
    return HomoPoly(nvars, degree, std::move(t));
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("polynomial JSON: ") + ex.what());
  }
}

}  // namespace hypercone
