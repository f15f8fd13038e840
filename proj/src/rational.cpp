#include "hypercone/rational.hpp"

#include <cmath>
#include <sstream>

#include "hypercone/error.hpp"

namespace hypercone {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty rational");
  bool negative = false;
  std::string_view body = s;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den)) throw ParseError("malformed rational '" + std::string(s) + "'");
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    value = Rational(mpz_class(std::string(num), 10), d);
    value.canonicalize();
  } else {
    // decimal with optional fraction and exponent
    std::string_view mant = body;
    long exponent = 0;
    if (auto epos = body.find_first_of("eE"); epos != std::string_view::npos) {
      mant = body.substr(0, epos);
      std::string_view ex = body.substr(epos + 1);
      bool eneg = false;
      if (!ex.empty() && (ex.front() == '+' || ex.front() == '-')) {
        eneg = ex.front() == '-';
        ex.remove_prefix(1);
      }
      if (!is_digits(ex) || ex.size() > 6) throw ParseError("malformed exponent in '" + std::string(s) + "'");
      exponent = std::stol(std::string(ex));
      if (eneg) exponent = -exponent;
    }
    std::string digits;
    long frac_len = 0;
    if (auto dot = mant.find('.'); dot != std::string_view::npos) {
      auto ip = mant.substr(0, dot);
      auto fp = mant.substr(dot + 1);
      if ((!ip.empty() && !is_digits(ip)) || (!fp.empty() && !is_digits(fp)) || (ip.empty() && fp.empty()))
        throw ParseError("malformed decimal '" + std::string(s) + "'");
      digits = std::string(ip) + std::string(fp);
      frac_len = static_cast<long>(fp.size());
    } else {
      if (!is_digits(mant)) throw ParseError("malformed number '" + std::string(s) + "'");
      digits = std::string(mant);
    }
    mpz_class num(digits, 10);
    long shift = exponent - frac_len;
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    if (shift >= 0) {
      value = Rational(num * p10);
    } else {
      value = Rational(num, p10);
      value.canonicalize();
    }
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw ParseError("non-finite value cannot be made rational");
  return Rational(x);
}

Rational dyadic(double x, int bits) {
  if (!std::isfinite(x)) throw ParseError("non-finite value cannot be made rational");
  double scaled = std::nearbyint(std::ldexp(x, bits));
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(bits));
  Rational r(mpz_class(scaled), den);
  r.canonicalize();
  return r;
}

RationalVector parse_rational_list(std::string_view text, char sep) {
  RationalVector out;
  std::string_view rest = trim(text);
  if (rest.empty()) throw ParseError("empty point");
  while (true) {
    auto pos = rest.find(sep);
    out.push_back(parse_rational(rest.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    rest.remove_prefix(pos + 1);
  }
  return out;
}

std::vector<double> to_doubles(std::span<const Rational> v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_d();
  return out;
}

RationalVector to_rationals(std::span<const double> v) {
  RationalVector out;
  out.reserve(v.size());
  for (double x : v) out.push_back(exact_rational(x));
  return out;
}

RationalVector dyadic_vector(std::span<const double> v, int bits) {
  RationalVector out;
  out.reserve(v.size());
  for (double x : v) out.push_back(dyadic(x, bits));
  return out;
}

Rational factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

RationalVector add(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw DimensionError("vector sizes differ");
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RationalVector scaled(const RationalVector& a, const Rational& s) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

}  // namespace hypercone
