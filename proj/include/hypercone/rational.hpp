#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hypercone {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Parses "7", "-3/4" or a plain decimal such as "0.125" / "-2.5e-3" exactly.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

/// Exact value of a finite double.
Rational exact_rational(double x);

/// x rounded to the dyadic grid 2^-bits.
Rational dyadic(double x, int bits = 30);

RationalVector parse_rational_list(std::string_view text, char sep = ',');
std::vector<double> to_doubles(std::span<const Rational> v);
RationalVector to_rationals(std::span<const double> v);
RationalVector dyadic_vector(std::span<const double> v, int bits = 30);

Rational factorial(int n);

RationalVector add(const RationalVector& a, const RationalVector& b);
RationalVector scaled(const RationalVector& a, const Rational& s);

}  // namespace hypercone
