#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace evencycle {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Real = boost::multiprecision::cpp_bin_float_50;
using Real100 = boost::multiprecision::cpp_bin_float_100;

/// Accepts "3", "-2", "1/3", "0.25", "1e-3", "2.5e2". Decimal forms are read exactly.
Rational parse_rational(std::string_view text);

Rational rpow(const Rational& x, unsigned e);

/// Sign of lhs - coeff * base^exp, for coeff, base > 0. Exact when the
/// exponent has a small denominator; otherwise evaluated with 50 digits.
int compare_power(const Rational& lhs, const Rational& coeff, const Rational& base,
                  const Rational& exp);

Real to_real(const Rational& x);
double to_double(const Rational& x);

/// ceil(x) for x >= 0.
BigInt ceil_rational(const Rational& x);

std::string to_string(const Rational& x);

/// log10 of a positive integer, accurate to well below 1e-12 relative.
double log10_of(const BigInt& x);

}  // namespace evencycle
