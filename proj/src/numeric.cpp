#include "evencycle/numeric.hpp"

#include <cstdlib>
#include <stdexcept>

#include "evencycle/error.hpp"

namespace evencycle {

namespace mp = boost::multiprecision;

namespace {

BigInt parse_digits(std::string_view s, std::string_view whole) {
  if (s.empty()) throw PreconditionError("malformed number '" + std::string(whole) + "'");
  BigInt v = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9') throw PreconditionError("malformed number '" + std::string(whole) + "'");
    v = v * 10 + (ch - '0');
  }
  return v;
}

std::size_t bit_size(const BigInt& x) { return x == 0 ? 0 : mp::msb(mp::abs(x)) + 1; }

std::size_t bit_size(const Rational& x) {
  return bit_size(mp::numerator(x)) + bit_size(mp::denominator(x));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const Rational num = parse_rational(text.substr(0, slash));
    const Rational den = parse_rational(text.substr(slash + 1));
    if (den == 0) throw PreconditionError("zero denominator in '" + std::string(whole) + "'");
    return num / den;
  }
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view ex = text.substr(e + 1);
    bool neg_exp = false;
    if (!ex.empty() && (ex[0] == '-' || ex[0] == '+')) {
      neg_exp = ex[0] == '-';
      ex.remove_prefix(1);
    }
    const BigInt mag = parse_digits(ex, whole);
    if (mag > 4000) throw PreconditionError("exponent too large in '" + std::string(whole) + "'");
    exponent = static_cast<long>(mag) * (neg_exp ? -1 : 1);
    text = text.substr(0, e);
  }
  std::string_view int_part = text, frac_part;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    int_part = text.substr(0, dot);
    frac_part = text.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) {
    throw PreconditionError("malformed number '" + std::string(whole) + "'");
  }
  BigInt digits = int_part.empty() ? BigInt(0) : parse_digits(int_part, whole);
  if (!frac_part.empty()) {
    digits = digits * mp::pow(BigInt(10), static_cast<unsigned>(frac_part.size())) +
             parse_digits(frac_part, whole);
  }
  exponent -= static_cast<long>(frac_part.size());
  Rational value(digits);
  if (exponent > 0) value *= Rational(mp::pow(BigInt(10), static_cast<unsigned>(exponent)));
  if (exponent < 0) value /= Rational(mp::pow(BigInt(10), static_cast<unsigned>(-exponent)));
  return negative ? Rational(-value) : value;
}

Rational rpow(const Rational& x, unsigned e) {
  return Rational(mp::pow(mp::numerator(x), e), mp::pow(mp::denominator(x), e));
}

int compare_power(const Rational& lhs, const Rational& coeff, const Rational& base,
                  const Rational& exp) {
  if (coeff <= 0 || base <= 0) throw PreconditionError("compare_power needs coeff, base > 0");
  const Rational x = lhs / coeff;
  if (x <= 0) return -1;
  const BigInt a = mp::numerator(exp);
  const BigInt b = mp::denominator(exp);
  const BigInt abs_a = mp::abs(a);
  constexpr std::size_t kMaxBits = 1u << 22;
  if (b <= 4096 && abs_a <= 4096 &&
      bit_size(x) * static_cast<std::size_t>(b) + bit_size(base) * static_cast<std::size_t>(abs_a) <=
          kMaxBits) {
    const unsigned ub = static_cast<unsigned>(b), ua = static_cast<unsigned>(abs_a);
    Rational left = rpow(x, ub), right = rpow(base, ua);
    if (a < 0) {
      left *= right;
      right = 1;
    }
    return left < right ? -1 : (left > right ? 1 : 0);
  }
  const Real l = mp::log(to_real(x));
  const Real r = to_real(exp) * mp::log(to_real(base));
  return l < r ? -1 : (l > r ? 1 : 0);
}

Real to_real(const Rational& x) {
  return Real(mp::numerator(x)) / Real(mp::denominator(x));
}

double to_double(const Rational& x) { return static_cast<double>(to_real(x)); }

BigInt ceil_rational(const Rational& x) {
  const BigInt n = mp::numerator(x), d = mp::denominator(x);
  BigInt q = n / d;
  if (q * d < n) ++q;
  return q;
}

std::string to_string(const Rational& x) {
  if (mp::denominator(x) == 1) return mp::numerator(x).str();
  return mp::numerator(x).str() + "/" + mp::denominator(x).str();
}

double log10_of(const BigInt& x) {
  if (x <= 0) throw PreconditionError("log10 of a non-positive integer");
  return static_cast<double>(mp::log10(Real100(x)));
}

}  // namespace evencycle
