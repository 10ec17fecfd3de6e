/* SPDX-License-Identifier: Apache-2.0
 * Copyright (c) 2026 the qespoly authors
 */
#ifndef QESPOLY_RATIONAL_HPP
#define QESPOLY_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qes {

/// Exact arbitrary-precision rational, GMP-backed and always canonical.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline int sign(const Rational& x) { return x.sign(); }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }
inline Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

inline Rational pow(const Rational& x, unsigned e) {
  Rational r(1);
  Rational b = x;
  unsigned k = e;
  while (k) {
    if (k & 1u) r *= b;
    b *= b;
    k >>= 1u;
  }
  return r;
}

/// Parses "p/q", integers, plain decimals ("0.4" -> 2/5) and scientific
/// notation ("2.5e-3"). Decimal strings convert exactly.
inline std::optional<Rational> parse_rational(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  if (s.empty()) return std::nullopt;

  auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    try {
      BigInt num(std::string(s.substr(0, slash)));
      BigInt den(std::string(s.substr(slash + 1)));
      if (den == 0) return std::nullopt;
      return Rational(num, den);
    } catch (...) {
      return std::nullopt;
    }
  }

  bool neg = false;
  if (s.front() == '+' || s.front() == '-') {
    neg = s.front() == '-';
    s.remove_prefix(1);
    if (s.empty()) return std::nullopt;
  }

  long expo = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string_view::npos) {
    try {
      expo = std::stol(std::string(s.substr(epos + 1)));
    } catch (...) {
      return std::nullopt;
    }
    s = s.substr(0, epos);
    if (s.empty()) return std::nullopt;
  }

  std::string digits;
  long frac_digits = 0;
  bool seen_dot = false, seen_digit = false;
  for (char c : s) {
    if (c == '.') {
      if (seen_dot) return std::nullopt;
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    } else {
      return std::nullopt;
    }
  }
  if (!seen_digit) return std::nullopt;

  BigInt mant(digits.empty() ? "0" : digits);
  if (neg) mant = -mant;
  Rational r(mant);
  long net = expo - frac_digits;
  BigInt ten(10);
  if (net > 0) {
    BigInt p(1);
    for (long i = 0; i < net; ++i) p *= ten;
    r *= Rational(p);
  } else if (net < 0) {
    BigInt p(1);
    for (long i = 0; i < -net; ++i) p *= ten;
    r /= Rational(p);
  }
  return r;
}

inline Rational rational_from(std::string_view s) {
  auto r = parse_rational(s);
  if (!r) throw std::invalid_argument("not a rational: " + std::string(s));
  return *r;
}

inline std::string to_string(const Rational& x) {
  return x.str();
}

/// Exact rational with the same value as the double (doubles are dyadic).
inline Rational rational_from_double(double d) {
  if (d == 0.0) return Rational(0);
  int e = 0;
  double m = std::frexp(d, &e);  // d = m * 2^e, 0.5 <= |m| < 1
  // 53 bits of mantissa
  long long im = static_cast<long long>(std::ldexp(m, 53));
  Rational r(im);
  int shift = e - 53;
  BigInt two(2);
  if (shift > 0) {
    BigInt p(1);
    for (int i = 0; i < shift; ++i) p *= two;
    r *= Rational(p);
  } else if (shift < 0) {
    BigInt p(1);
    for (int i = 0; i < -shift; ++i) p *= two;
    r /= Rational(p);
  }
  return r;
}

}  // namespace qes

#endif
