/* SPDX-License-Identifier: Apache-2.0
 * Copyright (c) 2026 the qespoly authors
 */
#ifndef QESPOLY_SCALAR_HPP
#define QESPOLY_SCALAR_HPP

#include <cmath>
#include <cstdio>
#include <string>

namespace qes {

inline bool is_zero(double x) { return x == 0.0; }
inline int sign(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }
inline double to_double(double x) { return x; }

/// Round-trip-safe formatting (17 significant digits).
inline std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}
inline std::string to_string(double x) { return format_double(x); }

/// Numeric-mode scalar: a double plus a flag recording that some zero test
/// along the way was tolerance-marginal, so downstream results are suspect.
struct NumScalar {
  double v = 0.0;
  bool dubious = false;

  NumScalar() = default;
  NumScalar(double x) : v(x) {}  // NOLINT
  NumScalar(long x) : v(static_cast<double>(x)) {}  // NOLINT
  NumScalar(double x, bool d) : v(x), dubious(d) {}

  friend NumScalar operator-(const NumScalar& x) { return {-x.v, x.dubious}; }
  friend NumScalar operator+(const NumScalar& x, const NumScalar& y) {
    return {x.v + y.v, x.dubious || y.dubious};
  }
  friend NumScalar operator-(const NumScalar& x, const NumScalar& y) {
    return {x.v - y.v, x.dubious || y.dubious};
  }
  friend NumScalar operator*(const NumScalar& x, const NumScalar& y) {
    return {x.v * y.v, x.dubious || y.dubious};
  }
  friend NumScalar operator/(const NumScalar& x, const NumScalar& y) {
    return {x.v / y.v, x.dubious || y.dubious};
  }
  NumScalar& operator+=(const NumScalar& y) { return *this = *this + y; }
  NumScalar& operator-=(const NumScalar& y) { return *this = *this - y; }
  NumScalar& operator*=(const NumScalar& y) { return *this = *this * y; }
  NumScalar& operator/=(const NumScalar& y) { return *this = *this / y; }
  friend bool operator==(const NumScalar& x, const NumScalar& y) { return x.v == y.v; }
};

inline bool is_zero(const NumScalar& x) { return x.v == 0.0; }
inline int sign(const NumScalar& x) { return sign(x.v); }
inline double to_double(const NumScalar& x) { return x.v; }
inline std::string to_string(const NumScalar& x) { return format_double(x.v); }

/// Tolerance-banded zero classification for numeric mode.
enum class ZeroClass { Zero, NonZero, Ambiguous };

inline ZeroClass classify_zero(const NumScalar& x, double tol, double scale = 1.0) {
  double m = std::fabs(x.v);
  double t = tol * scale;
  if (m <= t / 16) return ZeroClass::Zero;
  if (m >= t * 16) return ZeroClass::NonZero;
  return ZeroClass::Ambiguous;
}

}  // namespace qes

#endif
