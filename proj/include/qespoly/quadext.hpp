/* SPDX-License-Identifier: Apache-2.0
 * Copyright (c) 2026 the qespoly authors
 */
#ifndef QESPOLY_QUADEXT_HPP
#define QESPOLY_QUADEXT_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "qespoly/rational.hpp"

namespace qes {

/// Element a + b*theta of a quadratic extension K(theta), theta^2 = r in K.
/// Values with b == 0 are radicand-agnostic and combine with any extension;
/// mixing two distinct nontrivial radicands is a logic error.
template <class K>
class QuadExt {
 public:
  QuadExt() : a_(), b_(), r_() {}
  QuadExt(K a) : a_(std::move(a)), b_(), r_() {}  // NOLINT: implicit lift
  QuadExt(long v) : a_(K(v)), b_(), r_() {}       // NOLINT
  QuadExt(K a, K b, K r) : a_(std::move(a)), b_(std::move(b)), r_(std::move(r)) {
    if (is_zero(b_)) r_ = K();
  }

  static QuadExt radical(K r) { return QuadExt(K(0), K(1), std::move(r)); }

  const K& re() const { return a_; }
  const K& rad_part() const { return b_; }
  const K& radicand() const { return r_; }
  bool pure_base() const { return is_zero(b_); }

  friend bool is_zero(const QuadExt& x) { return is_zero(x.a_) && is_zero(x.b_); }

  friend QuadExt operator-(const QuadExt& x) { return QuadExt(-x.a_, -x.b_, x.r_); }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a_ + y.a_, x.b_ + y.b_, merged(x, y));
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a_ - y.a_, x.b_ - y.b_, merged(x, y));
  }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    K r = merged(x, y);
    return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * r, x.a_ * y.b_ + x.b_ * y.a_, r);
  }
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }

  QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
  QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
  QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
  QuadExt& operator/=(const QuadExt& y) { return *this = *this / y; }

  QuadExt inverse() const {
    if (is_zero(*this)) throw std::domain_error("QuadExt: division by zero");
    if (is_zero(b_)) return QuadExt(K(1) / a_, K(), K());
    K n = a_ * a_ - b_ * b_ * r_;  // norm; nonzero unless theta lies in K
    if (is_zero(n)) throw std::domain_error("QuadExt: radicand is a perfect square, norm vanished");
    return QuadExt(a_ / n, -b_ / n, r_);
  }

  QuadExt conj() const { return QuadExt(a_, -b_, r_); }

  friend bool operator==(const QuadExt& x, const QuadExt& y) { return is_zero(x - y); }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

 private:
  static K merged(const QuadExt& x, const QuadExt& y) {
    if (is_zero(x.b_)) return y.r_;
    if (is_zero(y.b_)) return x.r_;
    if (!(is_zero(x.r_ - y.r_))) throw std::logic_error("QuadExt: mixed radicands");
    return x.r_;
  }

  K a_, b_, r_;
};

/// Exact sign of a + b*sqrt(r) under the real embedding theta = +sqrt(r), r >= 0.
inline int sign(const QuadExt<Rational>& x) {
  const Rational& a = x.re();
  const Rational& b = x.rad_part();
  if (is_zero(b)) return sign(a);
  if (sign(x.radicand()) < 0) throw std::domain_error("sign of complex quadratic value");
  if (is_zero(a)) return sign(b);
  int sa = sign(a), sb = sign(b);
  if (sa == sb) return sa;
  // compare a^2 vs b^2 r: |a| >< |b| sqrt(r)
  Rational lhs = a * a, rhs = b * b * x.radicand();
  if (lhs == rhs) return 0;
  return (lhs > rhs) ? sa : sb;
}

inline double to_double(const QuadExt<Rational>& x) {
  double r = to_double(x.radicand());
  return to_double(x.re()) + to_double(x.rad_part()) * std::sqrt(r);
}

inline std::string to_string(const QuadExt<Rational>& x) {
  if (x.pure_base()) return to_string(x.re());
  std::string s = to_string(x.re());
  s += (sign(x.rad_part()) < 0) ? " - " : " + ";
  s += to_string(abs(x.rad_part()));
  s += "*sqrt(" + to_string(x.radicand()) + ")";
  return s;
}

}  // namespace qes

#endif
