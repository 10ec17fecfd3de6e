/* SPDX-License-Identifier: Apache-2.0
 * Copyright (c) 2026 the qespoly authors
 */
#ifndef QESPOLY_RATFUNC_HPP
#define QESPOLY_RATFUNC_HPP

#include <stdexcept>
#include <string>
#include <utility>

#include "qespoly/poly.hpp"

namespace qes {

/// Rational function num/den over K, stored gcd-reduced with monic denominator.
template <class K>
class RatFunc {
 public:
  RatFunc() : num_(), den_(Poly<K>::constant(K(1))) {}
  RatFunc(long v) : num_(Poly<K>::constant(K(v))), den_(Poly<K>::constant(K(1))) {}  // NOLINT
  RatFunc(K v) : num_(Poly<K>::constant(std::move(v))), den_(Poly<K>::constant(K(1))) {}  // NOLINT
  RatFunc(Poly<K> p) : num_(std::move(p)), den_(Poly<K>::constant(K(1))) {}  // NOLINT
  RatFunc(Poly<K> n, Poly<K> d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

  static RatFunc identity(char var) { return RatFunc(Poly<K>::identity(var)); }

  const Poly<K>& num() const { return num_; }
  const Poly<K>& den() const { return den_; }
  bool polynomial() const { return den_.degree() == 0; }

  friend bool is_zero(const RatFunc& x) { return x.num_.zero(); }

  friend RatFunc operator-(const RatFunc& x) { return RatFunc(-x.num_, x.den_, already_reduced{}); }
  friend RatFunc operator+(const RatFunc& x, const RatFunc& y) {
    return RatFunc(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
  }
  friend RatFunc operator-(const RatFunc& x, const RatFunc& y) { return x + (-y); }
  friend RatFunc operator*(const RatFunc& x, const RatFunc& y) {
    return RatFunc(x.num_ * y.num_, x.den_ * y.den_);
  }
  friend RatFunc operator/(const RatFunc& x, const RatFunc& y) {
    if (is_zero(y)) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(x.num_ * y.den_, x.den_ * y.num_);
  }

  RatFunc& operator+=(const RatFunc& y) { return *this = *this + y; }
  RatFunc& operator-=(const RatFunc& y) { return *this = *this - y; }
  RatFunc& operator*=(const RatFunc& y) { return *this = *this * y; }
  RatFunc& operator/=(const RatFunc& y) { return *this = *this / y; }

  friend bool operator==(const RatFunc& x, const RatFunc& y) { return is_zero(x - y); }
  friend bool operator!=(const RatFunc& x, const RatFunc& y) { return !(x == y); }

  /// Evaluation at a point of K; throws if the point is a pole.
  K operator()(const K& x) const {
    K d = den_(x);
    if (is_zero(d)) throw std::domain_error("RatFunc: evaluation at a pole");
    return num_(x) / d;
  }

 private:
  struct already_reduced {};
  RatFunc(Poly<K> n, Poly<K> d, already_reduced) : num_(std::move(n)), den_(std::move(d)) {}

  void reduce() {
    if (den_.zero()) throw std::domain_error("RatFunc: zero denominator");
    if (num_.zero()) {
      den_ = Poly<K>::constant(K(1));
      return;
    }
    Poly<K> g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divrem(num_, g).first;
      den_ = divrem(den_, g).first;
    }
    const K lc = den_.leading();
    if (!is_zero(lc - K(1))) {
      Poly<K> inv = Poly<K>::constant(K(1) / lc);
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }

  Poly<K> num_, den_;
};

template <class K>
std::string to_string(const RatFunc<K>& f, const std::string& var = "t") {
  if (f.polynomial()) return to_string(f.num(), var);
  return "(" + to_string(f.num(), var) + ") / (" + to_string(f.den(), var) + ")";
}

}  // namespace qes

#endif
