/* SPDX-License-Identifier: Apache-2.0
 * Copyright (c) 2026 the qespoly authors
 */
#ifndef QESPOLY_POLY_HPP
#define QESPOLY_POLY_HPP

#include <cassert>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qespoly/quadext.hpp"
#include "qespoly/rational.hpp"
#include "qespoly/scalar.hpp"

namespace qes {

/// Dense univariate polynomial over a field K, coefficients lowest-first.
/// The zero polynomial is the empty list; the leading coefficient of any
/// nonzero polynomial is nonzero. A one-character variable tag travels with
/// the value ('\0' marks a constant usable in any variable).
template <class K>
class Poly {
 public:
  Poly() = default;
  explicit Poly(char var) : var_(var) {}
  Poly(std::initializer_list<K> lo_first, char var = 0) : c_(lo_first), var_(var) { normalize(); }
  explicit Poly(std::vector<K> lo_first, char var = 0) : c_(std::move(lo_first)), var_(var) {
    normalize();
  }

  static Poly constant(K v) {
    Poly p;
    if (!is_zero(v)) p.c_.push_back(std::move(v));
    return p;
  }
  static Poly identity(char var) {  // the monomial x
    Poly p(var);
    p.c_ = {K(0), K(1)};
    return p;
  }
  static Poly monomial(K coef, int deg, char var) {
    Poly p(var);
    if (is_zero(coef)) return p;
    p.c_.assign(static_cast<size_t>(deg) + 1, K(0));
    p.c_.back() = std::move(coef);
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool zero() const { return c_.empty(); }
  char var() const { return var_; }
  const std::vector<K>& coeffs() const { return c_; }

  const K& leading() const {
    if (zero()) throw std::domain_error("leading of zero polynomial");
    return c_.back();
  }

  K coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return K(0);
    return c_[static_cast<size_t>(i)];
  }

  friend bool is_zero(const Poly& p) { return p.zero(); }

  friend Poly operator-(const Poly& p) {
    Poly r(p.var_);
    r.c_.reserve(p.c_.size());
    for (const K& x : p.c_) r.c_.push_back(-x);
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r(merge_var(a, b));
    const auto n = std::max(a.c_.size(), b.c_.size());
    r.c_.resize(n, K(0));
    for (size_t i = 0; i < n; ++i) {
      if (i < a.c_.size()) r.c_[i] += a.c_[i];
      if (i < b.c_.size()) r.c_[i] += b.c_[i];
    }
    r.normalize();
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r(merge_var(a, b));
    if (a.zero() || b.zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, K(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.normalize();
    return r;
  }

  friend Poly operator*(const Poly& a, const K& s) { return a * Poly::constant(s); }
  friend Poly operator*(const K& s, const Poly& a) { return a * Poly::constant(s); }

  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  friend bool operator==(const Poly& a, const Poly& b) { return (a - b).zero(); }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Quotient and remainder with deg r < deg b; requires b nonzero.
  friend std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.zero()) throw std::domain_error("polynomial division by zero");
    char v = merge_var(a, b);
    Poly q(v), r = a;
    r.var_ = v;
    if (a.degree() < b.degree()) return {q, r};
    q.c_.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, K(0));
    const K& lb = b.leading();
    while (!r.zero() && r.degree() >= b.degree()) {
      int shift = r.degree() - b.degree();
      K f = r.leading() / lb;
      q.c_[static_cast<size_t>(shift)] = f;
      // r -= f x^shift b
      for (size_t i = 0; i < b.c_.size(); ++i)
        r.c_[i + static_cast<size_t>(shift)] -= f * b.c_[i];
      r.normalize();
    }
    q.normalize();
    return {q, r};
  }

  friend Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }

  Poly derivative() const {
    Poly r(var_);
    if (degree() < 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * K(static_cast<long>(i));
    r.normalize();
    return r;
  }

  /// Horner evaluation in any ring T that K multiplies into.
  template <class T>
  T eval(const T& x) const {
    T acc = T(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + T(c_[i]);
    return acc;
  }
  K operator()(const K& x) const { return eval<K>(x); }

  double eval_double(double x) const {
    double acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + to_double(c_[i]);
    return acc;
  }

  Poly monic() const {
    if (zero()) return *this;
    Poly r = *this;
    const K lc = c_.back();
    for (K& x : r.c_) x = x / lc;
    return r;
  }

  /// Multiplies by x^k.
  Poly shifted_up(int k) const {
    if (zero() || k == 0) return *this;
    Poly r(var_);
    r.c_.assign(c_.size() + static_cast<size_t>(k), K(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + static_cast<size_t>(k)] = c_[i];
    return r;
  }

  void set_var(char v) { var_ = v; }

 private:
  void normalize() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    if (c_.empty()) var_ = var_;  // tag kept; zero matches anything anyway
  }

  static char merge_var(const Poly& a, const Poly& b) {
    if (a.var_ == 0 || a.c_.size() <= 1) return (b.var_ != 0) ? b.var_ : a.var_;
    if (b.var_ == 0 || b.c_.size() <= 1) return a.var_;
    if (a.var_ != b.var_) throw std::logic_error("polynomial variable mismatch");
    return a.var_;
  }

  std::vector<K> c_;
  char var_ = 0;
};

template <class K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
  while (!b.zero()) {
    Poly<K> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.zero()) return a;
  return a.monic();
}

/// gcd(p, p') removed; root set preserved, all roots simple.
template <class K>
Poly<K> squarefree_part(const Poly<K>& p) {
  if (p.degree() <= 1) return p;
  Poly<K> g = gcd(p, p.derivative());
  if (g.degree() < 1) return p;
  return divrem(p, g).first;
}

template <class K>
std::string to_string(const Poly<K>& p, const std::string& var = "z") {
  if (p.zero()) return "0";
  std::string s;
  for (int i = p.degree(); i >= 0; --i) {
    K c = p.coeff(i);
    if (is_zero(c)) continue;
    if (!s.empty()) s += " + ";
    s += "(" + to_string(c) + ")";
    if (i >= 1) {
      s += "*" + var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace qes

#endif
