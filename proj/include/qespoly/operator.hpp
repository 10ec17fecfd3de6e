/* SPDX-License-Identifier: Apache-2.0
 * Copyright (c) 2026 the qespoly authors
 */
#ifndef QESPOLY_OPERATOR_HPP
#define QESPOLY_OPERATOR_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qespoly/poly.hpp"

namespace qes {

/// One term coef * z^m * D^l of a linear differential operator.
template <class R>
struct OdeTerm {
  R coef;
  int zpow = 0;   // m
  int dord = 0;   // l
  int grade() const { return zpow - dord; }
};

struct GradeSignature {
  int gamma = 0;       // highest grade
  int gamma_star = 0;  // lowest grade of the slicing window
  int width = 1;       // gamma - gamma_star + 1
  friend bool operator==(const GradeSignature&, const GradeSignature&) = default;
};

enum class Alternative { A1, A2, Other };

inline const char* to_string(Alternative a) {
  switch (a) {
    case Alternative::A1: return "A1";
    case Alternative::A2: return "A2";
    default: return "other";
  }
}

/// Falling factorial k(k-1)...(k-l+1) as a ring element.
template <class R>
R falling_factorial(long k, int l) {
  R r(1);
  for (int i = 0; i < l; ++i) r = r * R(k - i);
  return r;
}

template <class R>
class Slice;

/// Linear differential operator: a merged, canonically ordered term list.
/// Terms are unique per (m, l); a merge that cancels to zero drops the term.
template <class R>
class OdeOperator {
 public:
  OdeOperator() = default;

  void add_term(R coef, int zpow, int dord) {
    if (zpow < 0 || dord < 0) throw std::invalid_argument("OdeTerm: negative exponent");
    if (is_zero(coef)) return;
    for (auto& t : terms_) {
      if (t.zpow == zpow && t.dord == dord) {
        t.coef = t.coef + coef;
        if (is_zero(t.coef)) erase(zpow, dord);
        return;
      }
    }
    terms_.push_back({std::move(coef), zpow, dord});
    sort_terms();
  }

  const std::vector<OdeTerm<R>>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  int max_derivative_order() const {
    int m = 0;
    for (const auto& t : terms_) m = std::max(m, t.dord);
    return m;
  }

  /// Extremal grades over the stored terms.
  int strict_max_grade() const {
    require_nonempty();
    int g = terms_.front().grade();
    for (const auto& t : terms_) g = std::max(g, t.grade());
    return g;
  }
  int strict_min_grade() const {
    require_nonempty();
    int g = terms_.front().grade();
    for (const auto& t : terms_) g = std::min(g, t.grade());
    return g;
  }

  /// Grade signature. For operators of order >= 2 the slicing window runs
  /// down to grade -2 even when no stored term reaches it (a second
  /// derivative can always lower degree by two); first-order operators use
  /// the strict extremes.
  GradeSignature signature() const {
    require_nonempty();
    int gamma = strict_max_grade();
    int gs = strict_min_grade();
    if (max_derivative_order() >= 2) gs = std::min(gs, -2);
    return {gamma, gs, gamma - gs + 1};
  }

  /// Coefficient polynomial of D^l (in z).
  Poly<R> coefficient_poly(int dord) const {
    Poly<R> p('z');
    int maxm = -1;
    for (const auto& t : terms_)
      if (t.dord == dord) maxm = std::max(maxm, t.zpow);
    if (maxm < 0) return p;
    std::vector<R> c(static_cast<size_t>(maxm) + 1, R(0));
    for (const auto& t : terms_)
      if (t.dord == dord) c[static_cast<size_t>(t.zpow)] = t.coef;
    return Poly<R>(std::move(c), 'z');
  }

  /// Splits into slices of equal grade covering the full signature window;
  /// grades with no terms get empty slices.
  std::vector<Slice<R>> slices() const;

  Slice<R> slice(int grade) const;

  /// Exact image of a polynomial under the operator. The polynomial and the
  /// operator must share the coefficient ring.
  Poly<R> apply(const Poly<R>& p) const {
    Poly<R> img(p.var());
    for (const auto& t : terms_) {
      Poly<R> d = p;
      for (int i = 0; i < t.dord; ++i) d = d.derivative();
      if (d.zero()) continue;
      img += d.shifted_up(t.zpow) * t.coef;
    }
    return img;
  }

  /// Map coefficients through a function (e.g. substitute the energy symbol).
  template <class F>
  auto map_coeffs(F&& f) const -> OdeOperator<decltype(f(std::declval<const R&>()))> {
    OdeOperator<decltype(f(std::declval<const R&>()))> out;
    for (const auto& t : terms_) out.add_term(f(t.coef), t.zpow, t.dord);
    return out;
  }

  /// Factors z^s out (valid when every term has zpow >= s); zero modes agree.
  OdeOperator shifted_down(int s) const {
    OdeOperator out;
    for (const auto& t : terms_) {
      if (t.zpow < s) throw std::domain_error("shifted_down: term with zpow < shift");
      out.add_term(t.coef, t.zpow - s, t.dord);
    }
    out.z_shift_ = z_shift_ + s;
    return out;
  }
  int recorded_z_shift() const { return z_shift_; }

 private:
  void require_nonempty() const {
    if (terms_.empty()) throw std::domain_error("empty operator");
  }
  void erase(int zpow, int dord) {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                [&](const OdeTerm<R>& t) {
                                  return t.zpow == zpow && t.dord == dord;
                                }),
                 terms_.end());
  }
  void sort_terms() {
    std::sort(terms_.begin(), terms_.end(), [](const OdeTerm<R>& a, const OdeTerm<R>& b) {
      if (a.grade() != b.grade()) return a.grade() < b.grade();
      return a.dord < b.dord;
    });
  }

  std::vector<OdeTerm<R>> terms_;
  int z_shift_ = 0;
};

/// All terms of one grade g; applying it to z^k yields F_g(k) z^{k+g}.
template <class R>
class Slice {
 public:
  Slice(int grade, std::vector<OdeTerm<R>> terms) : grade_(grade), terms_(std::move(terms)) {}

  int grade() const { return grade_; }
  const std::vector<OdeTerm<R>>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Induced multiplicator F_g(k).
  R multiplicator(long k) const {
    R acc(0);
    for (const auto& t : terms_) acc = acc + t.coef * falling_factorial<R>(k, t.dord);
    return acc;
  }

  /// F_g as a polynomial in the index variable k.
  Poly<R> multiplicator_poly() const {
    Poly<R> acc('k');
    Poly<R> kvar = Poly<R>::identity('k');
    for (const auto& t : terms_) {
      Poly<R> ff = Poly<R>::constant(R(1));
      for (int i = 0; i < t.dord; ++i) ff *= (kvar - Poly<R>::constant(R(i)));
      acc += ff * t.coef;
    }
    return acc;
  }

 private:
  int grade_;
  std::vector<OdeTerm<R>> terms_;
};

template <class R>
std::vector<Slice<R>> OdeOperator<R>::slices() const {
  GradeSignature sig = signature();
  std::map<int, std::vector<OdeTerm<R>>> buckets;
  for (int g = sig.gamma_star; g <= sig.gamma; ++g) buckets[g] = {};
  for (const auto& t : terms_) buckets[t.grade()].push_back(t);
  std::vector<Slice<R>> out;
  out.reserve(buckets.size());
  for (auto& [g, ts] : buckets) out.emplace_back(g, std::move(ts));
  return out;
}

template <class R>
Slice<R> OdeOperator<R>::slice(int grade) const {
  std::vector<OdeTerm<R>> ts;
  for (const auto& t : terms_)
    if (t.grade() == grade) ts.push_back(t);
  return Slice<R>(grade, std::move(ts));
}

/// Second-order coefficient triple (A, B, C); higher orders use only the
/// order <= 2 part, as the classification does.
template <class R>
struct SecondOrderPart {
  Poly<R> A, B, C;
};

template <class R>
SecondOrderPart<R> second_order_part(const OdeOperator<R>& op) {
  return {op.coefficient_poly(2), op.coefficient_poly(1), op.coefficient_poly(0)};
}

/// A1 (conventional): deg B <= deg A - 1 and deg C <= deg A - 2, with
/// equality attained somewhere. A2 (anomalous): deg B >= deg A and
/// deg C = deg B - 1.
template <class R>
Alternative classify_alternative(const OdeOperator<R>& op) {
  auto [A, B, C] = second_order_part(op);
  int da = A.degree(), db = B.degree(), dc = C.degree();
  if (da >= 0 && db <= da - 1 && dc <= da - 2 && (db == da - 1 || dc == da - 2))
    return Alternative::A1;
  if (db >= da && db >= 0 && dc == db - 1) return Alternative::A2;
  return Alternative::Other;
}

/// True iff B = -A' exactly, the only way a fixed-coefficient second-order
/// equation can carry two independent polynomial solutions. Always false for
/// anomalous (A2) operators.
template <class R>
bool wronskian_uniqueness_flag(const OdeOperator<R>& op) {
  auto [A, B, C] = second_order_part(op);
  return B == -A.derivative();
}

/// One term per line, "coef * z^m * D^l", ordered by (grade, dord).
template <class R>
std::string dump(const OdeOperator<R>& op) {
  std::string s;
  for (const auto& t : op.terms()) {
    s += to_string(t.coef) + " * z^" + std::to_string(t.zpow) + " * D^" + std::to_string(t.dord);
    s += "\n";
  }
  return s;
}

}  // namespace qes

#endif
