/* SPDX-License-Identifier: Apache-2.0
 * Copyright (c) 2026 the qespoly authors
 */
#ifndef QESPOLY_STURM_HPP
#define QESPOLY_STURM_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "qespoly/poly.hpp"
#include "qespoly/rational.hpp"

namespace qes {

/// Open interval (lo, hi) bracketing exactly one simple real root.
struct RootInterval {
  Rational lo, hi;
  Rational mid() const { return (lo + hi) / 2; }
  double mid_double() const { return to_double(mid()); }
  bool point() const { return lo == hi; }
};

using QPoly = Poly<Rational>;

/// Sturm chain p0 = p, p1 = p', p_{k+1} = -rem(p_{k-1}, p_k).
inline std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> s;
  if (p.zero()) return s;
  s.push_back(p);
  QPoly d = p.derivative();
  if (!d.zero()) s.push_back(d);
  while (s.size() >= 2 && s.back().degree() > 0) {
    QPoly r = -(s[s.size() - 2] % s.back());
    if (r.zero()) break;
    s.push_back(std::move(r));
  }
  return s;
}

inline int sign_variations(const std::vector<QPoly>& chain, const Rational& x) {
  int var = 0, prev = 0;
  for (const auto& p : chain) {
    int s = sign(p(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

/// Number of distinct real roots in (a, b]; p must be nonzero.
inline int sturm_count(const std::vector<QPoly>& chain, const Rational& a, const Rational& b) {
  return sign_variations(chain, a) - sign_variations(chain, b);
}

namespace detail {

inline void isolate_rec(const std::vector<QPoly>& chain, const Rational& a, const Rational& b,
                        int count, std::vector<RootInterval>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back({a, b});
    return;
  }
  Rational m = (a + b) / 2;
  // Nudge off a root so the two halves carry an exact count.
  while (sign(chain.front()(m)) == 0) m = (a + m) / 2;
  int left = sturm_count(chain, a, m);
  isolate_rec(chain, a, m, left, out);
  isolate_rec(chain, m, b, count - left, out);
}

}  // namespace detail

/// Isolates the distinct real roots of a square-free p inside the open
/// interval (lo, hi). Exact roots at the endpoints are excluded; the caller
/// must pass a square-free polynomial (apply squarefree_part first).
inline std::vector<RootInterval> sturm_isolate(const QPoly& p, Rational lo, Rational hi) {
  if (p.zero()) throw std::domain_error("sturm_isolate: zero polynomial");
  if (!(lo < hi)) throw std::domain_error("sturm_isolate: empty interval");
  QPoly q = p;
  // Strip endpoint roots so that open-interval counting via (a, b] is exact.
  for (const Rational& e : {lo, hi}) {
    QPoly lin({-e, Rational(1)}, q.var() ? q.var() : 't');
    while (!q.zero() && sign(q(e)) == 0) q = divrem(q, lin).first;
  }
  if (q.degree() < 1) return {};
  {
    QPoly g = gcd(q, q.derivative());
    if (g.degree() > 0) throw std::domain_error("sturm_isolate: input not square-free");
  }
  auto chain = sturm_chain(q);
  int n = sturm_count(chain, lo, hi);  // (lo, hi] == (lo, hi): q(hi) != 0
  std::vector<RootInterval> out;
  out.reserve(static_cast<size_t>(n));
  detail::isolate_rec(chain, lo, hi, n, out);
  return out;
}

/// Shrinks an isolating interval below eps by exact bisection. Degree-one
/// polynomials resolve to the exact rational root. The interval must bracket
/// a sign change (or contain the exact root).
inline RootInterval refine_root(const QPoly& p, RootInterval iv, const Rational& eps) {
  if (p.degree() == 1) {
    Rational r = -p.coeff(0) / p.coeff(1);
    if (r < iv.lo || r > iv.hi) throw std::domain_error("refine_root: interval does not isolate");
    return {r, r};
  }
  int slo = sign(p(iv.lo));
  int shi = sign(p(iv.hi));
  if (slo == 0) return {iv.lo, iv.lo};
  if (shi == 0) return {iv.hi, iv.hi};
  if (slo == shi) throw std::domain_error("refine_root: no sign change on interval");
  while (iv.hi - iv.lo > eps) {
    Rational m = iv.mid();
    int sm = sign(p(m));
    if (sm == 0) return {m, m};
    if (sm == slo)
      iv.lo = m;
    else
      iv.hi = m;
  }
  return iv;
}

/// True when q has no zero anywhere in [lo, hi] (exact).
inline bool nonzero_on_interval(const QPoly& q, const Rational& lo, const Rational& hi) {
  if (q.zero()) return false;
  if (sign(q(lo)) == 0 || sign(q(hi)) == 0) return false;
  QPoly sf = squarefree_part(q);
  auto chain = sturm_chain(sf);
  return sturm_count(chain, lo, hi) == 0;
}

}  // namespace qes

#endif
