/* SPDX-License-Identifier: Apache-2.0
 * Copyright (c) 2026 the qespoly authors
 */
#ifndef QESPOLY_RESULTANT_HPP
#define QESPOLY_RESULTANT_HPP

#include <stdexcept>
#include <vector>

#include "qespoly/poly.hpp"

namespace qes {

/// Sylvester resultant of p (degree m) and q (degree n), p-rows first.
/// With this convention res(z - a, z - b) = a - b.
/// Fails when both inputs are constant (the matrix is empty).
template <class K>
K resultant(const Poly<K>& p, const Poly<K>& q) {
  int m = p.degree(), n = q.degree();
  if (p.zero() || q.zero()) throw std::domain_error("resultant: zero input");
  if (m == 0 && n == 0) throw std::domain_error("resultant: both inputs constant");
  if (m == 0) return pow_k(p.coeff(0), n);
  if (n == 0) return pow_k(q.coeff(0), m);

  const int N = m + n;
  std::vector<std::vector<K>> a(static_cast<size_t>(N), std::vector<K>(static_cast<size_t>(N), K(0)));
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) a[r][r + j] = p.coeff(m - j);
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) a[n + r][r + j] = q.coeff(n - j);

  // Gaussian elimination over the field with exact pivoting.
  K det(1);
  int swaps = 0;
  for (int col = 0; col < N; ++col) {
    int piv = -1;
    for (int r = col; r < N; ++r)
      if (!is_zero(a[r][col])) {
        piv = r;
        break;
      }
    if (piv < 0) return K(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      ++swaps;
    }
    det = det * a[col][col];
    for (int r = col + 1; r < N; ++r) {
      if (is_zero(a[r][col])) continue;
      K f = a[r][col] / a[col][col];
      for (int c = col; c < N; ++c) a[r][c] = a[r][c] - f * a[col][c];
    }
  }
  if (swaps & 1) det = -det;
  return det;
}

template <class K>
K pow_k(const K& x, int e) {
  K r(1);
  for (int i = 0; i < e; ++i) r = r * x;
  return r;
}

}  // namespace qes

#endif
