/* Copyright 2026 The mzkit Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
//
// Minimal dense linear algebra over an arbitrary field coefficient type:
// Gaussian elimination with partial pivoting, matrix inversion, and a
// normal-equations least-squares solve.  Used with Rat (exact solves) and
// Real (numeric fits); anything fancier would be overkill for the small
// systems that appear here.

#ifndef MZKIT_LINALG_HPP
#define MZKIT_LINALG_HPP

#include <utility>
#include <vector>

#include "mzkit/common.hpp"

namespace mzkit {

template <class C>
using Matrix = std::vector<std::vector<C>>;

namespace detail {
template <class C>
C field_abs(const C& c) {
  return c < C(0) ? C(-c) : c;
}
}  // namespace detail

// Solves A x = b in place (A square).  Throws domain_error when singular.
template <class C>
std::vector<C> gauss_solve(Matrix<C> a, std::vector<C> b) {
  const size_t n = a.size();
  if (b.size() != n) throw domain_error("gauss_solve: size mismatch");
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < n; ++r)
      if (detail::field_abs(a[r][col]) > detail::field_abs(a[piv][col])) piv = r;
    if (a[piv][col] == C(0)) throw domain_error("gauss_solve: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == C(0)) continue;
      const C f = a[r][col] / a[col][col];
      for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<C> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// Gauss-Jordan inverse.  Throws domain_error when singular.
template <class C>
Matrix<C> gauss_invert(Matrix<C> a) {
  const size_t n = a.size();
  Matrix<C> inv(n, std::vector<C>(n, C(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = C(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < n; ++r)
      if (detail::field_abs(a[r][col]) > detail::field_abs(a[piv][col])) piv = r;
    if (a[piv][col] == C(0)) throw domain_error("gauss_invert: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const C d = a[col][col];
    for (size_t c = 0; c < n; ++c) {
      a[col][c] /= d;
      inv[col][c] /= d;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == C(0)) continue;
      const C f = a[r][col];
      for (size_t c = 0; c < n; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

// Least squares via normal equations: minimizes |A x - b|_2 for A (m x n),
// m >= n.  Columns are equilibrated to unit max-norm first, otherwise basis
// functions spanning many orders of magnitude square their spread into the
// normal equations and exhaust the working precision.
template <class C>
std::vector<C> least_squares(const Matrix<C>& a, const std::vector<C>& b) {
  const size_t m = a.size();
  if (m == 0 || b.size() != m) throw domain_error("least_squares: size mismatch");
  const size_t n = a[0].size();
  std::vector<C> scale(n, C(0));
  for (size_t j = 0; j < n; ++j) {
    for (size_t i = 0; i < m; ++i) {
      const C v = detail::field_abs(a[i][j]);
      if (v > scale[j]) scale[j] = v;
    }
    if (scale[j] == C(0)) scale[j] = C(1);
  }
  Matrix<C> ata(n, std::vector<C>(n, C(0)));
  std::vector<C> atb(n, C(0));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) {
      const C aij = a[i][j] / scale[j];
      for (size_t k = 0; k < n; ++k) ata[j][k] += aij * (a[i][k] / scale[k]);
      atb[j] += aij * b[i];
    }
  }
  std::vector<C> x = gauss_solve(std::move(ata), std::move(atb));
  for (size_t j = 0; j < n; ++j) x[j] /= scale[j];
  return x;
}

}  // namespace mzkit

#endif  // MZKIT_LINALG_HPP
