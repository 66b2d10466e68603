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
// Word-indexed linear differential equations on (0,1) and the limit series
// they normalize.
//
// The driving equation is d S = M1 S + S M2, with multipliers supported on
// single letters carrying a pole tag 1/z, 1/(1-z), or 1.  solve_de builds
// the 0-normalized left solution L (pure x0-powers are seeded with
// log-powers; every other coefficient is an improper integral from 0),
// g1_solution its mirror normalized at 1 via the substitution z -> 1-z,
// and solve_de2 the general two-sided Picard solution between interior
// points.  associator_numeric forms the quotient of the two normalized
// solutions, which is constant in z; build_Z assembles the limit series as
// ordered products of exponentials over Lyndon words on either product
// side; bridge_check ties the stuffle-side series with Euler-constant
// prefactor to the projection of the shuffle-side series, and also drives
// the renormalized finite-sum route to the same target.
//
// Quadrature: every coefficient function is held by its values at Chebyshev
// nodes on panels that shrink geometrically toward the singular endpoint 0.
// A cumulative antidifferentiation pass per word turns integrand values
// into coefficient values; the neglected tail below the deepest panel is
// bounded (or closed-form, for the log-power integrands) and the panel
// count is chosen so that bound sits far below the requested tolerance.

#ifndef MZKIT_KZODE_HPP
#define MZKIT_KZODE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "mzkit/analytic.hpp"
#include "mzkit/bases.hpp"
#include "mzkit/linalg.hpp"
#include "mzkit/ncpoly.hpp"
#include "mzkit/negreg.hpp"
#include "mzkit/words.hpp"

namespace mzkit {

// ---------------------------------------------------------------------------
// Multipliers and path solutions
// ---------------------------------------------------------------------------

enum class PoleTag { InvZ, InvOneMinusZ, One };

struct MultTerm {
  int letter = 0;
  PoleTag tag = PoleTag::One;
  Real coeff = Real(1);
};

// Finite letter-supported right-hand side.  Every term carries exactly one
// letter, so multiplication raises the grading and Picard iteration is
// nilpotent at a fixed truncation weight.
struct Multiplier {
  std::vector<MultTerm> terms;

  static Multiplier zero() { return {}; }

  static Multiplier single(int letter, PoleTag tag, const Real& c = Real(1)) {
    Multiplier m;
    m.terms.push_back({letter, tag, c});
    return m;
  }

  // x0/z + x1/(1-z): the canonical multiplier with one pole at each end.
  static Multiplier kz() {
    Multiplier m;
    m.terms.push_back({0, PoleTag::InvZ, Real(1)});
    m.terms.push_back({1, PoleTag::InvOneMinusZ, Real(1)});
    return m;
  }
};

enum class SolutionKind { AtZero, AtOne, Plain };

struct PathSolution {
  int maxweight = 0;
  Real base{};
  Real endpoint{};
  SolutionKind kind = SolutionKind::Plain;
  NumSeries series{Alphabet::X};

  Real coeff(const Word& w) const { return series.coeff(w); }
};

// ---------------------------------------------------------------------------
// Panel quadrature
// ---------------------------------------------------------------------------

namespace detail {

// Chebyshev collocation at a fixed node count: nodes on [-1,1] and the
// value -> coefficient cosine transform.
struct ChebTransform {
  int n = 0;
  std::vector<Real> t;
  std::vector<std::vector<Real>> v2c;
};

inline const ChebTransform& cheb_nodes() {
  static const ChebTransform ct = [] {
    ChebTransform c;
    c.n = 32;
    const Real pi = boost::math::constants::pi<Real>();
    c.t.resize(c.n);
    c.v2c.assign(c.n, std::vector<Real>(c.n));
    for (int j = 0; j < c.n; ++j) c.t[j] = cos(pi * Real(2 * j + 1) / Real(2 * c.n));
    for (int i = 0; i < c.n; ++i)
      for (int j = 0; j < c.n; ++j)
        c.v2c[i][j] = Real(i == 0 ? 1 : 2) / Real(c.n) *
                      cos(pi * Real(i) * Real(2 * j + 1) / Real(2 * c.n));
    return c;
  }();
  return ct;
}

inline Real clenshaw(const std::vector<Real>& a, const Real& t) {
  Real b1(0), b2(0);
  const Real two_t = Real(2) * t;
  for (int i = static_cast<int>(a.size()) - 1; i >= 1; --i) {
    const Real b0 = a[i] + two_t * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return a.empty() ? Real(0) : a[0] + t * b1 - b2;
}

// Panels in ascending position with per-panel node coordinates.
struct PanelGrid {
  std::vector<Real> lo, hi;
  std::vector<std::vector<Real>> node;

  int panels() const { return static_cast<int>(lo.size()); }

  void push(const Real& a, const Real& b) {
    const ChebTransform& ct = cheb_nodes();
    lo.push_back(a);
    hi.push_back(b);
    const Real c = (a + b) / 2, h = (b - a) / 2;
    std::vector<Real> xs(ct.n);
    for (int j = 0; j < ct.n; ++j) xs[j] = c + h * ct.t[j];
    node.push_back(std::move(xs));
  }
};

// Bisect until each panel's half-width clears both poles (at 0 and 1) by a
// fixed margin, keeping the Chebyshev fits uniformly convergent.
inline void refine_against_poles(std::vector<std::pair<Real, Real>>& segs) {
  for (size_t i = 0; i < segs.size();) {
    const Real c = (segs[i].first + segs[i].second) / 2;
    const Real h = (segs[i].second - segs[i].first) / 2;
    const Real lim = (c < Real(1) - c ? c : Real(1) - c) * Real(3) / Real(5);
    if (h > lim) {
      segs.insert(segs.begin() + static_cast<long>(i) + 1, {c, segs[i].second});
      segs[i].second = c;
    } else {
      ++i;
    }
  }
}

// Panels [z 2^{-k-1}, z 2^{-k}], deepest first, pole-refined.
inline PanelGrid grid_toward_zero(const Real& z, int depth) {
  std::vector<std::pair<Real, Real>> segs;
  Real b = z;
  for (int k = 0; k < depth; ++k) {
    segs.insert(segs.begin(), {b / 2, b});
    b /= 2;
  }
  refine_against_poles(segs);
  PanelGrid g;
  for (const auto& [a, bb] : segs) g.push(a, bb);
  return g;
}

// Geometric cover of [lo, hi] with ratio <= 2 panels, pole-refined.
inline PanelGrid geometric_grid(const Real& lo, const Real& hi) {
  std::vector<std::pair<Real, Real>> segs;
  Real a = lo;
  while (a < hi) {
    const Real b = (a * 2 < hi) ? a * 2 : hi;
    segs.emplace_back(a, b);
    a = b;
  }
  refine_against_poles(segs);
  PanelGrid g;
  for (const auto& [x, y] : segs) g.push(x, y);
  return g;
}

// Smallest halving count whose discarded tail (integrands bounded by
// |log s|^{w+1} below the cut) sits two orders under the tolerance.
inline int panel_depth(const Real& z, int maxweight, const Real& tol) {
  using boost::multiprecision::abs;
  for (int k = 24; k <= 400; ++k) {
    const Real a = ldexp(z, -k);
    Real bound = a;
    const Real lg = abs(log(a)) + 1;
    for (int i = 0; i <= maxweight; ++i) bound *= lg;
    if (bound * 100 < tol) return k;
  }
  throw tolerance_error("solve_de: cannot bound the endpoint tail at the requested tolerance");
}

// Node values of one scalar function on every panel of a grid.
using GridFun = std::vector<std::vector<Real>>;

// Cumulative antidifferentiation: from integrand node values g and the tail
// value below the deepest panel, produce node values of
// x -> tail + int_{bottom}^{x} g and the value at the top edge.
inline GridFun integrate_cumulative(const PanelGrid& grid, const GridFun& g,
                                    const Real& tail, Real& endval) {
  const ChebTransform& ct = cheb_nodes();
  GridFun out(g.size(), std::vector<Real>(ct.n));
  Real acc = tail;
  for (int p = 0; p < grid.panels(); ++p) {
    std::vector<Real> c(ct.n, Real(0));
    for (int i = 0; i < ct.n; ++i) {
      Real s(0);
      for (int j = 0; j < ct.n; ++j) s += ct.v2c[i][j] * g[p][j];
      c[i] = s;
    }
    const Real half = (grid.hi[p] - grid.lo[p]) / 2;
    std::vector<Real> a(ct.n + 1, Real(0));
    for (int i = 1; i <= ct.n; ++i) {
      const Real up = (i == 1) ? Real(2) * c[0] : c[i - 1];
      const Real down = (i + 1 < ct.n) ? c[i + 1] : Real(0);
      a[i] = half * (up - down) / Real(2 * i);
    }
    Real at_left(0);
    for (int i = 1; i <= ct.n; ++i) at_left += (i % 2 == 0) ? a[i] : -a[i];
    a[0] = acc - at_left;
    for (int j = 0; j < ct.n; ++j) out[p][j] = clenshaw(a, ct.t[j]);
    Real at_right(0);
    for (int i = 0; i <= ct.n; ++i) at_right += a[i];
    acc = at_right;
  }
  endval = acc;
  return out;
}

inline bool pure_x0(const Word& w) {
  for (int v : w.letters)
    if (v != 0) return false;
  return true;
}

inline Real tag_at(PoleTag tag, const Real& s) {
  switch (tag) {
    case PoleTag::InvZ:
      return Real(1) / s;
    case PoleTag::InvOneMinusZ:
      return Real(1) / (Real(1) - s);
    default:
      return Real(1);
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// The 0-normalized solution and its mirror
// ---------------------------------------------------------------------------

// Left solution of d S = (x0/z + x1/(1-z)) S normalized at 0: pure x0-words
// carry log^n(z)/n!, every other coefficient is the improper integral from 0
// of the stripped-first-letter coefficient against the letter's pole weight.
// Words containing x1 vanish at 0, so those integrals converge; the panel
// ladder plus a closed-form cut for the log-power integrands realizes them.
inline PathSolution solve_de(const Real& z, int maxweight, const EvalConfig& cfg = {}) {
  cfg.validate();
  if (!(z > Real(0) && z < Real(1)))
    throw domain_error("solve_de: endpoint must satisfy 0 < z < 1");
  if (maxweight < 0 || maxweight > 6)
    throw domain_error("solve_de: weight bound must lie in [0, 6]");
  const detail::ChebTransform& ct = detail::cheb_nodes();
  const int depth = detail::panel_depth(z, maxweight, cfg.tol);
  const detail::PanelGrid grid = detail::grid_toward_zero(z, depth);
  const int np = grid.panels();

  detail::GridFun lg(np, std::vector<Real>(ct.n));
  detail::GridFun wz(np, std::vector<Real>(ct.n));
  detail::GridFun w1(np, std::vector<Real>(ct.n));
  for (int p = 0; p < np; ++p)
    for (int j = 0; j < ct.n; ++j) {
      const Real& s = grid.node[p][j];
      lg[p][j] = log(s);
      wz[p][j] = Real(1) / s;
      w1[p][j] = Real(1) / (Real(1) - s);
    }

  NumSeries series(Alphabet::X);
  series.add_term(Word(Alphabet::X, {}), Real(1));
  std::map<Word, detail::GridFun, WordLess> vals;
  vals.emplace(Word(Alphabet::X, {}), detail::GridFun(np, std::vector<Real>(ct.n, Real(1))));

  const Real logz = log(z);
  for (const Word& w : words_up_to(Alphabet::X, maxweight)) {
    if (detail::pure_x0(w)) {
      const int m = w.length();
      Real mf(1);
      for (int i = 2; i <= m; ++i) mf *= Real(i);
      detail::GridFun f(np, std::vector<Real>(ct.n));
      for (int p = 0; p < np; ++p)
        for (int j = 0; j < ct.n; ++j) {
          Real v(1);
          for (int i = 0; i < m; ++i) v *= lg[p][j];
          f[p][j] = v / mf;
        }
      Real v(1);
      for (int i = 0; i < m; ++i) v *= logz;
      series.add_term(w, v / mf);
      vals.emplace(w, std::move(f));
      continue;
    }

    const int a = w.letters.front();
    const Word u(Alphabet::X, std::vector<int>(w.letters.begin() + 1, w.letters.end()));
    const detail::GridFun& uf = vals.at(u);
    const detail::GridFun& wt = (a == 0) ? wz : w1;
    detail::GridFun g(np, std::vector<Real>(ct.n));
    for (int p = 0; p < np; ++p)
      for (int j = 0; j < ct.n; ++j) g[p][j] = wt[p][j] * uf[p][j];

    Real tail(0);
    if (a == 1 && detail::pure_x0(u)) {
      // int_0^eps log^m(s)/m! ds = eps sum_{k<=m} (-1)^{m-k} log^k(eps)/k!,
      // and the 1/(1-s) weight differs from 1 by O(eps) there.
      const int m = u.length();
      const Real eps = grid.lo.front();
      const Real leps = log(eps);
      Real sum(0), pw(1), kf(1);
      for (int k = 0; k <= m; ++k) {
        if (k > 0) {
          pw *= leps;
          kf *= Real(k);
        }
        const Real term = pw / kf;
        sum += ((m - k) % 2 == 0) ? term : -term;
      }
      tail = eps * sum;
    }

    Real endval(0);
    detail::GridFun f = detail::integrate_cumulative(grid, g, tail, endval);
    series.add_term(w, endval);
    vals.emplace(w, std::move(f));
  }

  PathSolution out;
  out.maxweight = maxweight;
  out.base = Real(0);
  out.endpoint = z;
  out.kind = SolutionKind::AtZero;
  out.series = std::move(series);
  return out;
}

// Letterwise swap x0 <-> x1 with one sign per letter: the image of an
// X-series under the change of variables z -> 1-z.
inline NumSeries mirror_series(const NumSeries& s) {
  if (s.alph != Alphabet::X) throw domain_error("mirror_series expects an X-series");
  NumSeries out(Alphabet::X);
  for (const auto& [w, c] : s.terms) {
    std::vector<int> sw(w.letters);
    for (int& v : sw) v = 1 - v;
    out.add_term(Word(Alphabet::X, std::move(sw)), (w.length() % 2 == 0) ? c : -c);
  }
  return out;
}

// The solution normalized at 1, computed through the substitution z -> 1-z,
// which preserves the equation's form up to the letter swap and signs.
inline PathSolution g1_solution(const Real& z, int maxweight, const EvalConfig& cfg = {}) {
  PathSolution base = solve_de(Real(1) - z, maxweight, cfg);
  PathSolution out;
  out.maxweight = maxweight;
  out.base = Real(1);
  out.endpoint = z;
  out.kind = SolutionKind::AtOne;
  out.series = mirror_series(base.series);
  return out;
}

// ---------------------------------------------------------------------------
// Series utilities
// ---------------------------------------------------------------------------

// Graded inverse of a series with invertible constant term.
inline NumSeries series_inverse(const NumSeries& s, int maxgrade) {
  const Real c0 = s.coeff(Word(s.alph, {}));
  if (c0 == Real(0)) throw domain_error("series_inverse: constant term vanishes");
  NumSeries b = s.truncated(maxgrade).scaled(Real(1) / c0);
  b.add_term(Word(s.alph, {}), Real(-1));
  NumSeries inv = NumSeries::one(s.alph);
  NumSeries pw = NumSeries::one(s.alph);
  for (int k = 1; k <= maxgrade; ++k) {
    pw = concat_product(pw, b, maxgrade);
    if (pw.is_zero()) break;
    for (const auto& [w, c] : pw.terms) inv.add_term(w, (k % 2 == 1) ? -c : c);
  }
  return inv.scaled(Real(1) / c0);
}

// L(z) e^{-x0 log z}: the 0-normalized solution with its log seed stripped;
// every nonempty coefficient tends to 0 linearly with z.
inline NumSeries remainder_at_zero(const PathSolution& s) {
  if (s.kind != SolutionKind::AtZero)
    throw domain_error("remainder_at_zero expects a 0-normalized solution");
  const NumSeries e = series_exp(
      NumSeries::monomial(Word(Alphabet::X, {0}), -log(s.endpoint)), s.maxweight);
  return concat_product(s.series, e, s.maxweight);
}

// G1(z) e^{x1 log(1-z)}: the mirror-side deflation, tending to 1 as z -> 1.
inline NumSeries remainder_at_one(const PathSolution& s) {
  if (s.kind != SolutionKind::AtOne)
    throw domain_error("remainder_at_one expects a 1-normalized solution");
  const NumSeries e = series_exp(
      NumSeries::monomial(Word(Alphabet::X, {1}), log(Real(1) - s.endpoint)), s.maxweight);
  return concat_product(s.series, e, s.maxweight);
}

// ---------------------------------------------------------------------------
// General two-sided solver
// ---------------------------------------------------------------------------

// Picard iteration for d S = M1 S + S M2 between interior points z0 and z
// with boundary data S0 at z0.  The truncated iteration is nilpotent, so
// maxweight+1 sweeps reach the fixed point; a final stabilization check
// guards the bookkeeping.
inline PathSolution solve_de2(const Multiplier& m1, const Multiplier& m2,
                              const NumSeries& s0, const Real& z0, const Real& z,
                              int maxweight, const EvalConfig& cfg = {}) {
  cfg.validate();
  if (!(z0 > Real(0) && z0 < Real(1) && z > Real(0) && z < Real(1)))
    throw domain_error("solve_de2: base and endpoint must lie in (0,1)");
  if (maxweight < 0 || maxweight > 6)
    throw domain_error("solve_de2: weight bound must lie in [0, 6]");
  if (s0.alph != Alphabet::X) throw domain_error("solve_de2: boundary data must be an X-series");

  PathSolution out;
  out.maxweight = maxweight;
  out.base = z0;
  out.endpoint = z;
  out.kind = SolutionKind::Plain;
  if (z0 == z) {
    out.series = s0.truncated(maxweight);
    return out;
  }

  const bool forward = z0 < z;
  const Real lo = forward ? z0 : z;
  const Real hi = forward ? z : z0;
  const detail::ChebTransform& ct = detail::cheb_nodes();
  const detail::PanelGrid grid = detail::geometric_grid(lo, hi);
  const int np = grid.panels();

  detail::GridFun tagv[3];
  for (auto& gf : tagv) gf.assign(np, std::vector<Real>(ct.n));
  for (int p = 0; p < np; ++p)
    for (int j = 0; j < ct.n; ++j) {
      const Real& s = grid.node[p][j];
      tagv[0][p][j] = Real(1) / s;
      tagv[1][p][j] = Real(1) / (Real(1) - s);
      tagv[2][p][j] = Real(1);
    }
  const auto tag_fun = [&](PoleTag t) -> const detail::GridFun& {
    if (t == PoleTag::InvZ) return tagv[0];
    if (t == PoleTag::InvOneMinusZ) return tagv[1];
    return tagv[2];
  };

  const std::vector<Word> ws = words_up_to(Alphabet::X, maxweight);
  std::map<Word, detail::GridFun, WordLess> cur;
  std::map<Word, Real, WordLess> endv;
  const Word empty(Alphabet::X, {});
  cur.emplace(empty, detail::GridFun(np, std::vector<Real>(ct.n, s0.coeff(empty))));
  endv[empty] = s0.coeff(empty);
  for (const Word& w : ws) {
    cur.emplace(w, detail::GridFun(np, std::vector<Real>(ct.n, s0.coeff(w))));
    endv[w] = s0.coeff(w);
  }

  for (int it = 1; it <= maxweight + 1; ++it) {
    std::map<Word, detail::GridFun, WordLess> next;
    std::map<Word, Real, WordLess> nend;
    next.emplace(empty, cur.at(empty));
    nend[empty] = s0.coeff(empty);
    for (const Word& w : ws) {
      detail::GridFun g(np, std::vector<Real>(ct.n, Real(0)));
      for (const MultTerm& t : m1.terms) {
        if (w.letters.front() != t.letter) continue;
        const Word u(Alphabet::X, std::vector<int>(w.letters.begin() + 1, w.letters.end()));
        const detail::GridFun& uf = cur.at(u);
        const detail::GridFun& tf = tag_fun(t.tag);
        for (int p = 0; p < np; ++p)
          for (int j = 0; j < ct.n; ++j) g[p][j] += t.coeff * tf[p][j] * uf[p][j];
      }
      for (const MultTerm& t : m2.terms) {
        if (w.letters.back() != t.letter) continue;
        const Word u(Alphabet::X, std::vector<int>(w.letters.begin(), w.letters.end() - 1));
        const detail::GridFun& uf = cur.at(u);
        const detail::GridFun& tf = tag_fun(t.tag);
        for (int p = 0; p < np; ++p)
          for (int j = 0; j < ct.n; ++j) g[p][j] += t.coeff * tf[p][j] * uf[p][j];
      }
      Real total(0);
      detail::GridFun f = detail::integrate_cumulative(grid, g, Real(0), total);
      const Real offset = forward ? Real(0) : total;
      const Real s0w = s0.coeff(w);
      detail::GridFun sw(np, std::vector<Real>(ct.n));
      for (int p = 0; p < np; ++p)
        for (int j = 0; j < ct.n; ++j) sw[p][j] = s0w + f[p][j] - offset;
      next.emplace(w, std::move(sw));
      nend[w] = s0w + (forward ? total : Real(0)) - offset;
    }
    if (it == maxweight + 1) {
      using boost::multiprecision::abs;
      Real delta(0);
      for (const Word& w : ws) {
        const Real d = abs(nend.at(w) - endv.at(w));
        if (d > delta) delta = d;
      }
      if (delta > cfg.tol)
        throw tolerance_error("solve_de2: iteration failed to stabilize at the requested weight");
    }
    cur = std::move(next);
    endv = std::move(nend);
  }

  NumSeries series(Alphabet::X);
  series.add_term(empty, endv.at(empty));
  for (const Word& w : ws) series.add_term(w, endv.at(w));
  out.series = std::move(series);
  return out;
}

// ---------------------------------------------------------------------------
// Ordered-product limit series
// ---------------------------------------------------------------------------

enum class ZSide { Shuffle, Stuffle, Gamma };

// Ordered product over Lyndon words (letters excluded on the shuffle side,
// the weight-1 letter on the stuffle side) of exponentials of the dual
// basis elements, with exponents given by the regularized evaluation of the
// paired dual family.  The Gamma side multiplies the Euler-constant
// exponential onto the stuffle-side product from the left.
inline NumSeries build_Z(ZSide side, int maxweight, const EvalConfig& cfg = {}) {
  if (maxweight < 0 || maxweight > 5)
    throw domain_error("build_Z: weight bound must lie in [0, 5]");
  if (side == ZSide::Shuffle) {
    std::map<Word, Real, WordLess> expo;
    for (const Word& l : lyndon_words(Alphabet::X, maxweight)) {
      if (l.length() == 1) continue;
      Real v(0);
      for (const auto& [w, c] : basis_S(l).terms) v += to_real(c) * zeta_shuffle_reg(w, cfg);
      expo[l] = v;
    }
    return mrs_reconstruct(expo, Alphabet::X, Product::Shuffle, maxweight);
  }
  std::map<Word, Real, WordLess> expo;
  std::map<int, std::map<Word, PolyQ, WordLess>> blocks;
  for (const Word& l : lyndon_words(Alphabet::Y, maxweight)) {
    if (l.length() == 1 && l.letters.front() == 1) continue;
    auto& blk = blocks[l.grade()];
    if (blk.empty()) blk = sigma_block(l.grade());
    Real v(0);
    for (const auto& [w, c] : blk.at(l).terms) v += to_real(c) * zeta_stuffle_reg(w, cfg);
    expo[l] = v;
  }
  NumSeries zst = mrs_reconstruct(expo, Alphabet::Y, Product::Stuffle, maxweight);
  if (side == ZSide::Gamma) {
    const NumSeries pref =
        series_exp(NumSeries::monomial(Word(Alphabet::Y, {1}), euler_gamma()), maxweight);
    zst = concat_product(pref, zst, maxweight);
  }
  return zst;
}

// ---------------------------------------------------------------------------
// Numeric associator
// ---------------------------------------------------------------------------

struct AssociatorReport {
  int maxweight = 0;
  std::vector<Real> probes;
  NumSeries phi{Alphabet::X};                 // probe average
  std::map<Word, Real, WordLess> spread;      // per-word max-min over probes
  Real max_spread{};
  Real x0x1_coeff{};
  int x0x1_sign = 0;
  NumSeries reference{Alphabet::X};           // ordered-product shuffle series
  std::string convention;                     // "identity" | "alternating"
  Real max_residual_vs_reference{};
};

// The quotient (1-normalized)^{-1} (0-normalized) at each probe point.  The
// quotient is constant in z because both factors solve the same left
// equation; the spread across probes measures the quadrature error, and the
// result is compared coefficientwise against the ordered-product series,
// recording which sign convention matches.
inline AssociatorReport associator_numeric(int maxweight, const std::vector<Real>& probes,
                                           const EvalConfig& cfg = {}) {
  if (maxweight < 0 || maxweight > 4)
    throw domain_error("associator_numeric: weight bound must lie in [0, 4]");
  if (probes.empty()) throw domain_error("associator_numeric: need at least one probe point");
  using boost::multiprecision::abs;

  AssociatorReport rep;
  rep.maxweight = maxweight;
  rep.probes = probes;

  std::map<Real, NumSeries> cache;
  const auto zero_normalized = [&](const Real& z) -> const NumSeries& {
    auto it = cache.find(z);
    if (it == cache.end()) it = cache.emplace(z, solve_de(z, maxweight, cfg).series).first;
    return it->second;
  };

  std::vector<NumSeries> phis;
  for (const Real& z : probes) {
    const NumSeries g1 = mirror_series(zero_normalized(Real(1) - z));
    phis.push_back(
        concat_product(series_inverse(g1, maxweight), zero_normalized(z), maxweight));
  }

  std::vector<Word> all;
  all.emplace_back(Alphabet::X, std::vector<int>{});
  for (const Word& w : words_up_to(Alphabet::X, maxweight)) all.push_back(w);
  rep.phi = NumSeries(Alphabet::X);
  for (const Word& w : all) {
    Real mn = phis.front().coeff(w), mx = mn, sum(0);
    for (const NumSeries& p : phis) {
      const Real c = p.coeff(w);
      if (c < mn) mn = c;
      if (c > mx) mx = c;
      sum += c;
    }
    rep.phi.add_term(w, sum / Real(static_cast<int>(phis.size())));
    rep.spread[w] = mx - mn;
    if (mx - mn > rep.max_spread) rep.max_spread = mx - mn;
  }

  rep.x0x1_coeff = rep.phi.coeff(Word(Alphabet::X, {0, 1}));
  rep.x0x1_sign = rep.x0x1_coeff > Real(0) ? 1 : -1;

  rep.reference = build_Z(ZSide::Shuffle, maxweight, cfg);
  Real rid(0), ralt(0);
  for (const Word& w : all) {
    const Real ref = rep.reference.coeff(w);
    const Real alt = (w.length() % 2 == 0) ? ref : -ref;
    const Real did = abs(rep.phi.coeff(w) - ref);
    const Real dal = abs(rep.phi.coeff(w) - alt);
    if (did > rid) rid = did;
    if (dal > ralt) ralt = dal;
  }
  rep.convention = (rid <= ralt) ? "identity" : "alternating";
  rep.max_residual_vs_reference = (rid <= ralt) ? rid : ralt;
  return rep;
}

// ---------------------------------------------------------------------------
// Bridge between the two sides
// ---------------------------------------------------------------------------

// Prefactor series exp(gamma y1 - sum_{k>=2} (-y1)^k zeta(k)/k).
inline NumSeries bridge_b_series(int maxweight, const EvalConfig& cfg = {}) {
  NumSeries e(Alphabet::Y);
  if (maxweight >= 1) e.add_term(Word(Alphabet::Y, {1}), euler_gamma());
  for (int k = 2; k <= maxweight; ++k) {
    const Real zk = zeta_convergent(Word(Alphabet::Y, {k}), cfg);
    const std::vector<int> ones(static_cast<size_t>(k), 1);
    e.add_term(Word(Alphabet::Y, ones), ((k % 2 == 0) ? -zk : zk) / Real(k));
  }
  return series_exp(e, maxweight);
}

// Finite nested sums to bound n as a Y-series, renormalized by
// exp(sum_k H_{y_k}(n) (-y1)^k / k) so the divergent y1-direction cancels;
// converges to the projection of the shuffle-side limit series as n grows.
inline NumSeries renorm_series_at(long n, int maxweight) {
  NumSeries h(Alphabet::Y);
  h.add_term(Word(Alphabet::Y, {}), Real(1));
  for (const Word& w : words_up_to(Alphabet::Y, maxweight))
    h.add_term(w, h_eval_real_multi(w.letters, {n}).front());
  NumSeries e(Alphabet::Y);
  for (int k = 1; k <= maxweight; ++k) {
    const Real hk = h_eval_real_multi(std::vector<int>{k}, {n}).front();
    const std::vector<int> ones(static_cast<size_t>(k), 1);
    e.add_term(Word(Alphabet::Y, ones), ((k % 2 == 1) ? -hk : hk) / Real(k));
  }
  return concat_product(series_exp(e, maxweight), h, maxweight);
}

struct BridgeRow {
  Word w;
  Real lhs{}, rhs{};
  Real residual{};
};

struct BridgeReport {
  int maxweight = 0;
  std::vector<BridgeRow> bridge_rows;   // lhs: gamma-side series; rhs: B * projected shuffle side
  Real max_bridge_residual{};
  std::vector<BridgeRow> renorm_rows;   // lhs: extrapolated finite-sum limit; rhs: projection target
  Real max_renorm_residual{};
};

// Coefficientwise check of (gamma-side series) = B(y1) * pi_Y(shuffle-side
// series), plus the renormalized finite-sum route to the same projection,
// extrapolated from samples n in [100, 1000] under the asymptotic model
// A(n) = L + (a2 log^2 n + a1 log n + a0)/n + (b1 log n + b0)/n^2.
inline BridgeReport bridge_check(int maxweight, const EvalConfig& cfg = {}) {
  if (maxweight < 1 || maxweight > 4)
    throw domain_error("bridge_check: weight bound must lie in [1, 4]");
  using boost::multiprecision::abs;

  BridgeReport rep;
  rep.maxweight = maxweight;
  const NumSeries zsh = build_Z(ZSide::Shuffle, maxweight, cfg);
  const NumSeries piz = pi_y(zsh);
  const NumSeries zg = build_Z(ZSide::Gamma, maxweight, cfg);
  const NumSeries rhs = concat_product(bridge_b_series(maxweight, cfg), piz, maxweight);

  for (const Word& w : words_up_to(Alphabet::Y, maxweight)) {
    BridgeRow row;
    row.w = w;
    row.lhs = zg.coeff(w);
    row.rhs = rhs.coeff(w);
    row.residual = abs(row.lhs - row.rhs);
    if (row.residual > rep.max_bridge_residual) rep.max_bridge_residual = row.residual;
    rep.bridge_rows.push_back(std::move(row));
  }

  const std::vector<long> ns = {100, 158, 251, 398, 631, 1000};
  std::vector<NumSeries> samples;
  samples.reserve(ns.size());
  for (long n : ns) samples.push_back(renorm_series_at(n, maxweight));
  for (const Word& w : words_up_to(Alphabet::Y, maxweight)) {
    Matrix<Real> a(ns.size(), std::vector<Real>(6));
    std::vector<Real> b(ns.size());
    for (size_t i = 0; i < ns.size(); ++i) {
      const Real n(ns[i]);
      const Real ln = log(n);
      a[i][0] = Real(1);
      a[i][1] = ln * ln / n;
      a[i][2] = ln / n;
      a[i][3] = Real(1) / n;
      a[i][4] = ln / (n * n);
      a[i][5] = Real(1) / (n * n);
      b[i] = samples[i].coeff(w);
    }
    BridgeRow row;
    row.w = w;
    row.lhs = gauss_solve(std::move(a), std::move(b)).front();
    row.rhs = piz.coeff(w);
    row.residual = abs(row.lhs - row.rhs);
    if (row.residual > rep.max_renorm_residual) rep.max_renorm_residual = row.residual;
    rep.renorm_rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace mzkit

#endif  // MZKIT_KZODE_HPP
