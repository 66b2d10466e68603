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
// Dual PBW-type bases indexed by words.
//
// Shuffle side (alphabet X):
//   P_x = x for letters, P_l = [P_u, P_v] on the standard factorization of a
//   Lyndon word, P_w = P_{l1} ... P_{lk} along the non-increasing Lyndon
//   factorization; S_l = first-letter * S_rest for Lyndon l, and
//   S_w = (S_{l1}^{sh i1} sh ... sh S_{lk}^{sh ik}) / (i1! ... ik!).
//   These satisfy <P_u | S_v> = delta_{u,v}.
//
// Quasi-shuffle side (alphabet Y):
//   Pi_{y_s} = pi1(y_s), Pi_l = [Pi_u, Pi_v] on the standard factorization,
//   Pi_w = (Pi_{l1}^{i1} ... Pi_{lk}^{ik}) / (i1! ... ik!); the dual family
//   {Sigma_w} is obtained by an exact per-weight-block solve against the
//   pairing matrix, so <Pi_u | Sigma_v> = delta_{u,v} holds by construction.
//
// On top of the bases sits the factorization of a group-like series into an
// ordered product of exponentials indexed by Lyndon words (largest first).

#ifndef MZKIT_BASES_HPP
#define MZKIT_BASES_HPP

#include <algorithm>
#include <map>
#include <vector>

#include "mzkit/linalg.hpp"
#include "mzkit/ncpoly.hpp"
#include "mzkit/words.hpp"

namespace mzkit {

using PolyQ = NCPoly<Rat>;

namespace detail {

inline PolyQ bracket(const PolyQ& a, const PolyQ& b) {
  return concat_product(a, b) - concat_product(b, a);
}

template <class C>
NCPoly<C> shuffle_power(const NCPoly<C>& p, int k) {
  NCPoly<C> r = NCPoly<C>::one(p.alph);
  for (int i = 0; i < k; ++i) r = shuffle_product(r, p);
  return r;
}

// Groups the non-increasing Lyndon factorization into (factor, multiplicity)
// runs l1^{i1} ... lk^{ik} with l1 > l2 > ... > lk.
inline std::vector<std::pair<Word, int>> grouped_factorization(const Word& w) {
  std::vector<std::pair<Word, int>> runs;
  for (const Word& f : lyndon_factorization(w)) {
    if (!runs.empty() && runs.back().first == f) ++runs.back().second;
    else runs.emplace_back(f, 1);
  }
  return runs;
}

}  // namespace detail

inline PolyQ basis_P(const Word& w) {
  if (w.alph != Alphabet::X) throw domain_error("basis_P expects an X-word");
  if (w.empty()) return PolyQ::one(Alphabet::X);
  if (w.length() == 1) return PolyQ::monomial(w);
  if (is_lyndon(w)) {
    const auto [u, v] = standard_factorization(w);
    return detail::bracket(basis_P(u), basis_P(v));
  }
  PolyQ r = PolyQ::one(Alphabet::X);
  for (const Word& f : lyndon_factorization(w)) r = concat_product(r, basis_P(f));
  return r;
}

inline PolyQ basis_S(const Word& w) {
  if (w.alph != Alphabet::X) throw domain_error("basis_S expects an X-word");
  if (w.empty()) return PolyQ::one(Alphabet::X);
  if (is_lyndon(w)) {
    if (w.length() == 1) return PolyQ::monomial(w);
    const Word head = w.subword(0, 1);
    const Word rest = w.subword(1, w.length() - 1);
    return concat_product(PolyQ::monomial(head), basis_S(rest));
  }
  PolyQ r = PolyQ::one(Alphabet::X);
  Rat norm(1);
  for (const auto& [l, mult] : detail::grouped_factorization(w)) {
    r = shuffle_product(r, detail::shuffle_power(basis_S(l), mult));
    norm *= Rat(factorial(mult));
  }
  return r.scaled(Rat(1) / norm);
}

inline PolyQ basis_Pi(const Word& w) {
  if (w.alph != Alphabet::Y) throw domain_error("basis_Pi expects a Y-word");
  if (w.empty()) return PolyQ::one(Alphabet::Y);
  if (w.length() == 1) return pi1(PolyQ::monomial(w));
  if (is_lyndon(w)) {
    const auto [u, v] = standard_factorization(w);
    return detail::bracket(basis_Pi(u), basis_Pi(v));
  }
  PolyQ r = PolyQ::one(Alphabet::Y);
  Rat norm(1);
  for (const auto& [l, mult] : detail::grouped_factorization(w)) {
    const PolyQ pl = basis_Pi(l);
    for (int i = 0; i < mult; ++i) r = concat_product(r, pl);
    norm *= Rat(factorial(mult));
  }
  return r.scaled(Rat(1) / norm);
}

// The whole dual family {Sigma_v : weight(v) = weight} in one exact solve.
// Column v of the inverse pairing matrix lists the word coefficients of
// Sigma_v.  A singular block would mean {Pi_w} fails to be a basis, which
// signals a construction bug, not a data error.
inline std::map<Word, PolyQ, WordLess> sigma_block(int weight) {
  std::map<Word, PolyQ, WordLess> out;
  if (weight == 0) {
    out.emplace(Word(Alphabet::Y, {}), PolyQ::one(Alphabet::Y));
    return out;
  }
  std::vector<Word> ws;
  for (const Word& w : words_up_to(Alphabet::Y, weight))
    if (w.grade() == weight) ws.push_back(w);
  const size_t n = ws.size();
  Matrix<Rat> a(n, std::vector<Rat>(n, Rat(0)));
  for (size_t i = 0; i < n; ++i) {
    const PolyQ pi = basis_Pi(ws[i]);
    for (size_t j = 0; j < n; ++j) a[i][j] = pi.coeff(ws[j]);
  }
  const Matrix<Rat> inv = gauss_invert(std::move(a));
  for (size_t v = 0; v < n; ++v) {
    PolyQ s(Alphabet::Y);
    for (size_t j = 0; j < n; ++j) s.add_term(ws[j], inv[j][v]);
    out.emplace(ws[v], std::move(s));
  }
  return out;
}

inline PolyQ basis_Sigma(const Word& w) {
  if (w.alph != Alphabet::Y) throw domain_error("basis_Sigma expects a Y-word");
  return sigma_block(w.grade()).at(w);
}

// ---------------------------------------------------------------------------
// Factorization of group-like series into ordered exponential products
// ---------------------------------------------------------------------------

// Exponent of the factor attached to Lyndon word l: <S|S_l> on the shuffle
// side, <S|Sigma_l> on the quasi-shuffle side.  The input must be group-like
// to grade N (checked; the offending pair is reported otherwise).
template <class C>
std::map<Word, C, WordLess> mrs_factorize(const NCPoly<C>& s, Product side, int n,
                                          const Real& tol = Real(0)) {
  const auto rep = is_grouplike(s, side, n, tol);
  if (!rep.ok) throw domain_error("mrs_factorize: input is not group-like: " + rep.message);
  std::map<Word, C, WordLess> out;
  std::map<int, std::map<Word, PolyQ, WordLess>> sig_blocks;
  for (const Word& l : lyndon_words(s.alph, n)) {
    PolyQ dual;
    if (side == Product::Shuffle) {
      dual = basis_S(l);
    } else {
      auto& blk = sig_blocks[l.grade()];
      if (blk.empty()) blk = sigma_block(l.grade());
      dual = blk.at(l);
    }
    out[l] = pairing(s, convert_poly<C>(dual));
  }
  return out;
}

// Ordered product prod e^{c_l P_l} (resp. Pi_l) over the given exponents,
// largest Lyndon word first, truncated at grade N.
template <class C>
NCPoly<C> mrs_reconstruct(const std::map<Word, C, WordLess>& exponents, Alphabet alph,
                          Product side, int n) {
  std::vector<Word> order;
  for (const auto& [l, c] : exponents) {
    if (l.alph != alph) throw domain_error("mrs_reconstruct: alphabet mismatch");
    if (!is_lyndon(l)) throw domain_error("mrs_reconstruct: " + l.str() + " is not Lyndon");
    order.push_back(l);
  }
  std::sort(order.begin(), order.end(), [](const Word& a, const Word& b) { return lex_less(b, a); });
  NCPoly<C> result = NCPoly<C>::one(alph);
  for (const Word& l : order) {
    const C c = exponents.at(l);
    if (c == C(0)) continue;
    const PolyQ gen = side == Product::Shuffle ? basis_P(l) : basis_Pi(l);
    const NCPoly<C> factor = series_exp(convert_poly<C>(gen).scaled(c), n);
    result = concat_product(result, factor, n);
  }
  return result;
}

}  // namespace mzkit

#endif  // MZKIT_BASES_HPP
