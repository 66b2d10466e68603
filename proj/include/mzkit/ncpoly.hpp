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
// Noncommutative polynomials (finitely supported word -> coefficient maps)
// with the concatenation, shuffle and quasi-shuffle (stuffle) products, the
// two dual coproducts, the primitive projector, truncated exp/log, and a
// group-likeness checker.  The coefficient type is a template parameter; all
// exact algebra runs over Rat, numeric series over Real.

#ifndef MZKIT_NCPOLY_HPP
#define MZKIT_NCPOLY_HPP

#include <map>
#include <utility>
#include <vector>

#include "mzkit/common.hpp"
#include "mzkit/words.hpp"

namespace mzkit {

template <class C>
struct NCPoly {
  Alphabet alph = Alphabet::X;
  std::map<Word, C, WordLess> terms;

  NCPoly() = default;
  explicit NCPoly(Alphabet a) : alph(a) {}

  static NCPoly zero(Alphabet a) { return NCPoly(a); }
  static NCPoly one(Alphabet a) {
    NCPoly p(a);
    p.terms[Word(a, {})] = C(1);
    return p;
  }
  static NCPoly monomial(const Word& w, C c = C(1)) {
    NCPoly p(w.alph);
    if (!(c == C(0))) p.terms[w] = std::move(c);
    return p;
  }

  C coeff(const Word& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? C(0) : it->second;
  }

  bool is_zero() const { return terms.empty(); }

  void add_term(const Word& w, const C& c) {
    if (w.alph != alph) throw domain_error("add_term: alphabet mismatch");
    auto it = terms.find(w);
    if (it == terms.end()) {
      if (!(c == C(0))) terms.emplace(w, c);
    } else {
      it->second += c;
      if (it->second == C(0)) terms.erase(it);
    }
  }

  NCPoly& operator+=(const NCPoly& o) {
    if (o.alph != alph && !o.terms.empty()) throw domain_error("add: alphabet mismatch");
    for (const auto& [w, c] : o.terms) add_term(w, c);
    return *this;
  }
  NCPoly& operator-=(const NCPoly& o) {
    if (o.alph != alph && !o.terms.empty()) throw domain_error("sub: alphabet mismatch");
    for (const auto& [w, c] : o.terms) add_term(w, C(0) - c);
    return *this;
  }
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { a += b; return a; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { a -= b; return a; }

  NCPoly scaled(const C& k) const {
    NCPoly r(alph);
    if (k == C(0)) return r;
    for (const auto& [w, c] : terms) r.terms[w] = c * k;
    return r;
  }

  bool operator==(const NCPoly& o) const { return alph == o.alph && terms == o.terms; }

  int max_grade() const {
    int g = 0;
    for (const auto& [w, c] : terms) g = std::max(g, w.grade());
    return g;
  }

  NCPoly truncated(int maxgrade) const {
    NCPoly r(alph);
    for (const auto& [w, c] : terms)
      if (w.grade() <= maxgrade) r.terms.emplace(w, c);
    return r;
  }
};

template <class CTo, class CFrom>
NCPoly<CTo> convert_poly(const NCPoly<CFrom>& p) {
  NCPoly<CTo> r(p.alph);
  for (const auto& [w, c] : p.terms) r.terms.emplace(w, CTo(c));
  return r;
}

inline NCPoly<Real> to_real_poly(const NCPoly<Rat>& p) {
  NCPoly<Real> r(p.alph);
  for (const auto& [w, c] : p.terms) r.terms.emplace(w, to_real(c));
  return r;
}

// ---------------------------------------------------------------------------
// Products
// ---------------------------------------------------------------------------

// Concatenation product, optionally truncated by grade (maxgrade < 0: exact).
template <class C>
NCPoly<C> concat_product(const NCPoly<C>& a, const NCPoly<C>& b, int maxgrade = -1) {
  NCPoly<C> r(a.alph);
  for (const auto& [u, cu] : a.terms)
    for (const auto& [v, cv] : b.terms) {
      Word w = u.concat(v);
      if (maxgrade >= 0 && w.grade() > maxgrade) continue;
      r.add_term(w, cu * cv);
    }
  return r;
}

namespace detail {

// Word-level shuffle: au sh bv = a(u sh bv) + b(au sh v).
inline void shuffle_rec(const Word& u, const Word& v, int iu, int iv,
                        std::vector<int>& acc, NCPoly<Int>& out) {
  if (iu == u.length() && iv == v.length()) {
    out.add_term(Word(u.alph, acc), 1);
    return;
  }
  if (iu < u.length()) {
    acc.push_back(u.letters[iu]);
    shuffle_rec(u, v, iu + 1, iv, acc, out);
    acc.pop_back();
  }
  if (iv < v.length()) {
    acc.push_back(v.letters[iv]);
    shuffle_rec(u, v, iu, iv + 1, acc, out);
    acc.pop_back();
  }
}

// Word-level quasi-shuffle on Y/Y0:
//   y_i u qs y_j v = y_i (u qs y_j v) + y_j (y_i u qs v) + y_{i+j} (u qs v).
inline void stuffle_rec(const Word& u, const Word& v, int iu, int iv,
                        std::vector<int>& acc, NCPoly<Int>& out) {
  if (iu == u.length() && iv == v.length()) {
    out.add_term(Word(u.alph, acc), 1);
    return;
  }
  if (iu < u.length()) {
    acc.push_back(u.letters[iu]);
    stuffle_rec(u, v, iu + 1, iv, acc, out);
    acc.pop_back();
  }
  if (iv < v.length()) {
    acc.push_back(v.letters[iv]);
    stuffle_rec(u, v, iu, iv + 1, acc, out);
    acc.pop_back();
  }
  if (iu < u.length() && iv < v.length()) {
    acc.push_back(u.letters[iu] + v.letters[iv]);
    stuffle_rec(u, v, iu + 1, iv + 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace detail

inline NCPoly<Int> shuffle_words(const Word& u, const Word& v) {
  if (u.alph != v.alph) throw domain_error("shuffle: alphabet mismatch");
  NCPoly<Int> out(u.alph);
  std::vector<int> acc;
  acc.reserve(u.letters.size() + v.letters.size());
  detail::shuffle_rec(u, v, 0, 0, acc, out);
  return out;
}

inline NCPoly<Int> stuffle_words(const Word& u, const Word& v) {
  if (u.alph != v.alph) throw domain_error("stuffle: alphabet mismatch");
  if (u.alph == Alphabet::X) throw domain_error("stuffle is defined on Y/Y0 only");
  NCPoly<Int> out(u.alph);
  std::vector<int> acc;
  acc.reserve(u.letters.size() + v.letters.size());
  detail::stuffle_rec(u, v, 0, 0, acc, out);
  return out;
}

template <class C>
NCPoly<C> shuffle_product(const NCPoly<C>& a, const NCPoly<C>& b) {
  NCPoly<C> r(a.alph);
  for (const auto& [u, cu] : a.terms)
    for (const auto& [v, cv] : b.terms) {
      const NCPoly<Int> sw = shuffle_words(u, v);
      const C cuv = cu * cv;
      for (const auto& [w, n] : sw.terms) r.add_term(w, cuv * C(n));
    }
  return r;
}

template <class C>
NCPoly<C> stuffle_product(const NCPoly<C>& a, const NCPoly<C>& b) {
  NCPoly<C> r(a.alph);
  for (const auto& [u, cu] : a.terms)
    for (const auto& [v, cv] : b.terms) {
      const NCPoly<Int> sw = stuffle_words(u, v);
      const C cuv = cu * cv;
      for (const auto& [w, n] : sw.terms) r.add_term(w, cuv * C(n));
    }
  return r;
}

// Scalar product <p|q> = sum_w p_w q_w.
template <class C>
C pairing(const NCPoly<C>& p, const NCPoly<C>& q) {
  // iterate over the smaller support
  const NCPoly<C>& a = p.terms.size() <= q.terms.size() ? p : q;
  const NCPoly<C>& b = p.terms.size() <= q.terms.size() ? q : p;
  C acc(0);
  for (const auto& [w, c] : a.terms) acc += c * b.coeff(w);
  return acc;
}

// ---------------------------------------------------------------------------
// Coproducts
// ---------------------------------------------------------------------------

struct WordPairLess {
  bool operator()(const std::pair<Word, Word>& a, const std::pair<Word, Word>& b) const {
    if (graded_lex_less(a.first, b.first)) return true;
    if (graded_lex_less(b.first, a.first)) return false;
    return graded_lex_less(a.second, b.second);
  }
};

template <class C>
using TensorPoly = std::map<std::pair<Word, Word>, C, WordPairLess>;

// Unshuffle coproduct: the concatenation-algebra morphism with every letter
// primitive.  <D(w) | u (x) v> = <u sh v | w>.
template <class C>
TensorPoly<C> coproduct_shuffle(const NCPoly<C>& p) {
  TensorPoly<C> out;
  for (const auto& [w, c] : p.terms) {
    const int n = w.length();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      Word u(w.alph, {}), v(w.alph, {});
      for (int i = 0; i < n; ++i)
        ((mask >> i) & 1u ? u : v).letters.push_back(w.letters[i]);
      out[{u, v}] += c;
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == C(0)) ? out.erase(it) : std::next(it);
  return out;
}

// Dual of the quasi-shuffle: morphism for concatenation with
//   D(y_s) = y_s (x) 1 + 1 (x) y_s + sum_{i+j=s, i,j>=1} y_i (x) y_j.
template <class C>
TensorPoly<C> coproduct_stuffle(const NCPoly<C>& p) {
  if (p.alph == Alphabet::X) throw domain_error("coproduct_stuffle is defined on Y/Y0 only");
  TensorPoly<C> out;
  for (const auto& [w, c] : p.terms) {
    TensorPoly<C> cur;
    cur[{Word(w.alph, {}), Word(w.alph, {})}] = c;
    for (int s : w.letters) {
      TensorPoly<C> next;
      for (const auto& [uv, cc] : cur) {
        {
          Word u = uv.first; u.letters.push_back(s);
          next[{u, uv.second}] += cc;
        }
        {
          Word v = uv.second; v.letters.push_back(s);
          next[{uv.first, v}] += cc;
        }
        for (int i = 1; i < s; ++i) {
          Word u = uv.first; u.letters.push_back(i);
          Word v = uv.second; v.letters.push_back(s - i);
          next[{u, v}] += cc;
        }
      }
      cur = std::move(next);
    }
    for (const auto& [uv, cc] : cur) out[uv] += cc;
  }
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == C(0)) ? out.erase(it) : std::next(it);
  return out;
}

// ---------------------------------------------------------------------------
// Primitive projector pi1 (quasi-shuffle side)
// ---------------------------------------------------------------------------

namespace detail {

// Reduced coproduct: D(w) - w(x)1 - 1(x)w, i.e. only splittings into two
// nonempty parts.
template <class C>
TensorPoly<C> reduced_coproduct_stuffle(const NCPoly<C>& p) {
  TensorPoly<C> d = coproduct_stuffle(p);
  for (auto it = d.begin(); it != d.end();)
    it = (it->first.first.empty() || it->first.second.empty()) ? d.erase(it) : std::next(it);
  return d;
}

}  // namespace detail

// pi1(w) = sum_{k>=1} ((-1)^{k-1}/k) * concat of the k-fold reduced coproduct:
// the coefficient of u1...uk collects <w | u1 qs ... qs uk> over nonempty ui.
// The sum stops once the iterated reduced coproduct vanishes (k exceeds the
// weight of w).
template <class C>
NCPoly<C> pi1(const NCPoly<C>& p) {
  if (p.alph == Alphabet::X) throw domain_error("pi1 is defined on Y/Y0 only");
  NCPoly<C> result(p.alph);

  // layers[k] holds tensors of k nonempty slots, with the last slot kept as a
  // polynomial so the reduced coproduct can be applied to it again.  We store
  // a flattened representation: (prefix word, last-slot word) -> coeff, where
  // prefix is the concatenation of slots 1..k-1.
  TensorPoly<C> layer;
  for (const auto& [w, c] : p.terms) {
    if (w.empty()) continue;  // constants have no primitive part
    layer[{Word(p.alph, {}), w}] = c;
  }
  int k = 1;
  while (!layer.empty()) {
    const C sign = (k % 2 == 1) ? C(1) : C(0) - C(1);
    for (const auto& [pr, c] : layer)
      result.add_term(pr.first.concat(pr.second), c * sign / C(k));
    // split the last slot once more
    TensorPoly<C> next;
    for (const auto& [pr, c] : layer) {
      const TensorPoly<C> d =
          detail::reduced_coproduct_stuffle(NCPoly<C>::monomial(pr.second, C(1)));
      for (const auto& [uv, n] : d)
        next[{pr.first.concat(uv.first), uv.second}] += c * n;
    }
    for (auto it = next.begin(); it != next.end();)
      it = (it->second == C(0)) ? next.erase(it) : std::next(it);
    layer = std::move(next);
    ++k;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Truncated exp / log and group-likeness
// ---------------------------------------------------------------------------

template <class C>
NCPoly<C> series_exp(const NCPoly<C>& p, int maxgrade) {
  if (!(p.coeff(Word(p.alph, {})) == C(0)))
    throw domain_error("series_exp needs a vanishing constant term");
  NCPoly<C> result = NCPoly<C>::one(p.alph);
  NCPoly<C> power = NCPoly<C>::one(p.alph);
  const NCPoly<C> pt = p.truncated(maxgrade);
  C kfact(1);
  for (int k = 1; k <= maxgrade; ++k) {
    power = concat_product(power, pt, maxgrade);
    if (power.is_zero()) break;
    kfact *= C(k);
    for (const auto& [w, c] : power.terms) result.add_term(w, c / kfact);
  }
  return result;
}

template <class C>
NCPoly<C> series_log(const NCPoly<C>& s, int maxgrade) {
  if (!(s.coeff(Word(s.alph, {})) == C(1)))
    throw domain_error("series_log needs constant term 1");
  NCPoly<C> u = s.truncated(maxgrade);
  u.add_term(Word(s.alph, {}), C(0) - C(1));  // u = s - 1
  NCPoly<C> result(s.alph);
  NCPoly<C> power = NCPoly<C>::one(s.alph);
  for (int k = 1; k <= maxgrade; ++k) {
    power = concat_product(power, u, maxgrade);
    if (power.is_zero()) break;
    const C sign = (k % 2 == 1) ? C(1) : C(0) - C(1);
    for (const auto& [w, c] : power.terms) result.add_term(w, c * sign / C(k));
  }
  return result;
}

enum class Product { Shuffle, Stuffle };

template <class C>
struct GrouplikeReport {
  bool ok = true;
  Word u, v;       // first offending pair when !ok
  C lhs{}, rhs{};  // <S|u><S|v> vs <S|u*v>
  std::string message;
};

// Checks <S|1> = 1 and <S|u><S|v> = <S|u*v> for all nonempty u, v with
// grade(u)+grade(v) <= maxgrade.  For exact coefficient types pass tol = 0.
template <class C>
GrouplikeReport<C> is_grouplike(const NCPoly<C>& s, Product law, int maxgrade,
                                const Real& tol = Real(0)) {
  GrouplikeReport<C> rep;
  const auto close = [&](const C& a, const C& b) {
    if (tol == Real(0)) return a == b;
    return boost::multiprecision::abs(Real(a) - Real(b)) <= tol;
  };
  if (!close(s.coeff(Word(s.alph, {})), C(1))) {
    rep.ok = false;
    rep.message = "constant term differs from 1";
    return rep;
  }
  const std::vector<Word> ws = words_up_to(s.alph, maxgrade - 1);
  for (const Word& u : ws)
    for (const Word& v : ws) {
      if (u.grade() + v.grade() > maxgrade) continue;
      const NCPoly<Int> prod =
          law == Product::Shuffle ? shuffle_words(u, v) : stuffle_words(u, v);
      C rhs(0);
      for (const auto& [w, n] : prod.terms) rhs += C(n) * s.coeff(w);
      const C lhs = s.coeff(u) * s.coeff(v);
      if (!close(lhs, rhs)) {
        rep.ok = false;
        rep.u = u;
        rep.v = v;
        rep.lhs = lhs;
        rep.rhs = rhs;
        rep.message = "character identity fails at (" + u.str() + ", " + v.str() + ")";
        return rep;
      }
    }
  return rep;
}

// ---------------------------------------------------------------------------
// Projections between the alphabets, extended linearly
// ---------------------------------------------------------------------------

// X-polynomials -> Y-polynomials: words ending in x0 are annihilated, the
// constant term survives, encodable words map through the index bijection.
template <class C>
NCPoly<C> pi_y(const NCPoly<C>& p) {
  if (p.alph != Alphabet::X) throw domain_error("pi_y expects X-support");
  NCPoly<C> r(Alphabet::Y);
  for (const auto& [w, c] : p.terms) {
    if (w.empty()) {
      r.add_term(Word(Alphabet::Y, {}), c);
      continue;
    }
    const auto yw = pi_y_word(w);
    if (yw) r.add_term(as_y(*yw), c);
  }
  return r;
}

template <class C>
NCPoly<C> pi_x(const NCPoly<C>& p) {
  if (p.alph == Alphabet::X) throw domain_error("pi_x expects Y-support");
  NCPoly<C> r(Alphabet::X);
  for (const auto& [w, c] : p.terms) {
    if (w.empty()) r.add_term(Word(Alphabet::X, {}), c);
    else r.add_term(pi_x_word(w), c);
  }
  return r;
}

}  // namespace mzkit

#endif  // MZKIT_NCPOLY_HPP
