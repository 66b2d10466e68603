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
// A restricted rational-expression layer: finite linear combinations of
// shuffle monomials built from starred atoms (c*letter)* and plain words.
// This is exactly the fragment needed to extend word-indexed sums to
// negative indices:
//
//   * same-letter stars merge under shuffle, (a x)* sh (b x)* = ((a+b) x)*;
//   * star concat-powers expand, (a x)^{*i} = (a x)* sh (1 + a x)^{i-1};
//   * the lambda map sends (k x1)* to t^k, a diagonal bijection between
//     star polynomials in x1* and one-variable polynomials (t standing for
//     1/(1-z) in the analytic picture);
//   * the eta map sends (k y1)* to the exact sequence n -> prod (1 + k/m),
//     i.e. C(n+k, k) for integer k.
//
// OneVarPoly carries the polynomial triple used downstream: p itself, the
// exponential transform p~ (p_k / k!), and the factorial transform p^ (k! p_k).

#ifndef MZKIT_RATEXPR_HPP
#define MZKIT_RATEXPR_HPP

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "mzkit/ncpoly.hpp"
#include "mzkit/words.hpp"

namespace mzkit {

// ---------------------------------------------------------------------------
// One-variable polynomials with the three avatar views
// ---------------------------------------------------------------------------

struct OneVarPoly {
  std::vector<Rat> coef;  // coef[k] multiplies t^k

  OneVarPoly() = default;
  explicit OneVarPoly(std::vector<Rat> c) : coef(std::move(c)) { strip(); }

  static OneVarPoly monomial(int k, Rat c = Rat(1)) {
    OneVarPoly p;
    p.coef.assign(k + 1, Rat(0));
    p.coef[k] = std::move(c);
    p.strip();
    return p;
  }

  void strip() {
    while (!coef.empty() && coef.back() == Rat(0)) coef.pop_back();
  }

  bool is_zero() const { return coef.empty(); }
  int degree() const { return static_cast<int>(coef.size()) - 1; }  // -1 for 0
  int valuation() const {
    for (size_t k = 0; k < coef.size(); ++k)
      if (coef[k] != Rat(0)) return static_cast<int>(k);
    return -1;
  }
  Rat at(int k) const {
    return (k >= 0 && k < static_cast<int>(coef.size())) ? coef[k] : Rat(0);
  }

  Rat eval(const Rat& t) const {
    Rat acc(0);
    for (size_t k = coef.size(); k-- > 0;) acc = acc * t + coef[k];
    return acc;
  }
  // p~(t) = sum p_k t^k / k!
  Rat eval_tilde(const Rat& t) const {
    Rat acc(0), pw(1);
    Int f(1);
    for (size_t k = 0; k < coef.size(); ++k) {
      if (k > 0) { pw *= t; f *= Int(k); }
      acc += coef[k] * pw / Rat(f);
    }
    return acc;
  }
  // p^ has coefficients k! p_k
  OneVarPoly factorial_transform() const {
    OneVarPoly r = *this;
    Int f(1);
    for (size_t k = 0; k < r.coef.size(); ++k) {
      if (k > 0) f *= Int(k);
      r.coef[k] *= Rat(f);
    }
    r.strip();
    return r;
  }
  OneVarPoly exp_transform() const {  // coefficients p_k / k!
    OneVarPoly r = *this;
    Int f(1);
    for (size_t k = 0; k < r.coef.size(); ++k) {
      if (k > 0) f *= Int(k);
      r.coef[k] /= Rat(f);
    }
    r.strip();
    return r;
  }

  OneVarPoly& operator+=(const OneVarPoly& o) {
    if (o.coef.size() > coef.size()) coef.resize(o.coef.size(), Rat(0));
    for (size_t k = 0; k < o.coef.size(); ++k) coef[k] += o.coef[k];
    strip();
    return *this;
  }
  friend OneVarPoly operator+(OneVarPoly a, const OneVarPoly& b) { a += b; return a; }
  OneVarPoly scaled(const Rat& c) const {
    OneVarPoly r = *this;
    for (auto& x : r.coef) x *= c;
    r.strip();
    return r;
  }
  friend OneVarPoly operator*(const OneVarPoly& a, const OneVarPoly& b) {
    if (a.is_zero() || b.is_zero()) return OneVarPoly();
    OneVarPoly r;
    r.coef.assign(a.coef.size() + b.coef.size() - 1, Rat(0));
    for (size_t i = 0; i < a.coef.size(); ++i)
      for (size_t j = 0; j < b.coef.size(); ++j) r.coef[i + j] += a.coef[i] * b.coef[j];
    r.strip();
    return r;
  }
  bool operator==(const OneVarPoly& o) const { return coef == o.coef; }

  std::string str() const {
    if (coef.empty()) return "0";
    std::string s;
    for (size_t k = coef.size(); k-- > 0;) {
      if (coef[k] == Rat(0)) continue;
      if (!s.empty()) s += " + ";
      s += rat_str(coef[k]);
      if (k >= 1) s += "*t";
      if (k >= 2) s += "^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
  }
};

// ---------------------------------------------------------------------------
// Rational expressions
// ---------------------------------------------------------------------------

struct StarAtom {
  int letter = 1;  // subscript: 0/1 on X, 1 on Y
  Rat c;           // (c * letter)*
  int power = 1;   // concatenation power of the starred atom

  bool operator==(const StarAtom& o) const {
    return letter == o.letter && c == o.c && power == o.power;
  }
};

struct RatTerm {
  std::vector<StarAtom> stars;
  Word word;  // plain word factor (empty word = none)
  Rat coeff = Rat(1);
};

struct RatExpr {
  Alphabet alph = Alphabet::X;
  std::vector<RatTerm> terms;

  RatExpr() = default;
  explicit RatExpr(Alphabet a) : alph(a) {}

  static RatExpr zero(Alphabet a) { return RatExpr(a); }
  static RatExpr one(Alphabet a) {
    RatExpr e(a);
    e.terms.push_back({{}, Word(a, {}), Rat(1)});
    return e;
  }
  static RatExpr star(Alphabet a, int letter, Rat c, int power = 1) {
    RatExpr e(a);
    e.terms.push_back({{StarAtom{letter, std::move(c), power}}, Word(a, {}), Rat(1)});
    return e;
  }
  static RatExpr from_word(const Word& w, Rat coeff = Rat(1)) {
    RatExpr e(w.alph);
    e.terms.push_back({{}, w, std::move(coeff)});
    return e;
  }

  RatExpr& operator+=(const RatExpr& o) {
    if (o.terms.empty()) return *this;
    if (terms.empty()) alph = o.alph;
    if (alph != o.alph) throw domain_error("RatExpr add: alphabet mismatch");
    terms.insert(terms.end(), o.terms.begin(), o.terms.end());
    return *this;
  }
  friend RatExpr operator+(RatExpr a, const RatExpr& b) { a += b; return a; }
  RatExpr scaled(const Rat& c) const {
    RatExpr r = *this;
    for (auto& t : r.terms) t.coeff *= c;
    return r;
  }
  friend RatExpr operator-(const RatExpr& a, const RatExpr& b) {
    return a + b.scaled(Rat(-1));
  }
};

namespace detail {

inline bool star_atom_less(const StarAtom& a, const StarAtom& b) {
  return std::tie(a.letter, a.c) < std::tie(b.letter, b.c);
}

// canonical key for merging like terms of a normalized expression
inline bool term_key_less(const RatTerm& a, const RatTerm& b) {
  if (a.stars.size() != b.stars.size()) return a.stars.size() < b.stars.size();
  for (size_t i = 0; i < a.stars.size(); ++i) {
    if (a.stars[i].letter != b.stars[i].letter) return a.stars[i].letter < b.stars[i].letter;
    if (a.stars[i].c != b.stars[i].c) return a.stars[i].c < b.stars[i].c;
  }
  return graded_lex_less(a.word, b.word);
}

inline bool term_key_equal(const RatTerm& a, const RatTerm& b) {
  return !term_key_less(a, b) && !term_key_less(b, a);
}

}  // namespace detail

// Rewrites an expression into the canonical normal form: every star power
// expanded via (a x)^{*i} = (a x)* sh (1 + a x)^{i-1}, same-letter stars
// merged via (a x)* sh (b x)* = ((a+b) x)*, zero-parameter stars dropped
// ((0 x)* = 1), like terms collected, deterministic term order.
inline RatExpr star_shuffle_normalize(const RatExpr& e) {
  RatExpr out(e.alph);
  for (const RatTerm& term : e.terms) {
    if (term.coeff == Rat(0)) continue;
    if (term.word.alph != e.alph) throw domain_error("RatExpr: word alphabet mismatch");
    // expand star powers one atom at a time
    std::vector<RatTerm> acc{{{}, term.word, term.coeff}};
    for (const StarAtom& atom : term.stars) {
      if (atom.power < 0) throw domain_error("RatExpr: negative star power");
      if (atom.power == 0 || atom.c == Rat(0)) continue;  // (a x)^{*0} = (0 x)* = 1
      const bool valid_letter = (e.alph == Alphabet::X) ? (atom.letter == 0 || atom.letter == 1)
                                                        : (atom.letter == 1);
      if (!valid_letter)
        throw domain_error("RatExpr: unsupported star letter for alphabet " + alphabet_name(e.alph));
      std::vector<RatTerm> next;
      for (const RatTerm& t : acc) {
        // binomial expansion of (1 + a x)^{power-1}, shuffled onto the word
        for (int j = 0; j <= atom.power - 1; ++j) {
          Rat c = t.coeff * Rat(binomial(Int(atom.power - 1), j));
          for (int i = 0; i < j; ++i) c *= atom.c;
          const Word xj(e.alph, std::vector<int>(j, atom.letter));
          for (const auto& [w, n] : shuffle_words(t.word, xj).terms) {
            RatTerm nt;
            nt.stars = t.stars;
            nt.stars.push_back({atom.letter, atom.c, 1});
            nt.word = w;
            nt.coeff = c * Rat(n);
            next.push_back(std::move(nt));
          }
        }
      }
      acc = std::move(next);
    }
    // merge same-letter stars within each term
    for (RatTerm& t : acc) {
      std::map<int, Rat> merged;
      for (const StarAtom& a : t.stars) merged[a.letter] += a.c;
      t.stars.clear();
      for (const auto& [letter, c] : merged)
        if (c != Rat(0)) t.stars.push_back({letter, c, 1});
      out.terms.push_back(std::move(t));
    }
  }
  // collect like terms
  std::sort(out.terms.begin(), out.terms.end(), detail::term_key_less);
  std::vector<RatTerm> collected;
  for (RatTerm& t : out.terms) {
    if (!collected.empty() && detail::term_key_equal(collected.back(), t))
      collected.back().coeff += t.coeff;
    else
      collected.push_back(std::move(t));
  }
  collected.erase(std::remove_if(collected.begin(), collected.end(),
                                 [](const RatTerm& t) { return t.coeff == Rat(0); }),
                  collected.end());
  out.terms = std::move(collected);
  return out;
}

inline bool rat_equal(const RatExpr& a, const RatExpr& b) {
  const RatExpr na = star_shuffle_normalize(a), nb = star_shuffle_normalize(b);
  if (na.terms.size() != nb.terms.size()) return false;
  for (size_t i = 0; i < na.terms.size(); ++i) {
    if (!detail::term_key_equal(na.terms[i], nb.terms[i])) return false;
    if (na.terms[i].coeff != nb.terms[i].coeff) return false;
  }
  return true;
}

// Shuffle product of two expressions (normalizing afterwards).
inline RatExpr rat_shuffle(const RatExpr& a, const RatExpr& b) {
  if (a.terms.empty() || b.terms.empty()) return RatExpr::zero(a.alph);
  if (a.alph != b.alph) throw domain_error("rat_shuffle: alphabet mismatch");
  RatExpr out(a.alph);
  for (const RatTerm& s : a.terms)
    for (const RatTerm& t : b.terms) {
      for (const auto& [w, n] : shuffle_words(s.word, t.word).terms) {
        RatTerm nt;
        nt.stars = s.stars;
        nt.stars.insert(nt.stars.end(), t.stars.begin(), t.stars.end());
        nt.word = w;
        nt.coeff = s.coeff * t.coeff * Rat(n);
        out.terms.push_back(std::move(nt));
      }
    }
  return star_shuffle_normalize(out);
}

// Geometric expansion of one starred atom, truncated by grade:
// (c x)* = sum_j c^j x^j.
inline NCPoly<Rat> star_expand(Alphabet a, int letter, const Rat& c, int maxgrade) {
  NCPoly<Rat> out(a);
  Rat pw(1);
  for (int j = 0;; ++j) {
    const Word w(a, std::vector<int>(j, letter));
    if (w.grade() > maxgrade) break;
    out.add_term(w, pw);
    pw *= c;
  }
  return out;
}

// Expansion of a whole expression into a word polynomial, truncated by grade.
inline NCPoly<Rat> rat_expand(const RatExpr& e, int maxgrade) {
  const RatExpr n = star_shuffle_normalize(e);
  NCPoly<Rat> out(n.alph);
  for (const RatTerm& t : n.terms) {
    NCPoly<Rat> acc = NCPoly<Rat>::monomial(t.word, t.coeff);
    for (const StarAtom& s : t.stars)
      acc = shuffle_product(acc, star_expand(n.alph, s.letter, s.c, maxgrade));
    out += acc.truncated(maxgrade);
  }
  return out;
}

// ---------------------------------------------------------------------------
// The lambda bijection ZZ[x1*] <-> one-variable polynomials
// ---------------------------------------------------------------------------

// (k x1)* -> t^k.  Requires a normalized-normalizable expression whose terms
// are pure x1-stars with nonnegative integer parameters and no word factor.
inline OneVarPoly lambda_map(const RatExpr& e) {
  if (e.alph != Alphabet::X && !e.terms.empty())
    throw domain_error("lambda_map expects an X-expression");
  const RatExpr n = star_shuffle_normalize(e);
  OneVarPoly p;
  for (const RatTerm& t : n.terms) {
    if (!t.word.empty()) throw domain_error("lambda_map: plain word factor present");
    Int k(0);
    for (const StarAtom& s : t.stars) {
      if (s.letter != 1) throw domain_error("lambda_map: atom other than x1* present");
      if (denominator(s.c) != 1 || s.c < 0)
        throw domain_error("lambda_map: star parameter is not a nonnegative integer");
      k += numerator(s.c);
    }
    p += OneVarPoly::monomial(static_cast<int>(k), t.coeff);
  }
  return p;
}

// t^k -> (k x1)*.
inline RatExpr lambda_inv(const OneVarPoly& p) {
  RatExpr e(Alphabet::X);
  for (int k = 0; k <= p.degree(); ++k) {
    if (p.at(k) == Rat(0)) continue;
    if (k == 0) e += RatExpr::one(Alphabet::X).scaled(p.at(k));
    else e += RatExpr::star(Alphabet::X, 1, Rat(k)).scaled(p.at(k));
  }
  return star_shuffle_normalize(e);
}

// p^(x1*) = sum_k p_k (x1*)^{sh k} = sum_k p_k (k x1)*, i.e. the factorial
// transform evaluated on shuffle powers of x1*; identical to lambda_inv.
inline RatExpr pcheck_substitute(const OneVarPoly& p) { return lambda_inv(p); }

// ---------------------------------------------------------------------------
// The eta character QQ[y1*] -> exact sequences
// ---------------------------------------------------------------------------

// (k y1)* evaluated at n: prod_{m=1}^n (1 + k/m), which equals C(n+k, k) for
// integer k >= 0.  Extended linearly; word factors are outside the domain.
inline Rat eta_eval(const RatExpr& e, int n) {
  if (n < 0) throw domain_error("eta_eval: n must be >= 0");
  if (e.alph == Alphabet::X && !e.terms.empty())
    throw domain_error("eta_eval expects a Y-expression");
  const RatExpr ne = star_shuffle_normalize(e);
  Rat acc(0);
  for (const RatTerm& t : ne.terms) {
    if (!t.word.empty()) throw domain_error("eta_eval: plain word factor present");
    Rat k(0);
    for (const StarAtom& s : t.stars) {
      if (s.letter != 1) throw domain_error("eta_eval: atom other than y1* present");
      k += s.c;
    }
    Rat prod(1);
    for (int m = 1; m <= n; ++m) prod *= Rat(1) + k / Rat(m);
    acc += t.coeff * prod;
  }
  return acc;
}

}  // namespace mzkit

#endif  // MZKIT_RATEXPR_HPP
