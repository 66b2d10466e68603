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
// Finite-part machinery for negative-index sums.
//
// For a Y0-word w = y_{s1}...y_{sr} the sums H^-_w(n) = sum n^{s1}... grow
// polynomially, and the generating series Li^-_w(z) is a polynomial p in
// t = 1/(1-z) of degree D = (weight of w) + (length of w).  This header
// recovers that polynomial exactly, maps it back to a star expression
// R_w with lambda_inv, and extracts the two finite values attached to w:
//
//   zeta_sh value   p(1)   (an integer; 0 for every nonempty word),
//   gamma value     p~(1)  (the exponential-transform value at 1).
//
// It also provides the two regularized characters used to define those
// values through evaluation maps:
//
//   zeta_shuffle_reg   extends the convergent zeta to all X-words by
//                      forcing zeta(x0) = zeta(x1) = 0 and multiplicativity
//                      under the shuffle product;
//   gamma_char         extends the convergent zeta to all Y-words by
//                      forcing gamma(y1) = euler_gamma() and
//                      multiplicativity under the stuffle product;
//   zeta_stuffle_reg   same recursion with gamma(y1) = 0 instead.
//
// Star atoms evaluate to closed forms: (t x1)* -> 1 under zeta_shuffle_reg
// and (t y1)* -> 1/Gamma(1+t) under gamma_char.
//
// Finally, r_stirling_formula implements a closed summation formula for
// R_w built from Stirling-number combinations of x1-stars, together with a
// comparison report against the interpolation route.  The two routes do not
// coincide in general; the report records exactly where they differ.

#ifndef MZKIT_NEGREG_HPP
#define MZKIT_NEGREG_HPP

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "mzkit/analytic.hpp"
#include "mzkit/linalg.hpp"
#include "mzkit/ncpoly.hpp"
#include "mzkit/ratexpr.hpp"
#include "mzkit/words.hpp"

namespace mzkit {

// ---------------------------------------------------------------------------
// The polynomial avatar of a negative-index word
// ---------------------------------------------------------------------------

// Exact polynomial p with Li^-_w(z) = p(1/(1-z)), equivalently with
// H^-_w(n) = sum_k p_k C(n+k, k).  Recovered by solving the (D+1)x(D+1)
// interpolation system on n = 0..D in the binomial basis; the system matrix
// is unimodular, so the fit is exact rational arithmetic throughout.
inline OneVarPoly p_of_word(const Word& w) {
  if (w.alph == Alphabet::X)
    throw domain_error("p_of_word expects a Y0-word");
  const int d = static_cast<int>(w.subscript_sum()) + w.length();
  Matrix<Rat> m(d + 1, std::vector<Rat>(d + 1));
  std::vector<Rat> h(d + 1);
  for (int n = 0; n <= d; ++n) {
    for (int k = 0; k <= d; ++k) m[n][k] = Rat(binomial(Int(n + k), k));
    h[n] = h_neg_eval(w, n);
  }
  const std::vector<Rat> a = gauss_solve(m, h);
  OneVarPoly p;
  for (int k = 0; k <= d; ++k)
    if (a[k] != Rat(0)) p += OneVarPoly::monomial(k, a[k]);
  return p;
}

// R_w = sum_k p_k (k x1)*, the star expression with Li_{R_w} = Li^-_w.
inline RatExpr r_of_word(const Word& w) { return lambda_inv(p_of_word(w)); }

// ---------------------------------------------------------------------------
// Projection of star expressions to the Y side
// ---------------------------------------------------------------------------

// Linear extension of the word projection: word factors ending in x0 are
// killed, other word factors are re-encoded over Y, x1-stars become
// y1-stars with the same parameter, and x0-stars collapse to 1 (every
// positive concatenation power of x0 ends in x0).
inline RatExpr pi_y_ratexpr(const RatExpr& e) {
  if (e.alph != Alphabet::X && !e.terms.empty())
    throw domain_error("pi_y_ratexpr expects an X-expression");
  RatExpr out(Alphabet::Y);
  for (const RatTerm& t : e.terms) {
    RatTerm nt;
    nt.coeff = t.coeff;
    bool dead = false;
    for (const StarAtom& s : t.stars) {
      if (s.letter == 1) nt.stars.push_back(StarAtom{1, s.c, s.power});
      // x0-stars project to 1: drop the atom
    }
    if (t.word.empty()) {
      nt.word = Word(Alphabet::Y, {});
    } else {
      const auto proj = pi_y_word(t.word);
      if (!proj) dead = true;
      else nt.word = *proj;
    }
    if (!dead) out.terms.push_back(std::move(nt));
  }
  return star_shuffle_normalize(out);
}

// ---------------------------------------------------------------------------
// Suffix-product constants
// ---------------------------------------------------------------------------

// C^-_w = prod over nonempty suffixes v of w of 1/((weight of v)+(length of v)).
inline Rat c_minus(const Word& w) {
  if (w.alph == Alphabet::X) throw domain_error("c_minus expects a Y0-word");
  if (w.empty()) throw domain_error("c_minus: empty word");
  Rat c(1);
  long grade = 0;
  for (int i = w.length(); i-- > 0;) {
    grade += w.letters[i] + 1;
    c /= Rat(grade);
  }
  return c;
}

// B^-_w = D! C^-_w, the leading coefficient of p_of_word(w).
inline Rat b_minus(const Word& w) {
  const int d = static_cast<int>(w.subscript_sum()) + w.length();
  return Rat(factorial(d)) * c_minus(w);
}

// ---------------------------------------------------------------------------
// Regularized characters
// ---------------------------------------------------------------------------

namespace detail {

// Shared recursion for both regularized characters.  A word outside the
// convergent cone is reduced by stripping one letter at the divergent end
// and expanding base * letter under the product law: the coefficient of w
// in that expansion is the run length at the stripped end, and every other
// term has a strictly shorter divergent run, so the recursion terminates
// in the convergent cone (or at the empty word).
inline Real char_reg_word(const Word& w, bool shuffle_side, const Real& letter_value,
                          const EvalConfig& cfg,
                          std::map<Word, Real, WordLess>& memo) {
  if (w.empty()) return Real(1);
  const auto it = memo.find(w);
  if (it != memo.end()) return it->second;

  Real val;
  bool convergent;
  if (shuffle_side) {
    convergent = w.letters.front() == 0 && w.letters.back() == 1;
  } else {
    for (const int s : w.letters)
      if (s == 0) throw domain_error("stuffle-regularized character: y0 outside domain");
    convergent = w.letters.front() != 1;
  }
  if (convergent) {
    val = zeta_convergent(w, cfg);
  } else {
    int strip_letter;
    Word base(w.alph, {});
    bool from_back = false;
    if (shuffle_side && w.letters.back() == 0) {
      from_back = true;
      strip_letter = 0;
    } else {
      // shuffle side: starts with x1 and ends with x1; stuffle side: starts y1
      strip_letter = 1;
    }
    std::vector<int> rest = w.letters;
    if (from_back) rest.pop_back();
    else rest.erase(rest.begin());
    base = Word(w.alph, rest);
    const Word lw(w.alph, {strip_letter});
    const NCPoly<Int> prod =
        shuffle_side ? shuffle_words(base, lw) : stuffle_words(base, lw);
    const Int c = prod.coeff(w);
    const Real base_val = char_reg_word(base, shuffle_side, letter_value, cfg, memo);
    Real acc = base_val * letter_value;  // value of the full product
    for (const auto& [v, cv] : prod.terms) {
      if (v == w) continue;
      acc -= to_real(Rat(cv)) * char_reg_word(v, shuffle_side, letter_value, cfg, memo);
    }
    val = acc / to_real(Rat(c));
  }
  memo[w] = val;
  return val;
}

}  // namespace detail

// Shuffle-regularized zeta on arbitrary X-words: the unique extension of
// the convergent values with zeta(x0) = zeta(x1) = 0 that stays a character
// of the shuffle algebra.
inline Real zeta_shuffle_reg(const Word& w, const EvalConfig& cfg = {}) {
  if (w.alph != Alphabet::X) throw domain_error("zeta_shuffle_reg expects an X-word");
  std::map<Word, Real, WordLess> memo;
  return detail::char_reg_word(w, true, Real(0), cfg, memo);
}

inline Real zeta_shuffle_reg(const NCPoly<Rat>& p, const EvalConfig& cfg = {}) {
  if (p.alph != Alphabet::X && !p.terms.empty())
    throw domain_error("zeta_shuffle_reg expects an X-polynomial");
  std::map<Word, Real, WordLess> memo;
  Real acc(0);
  for (const auto& [w, c] : p.terms)
    acc += to_real(c) * detail::char_reg_word(w, true, Real(0), cfg, memo);
  return acc;
}

// Extension to star expressions: every (t x1)* evaluates to 1, so a star
// factor contributes nothing but its word part.  x0-stars are outside the
// domain.
inline Real zeta_shuffle_reg(const RatExpr& e, const EvalConfig& cfg = {}) {
  if (e.alph != Alphabet::X && !e.terms.empty())
    throw domain_error("zeta_shuffle_reg expects an X-expression");
  const RatExpr n = star_shuffle_normalize(e);
  std::map<Word, Real, WordLess> memo;
  Real acc(0);
  for (const RatTerm& t : n.terms) {
    for (const StarAtom& s : t.stars)
      if (s.letter != 1)
        throw domain_error("zeta_shuffle_reg: x0-star outside domain");
    acc += to_real(t.coeff) * detail::char_reg_word(t.word, true, Real(0), cfg, memo);
  }
  return acc;
}

// Stuffle-regularized characters on Y-words.  gamma_char sends y1 to
// euler_gamma(); zeta_stuffle_reg sends y1 to 0.  Both agree with the
// convergent zeta away from leading y1-runs.
inline Real gamma_char(const Word& w, const EvalConfig& cfg = {}) {
  if (w.alph == Alphabet::X) throw domain_error("gamma_char expects a Y-word");
  std::map<Word, Real, WordLess> memo;
  return detail::char_reg_word(w, false, euler_gamma(), cfg, memo);
}

inline Real zeta_stuffle_reg(const Word& w, const EvalConfig& cfg = {}) {
  if (w.alph == Alphabet::X) throw domain_error("zeta_stuffle_reg expects a Y-word");
  std::map<Word, Real, WordLess> memo;
  return detail::char_reg_word(w, false, Real(0), cfg, memo);
}

// gamma_char on star expressions over Y: (t y1)* -> 1/Gamma(1+t).
inline Real gamma_char(const RatExpr& e, const EvalConfig& cfg = {}) {
  if (e.alph == Alphabet::X && !e.terms.empty())
    throw domain_error("gamma_char expects a Y-expression");
  const RatExpr n = star_shuffle_normalize(e);
  const Real g = euler_gamma();
  std::map<Word, Real, WordLess> memo;
  Real acc(0);
  for (const RatTerm& t : n.terms) {
    Real factor = to_real(t.coeff);
    for (const StarAtom& s : t.stars) {
      if (s.letter != 1)
        throw domain_error("gamma_char: atom other than y1* present");
      factor /= boost::math::tgamma(Real(1) + to_real(s.c));
    }
    acc += factor * detail::char_reg_word(t.word, false, g, cfg, memo);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Finite values of negative-index zeta
// ---------------------------------------------------------------------------

// The two finite parts attached to the index (s1,...,sr): the integer p(1)
// (the value of the shuffle-regularized character on R_w) and the rational
// p~(1) (the value of gamma_char on pi_y(R_w)).
inline std::pair<Int, Rat> neg_zeta(const std::vector<int>& s) {
  const Word w(Alphabet::Y0, s);
  const OneVarPoly p = p_of_word(w);
  const Rat p1 = p.eval(Rat(1));
  if (denominator(p1) != 1)
    throw domain_error("neg_zeta: p(1) is not an integer");
  return {numerator(p1), p.eval_tilde(Rat(1))};
}

// ---------------------------------------------------------------------------
// Stirling-formula route to R_w
// ---------------------------------------------------------------------------

// Stirling numbers of the second kind, S2(k, j).
inline Int stirling2(int k, int j) {
  if (k < 0 || j < 0 || j > k) return Int(0);
  static std::vector<std::vector<Int>> table{{Int(1)}};  // table[k][j]
  while (static_cast<int>(table.size()) <= k) {
    const int kk = static_cast<int>(table.size());
    std::vector<Int> row(kk + 1, Int(0));
    for (int jj = 1; jj <= kk; ++jj)
      row[jj] = (jj <= kk - 1 ? Int(jj) * table[kk - 1][jj] : Int(0)) +
                table[kk - 1][jj - 1];
    table.push_back(std::move(row));
  }
  return table[k][j];
}

namespace detail {

// The building blocks of the closed formula: rho_0 = x1* - 1 and, for k > 0,
// rho_k = sum_{j=1}^{k} S2(k,j) (j!)^2 sum_{l=0}^{j} ((-1)^l / l!)
//         (x1*)^{sh (j-l+1)} / (j-l)!,
// where (x1*)^{sh m} = (m x1)*.
inline RatExpr rho_star(int k) {
  if (k == 0)
    return RatExpr::star(Alphabet::X, 1, Rat(1)) -
           RatExpr::one(Alphabet::X);
  RatExpr acc = RatExpr::zero(Alphabet::X);
  for (int j = 1; j <= k; ++j) {
    const Rat cj = Rat(stirling2(k, j)) * Rat(factorial(j)) * Rat(factorial(j));
    for (int l = 0; l <= j; ++l) {
      Rat c = cj / (Rat(factorial(l)) * Rat(factorial(j - l)));
      if (l % 2 != 0) c = -c;
      acc += RatExpr::star(Alphabet::X, 1, Rat(j - l + 1)).scaled(c);
    }
  }
  return star_shuffle_normalize(acc);
}

}  // namespace detail

// The closed summation formula for R_{y_{s1}...y_{sr}}: a nested sum over
// k1 = 0..s1, k2 = 0..(s1+s2-k1), ..., kr = 0..(s1+...+sr - k1-...-k_{r-1})
// of prod_i C(s1+...+si - k1-...-k_{i-1}, ki) times rho_{k1} sh ... sh rho_{kr}.
// Implemented exactly as displayed; see stirling_compare for how its output
// relates to the interpolation route.
inline RatExpr r_stirling_formula(const Word& w) {
  if (w.alph == Alphabet::X)
    throw domain_error("r_stirling_formula expects a Y0-word");
  const int r = w.length();
  if (r == 0) return RatExpr::one(Alphabet::X);
  std::map<int, RatExpr> rho_cache;
  const auto rho = [&rho_cache](int k) -> const RatExpr& {
    auto it = rho_cache.find(k);
    if (it == rho_cache.end())
      it = rho_cache.emplace(k, detail::rho_star(k)).first;
    return it->second;
  };
  RatExpr total = RatExpr::zero(Alphabet::X);
  std::function<void(int, int, Rat, const RatExpr&)> rec =
      [&](int i, int used, Rat coeff, const RatExpr& partial) {
        if (i == r) {
          total += partial.scaled(coeff);
          return;
        }
        int prefix = 0;
        for (int j = 0; j <= i; ++j) prefix += w.letters[j];
        const int bound = prefix - used;
        for (int ki = 0; ki <= bound; ++ki) {
          const Rat c = coeff * Rat(binomial(Int(bound), ki));
          rec(i + 1, used + ki, c, rat_shuffle(partial, rho(ki)));
        }
      };
  rec(0, 0, Rat(1), RatExpr::one(Alphabet::X));
  return star_shuffle_normalize(total);
}

// Side-by-side comparison of the two routes to R_w.
struct StirlingReport {
  Word w;
  RatExpr formula;        // closed summation formula
  RatExpr interpolation;  // binomial-basis interpolation route
  bool expressions_match = false;
  Rat p1_formula, p1_interpolation;            // values at t = 1
  Rat ptilde1_formula, ptilde1_interpolation;  // exponential-transform values
  bool p1_match = false;
  bool ptilde1_match = false;
};

inline StirlingReport stirling_compare(const Word& w) {
  StirlingReport rep;
  rep.w = w;
  rep.formula = r_stirling_formula(w);
  rep.interpolation = r_of_word(w);
  rep.expressions_match = rat_equal(rep.formula, rep.interpolation);
  const OneVarPoly pf = lambda_map(rep.formula);
  const OneVarPoly pi = lambda_map(rep.interpolation);
  rep.p1_formula = pf.eval(Rat(1));
  rep.p1_interpolation = pi.eval(Rat(1));
  rep.ptilde1_formula = pf.eval_tilde(Rat(1));
  rep.ptilde1_interpolation = pi.eval_tilde(Rat(1));
  rep.p1_match = rep.p1_formula == rep.p1_interpolation;
  rep.ptilde1_match = rep.ptilde1_formula == rep.ptilde1_interpolation;
  return rep;
}

// ---------------------------------------------------------------------------
// Per-word record
// ---------------------------------------------------------------------------

struct NegIndexRecord {
  Word w;                 // a Y0-word
  int degree = 0;         // D = weight + length
  OneVarPoly p;           // Li^-_w(z) = p(1/(1-z))
  RatExpr r;              // R_w = lambda_inv(p)
  Rat c_minus;            // leading asymptotics of H^-_w(n)/n^D
  Rat b_minus;            // D! c_minus = leading coefficient of p
  Int zeta_sh_value;      // p(1)
  Rat gamma_value;        // p~(1)
};

inline NegIndexRecord neg_index_record(const Word& w) {
  if (w.alph == Alphabet::X)
    throw domain_error("neg_index_record expects a Y0-word");
  NegIndexRecord rec;
  rec.w = w;
  rec.degree = static_cast<int>(w.subscript_sum()) + w.length();
  rec.p = p_of_word(w);
  rec.r = lambda_inv(rec.p);
  rec.c_minus = w.empty() ? Rat(1) : mzkit::c_minus(w);
  rec.b_minus = w.empty() ? Rat(1) : mzkit::b_minus(w);
  const Rat p1 = rec.p.eval(Rat(1));
  if (denominator(p1) != 1)
    throw domain_error("neg_index_record: p(1) is not an integer");
  rec.zeta_sh_value = numerator(p1);
  rec.gamma_value = rec.p.eval_tilde(Rat(1));
  return rec;
}

// ---------------------------------------------------------------------------
// Generating series
// ---------------------------------------------------------------------------

// Rewrites p(t) in the basis {C(n+k, k)}_k as an exact polynomial in n:
// the coefficient sequence of Li^-_w, sum_k p_k C(n+k, k), expanded in
// powers of n.
inline OneVarPoly binomial_basis_poly(const OneVarPoly& p) {
  OneVarPoly out;
  for (int k = 0; k <= p.degree(); ++k) {
    if (p.at(k) == Rat(0)) continue;
    OneVarPoly basis = OneVarPoly::monomial(0, Rat(1));
    for (int i = 1; i <= k; ++i) {
      // multiply by (n + i)/i
      OneVarPoly lin;
      lin += OneVarPoly::monomial(1, Rat(1, i));
      lin += OneVarPoly::monomial(0, Rat(1));
      basis = basis * lin;
    }
    out += basis.scaled(p.at(k));
  }
  return out;
}

// The interpolating series: for each Y-word w of weight <= maxweight, the
// exact polynomial in n whose values are H^-_w(n).  Its evaluations
// upsilon_at(., n) are group-like for the stuffle coproduct at every n.
inline std::map<Word, OneVarPoly, WordLess> series_upsilon(int maxweight) {
  std::map<Word, OneVarPoly, WordLess> out;
  out[Word(Alphabet::Y, {})] = OneVarPoly::monomial(0, Rat(1));
  for (const Word& w : words_up_to(Alphabet::Y, maxweight))
    out[w] = binomial_basis_poly(p_of_word(w));
  return out;
}

inline NCPoly<Rat> upsilon_at(int maxweight, long n) {
  NCPoly<Rat> out = NCPoly<Rat>::one(Alphabet::Y);
  for (const Word& w : words_up_to(Alphabet::Y, maxweight)) {
    const Rat c = h_neg_eval(w, n);
    if (c != Rat(0)) out += NCPoly<Rat>::monomial(w, c);
  }
  return out;
}

// The t-parametric series over X-words: words ending in x0 carry 0, the
// single letter x0 carries the symbolic coefficient log z, and every other
// word w carries p_{pi_Y(w)}(t).  Materialized numerically by at(z) with
// t = 1/(1-z).
struct LambdaSeries {
  int maxlen = 0;
  std::map<Word, OneVarPoly, WordLess> t_coeff;  // words not ending in x0

  NCPoly<Real> at(const Real& z) const {
    if (!(z > Real(0) && z < Real(1)))
      throw domain_error("LambdaSeries::at requires 0 < z < 1");
    const Real t = Real(1) / (Real(1) - z);
    NCPoly<Real> out(Alphabet::X);
    for (const auto& [w, p] : t_coeff) {
      Real acc(0);
      for (size_t k = p.coef.size(); k-- > 0;) acc = acc * t + to_real(p.coef[k]);
      if (acc != Real(0)) out += NCPoly<Real>::monomial(w, acc);
    }
    const Word x0(Alphabet::X, {0});
    if (maxlen >= 1) out += NCPoly<Real>::monomial(x0, log(z));
    return out;
  }
};

inline LambdaSeries series_lambda(int maxlen) {
  LambdaSeries s;
  s.maxlen = maxlen;
  s.t_coeff[Word(Alphabet::X, {})] = OneVarPoly::monomial(0, Rat(1));
  for (const Word& w : words_up_to(Alphabet::X, maxlen)) {
    if (!w.empty() && w.letters.back() == 0) continue;  // projected to 0
    const auto proj = pi_y_word(w);
    s.t_coeff[w] = p_of_word(*proj);
  }
  return s;
}

// The gamma-character series over Y-words: coefficient of w is
// gamma_char(pi_Y(R_w)) = p~_w(1), exactly rational.
inline NCPoly<Rat> series_zminus_gamma(int maxweight) {
  NCPoly<Rat> out = NCPoly<Rat>::one(Alphabet::Y);
  for (const Word& w : words_up_to(Alphabet::Y, maxweight)) {
    const Rat c = p_of_word(w).eval_tilde(Rat(1));
    if (c != Rat(0)) out += NCPoly<Rat>::monomial(w, c);
  }
  return out;
}

// The shuffle-character series over X-words: coefficient of w is
// zeta_shuffle_reg(R_{pi_Y(w)}) = p_{pi_Y(w)}(1), which vanishes for every
// nonempty word (Li^-_w(0) = 0 forces p(1) = 0), so the series is 1.
inline NCPoly<Rat> series_zminus_sh(int maxlen) {
  NCPoly<Rat> out = NCPoly<Rat>::one(Alphabet::X);
  for (const Word& w : words_up_to(Alphabet::X, maxlen)) {
    if (!w.empty() && w.letters.back() == 0) continue;
    const Rat c = p_of_word(*pi_y_word(w)).eval(Rat(1));
    if (c != Rat(0)) out += NCPoly<Rat>::monomial(w, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Asymptotic cross-checks
// ---------------------------------------------------------------------------

// Numerical verification data for the leading asymptotics: H^-_w(N)/N^D
// approaches c_minus(w) and (1-z)^D Li^-_w(z) at z = 1 - 1/M approaches
// b_minus(w).
struct AsymptoticReport {
  Word w;
  int degree = 0;
  Rat c_target, b_target;
  std::vector<std::pair<long, Real>> h_ratio;   // (N, H^-_w(N)/N^D)
  std::vector<std::pair<long, Real>> li_ratio;  // (M, (1/M)^D Li^-_w(1-1/M))
};

inline AsymptoticReport cminus_asymptotic_check(const Word& w,
                                                const std::vector<long>& h_ns,
                                                const std::vector<long>& li_ms,
                                                const EvalConfig& cfg = {}) {
  AsymptoticReport rep;
  rep.w = w;
  rep.degree = static_cast<int>(w.subscript_sum()) + w.length();
  rep.c_target = c_minus(w);
  rep.b_target = b_minus(w);
  for (const long n : h_ns) {
    Rat nd(1);
    for (int i = 0; i < rep.degree; ++i) nd *= Rat(n);
    rep.h_ratio.emplace_back(n, to_real(h_neg_eval(w, n) / nd));
  }
  for (const long m : li_ms) {
    const Real z = Real(1) - Real(1) / Real(m);
    Real scale(1);
    for (int i = 0; i < rep.degree; ++i) scale /= Real(m);
    rep.li_ratio.emplace_back(m, li_neg_eval(w, z, cfg) * scale);
  }
  return rep;
}

}  // namespace mzkit

#endif  // MZKIT_NEGREG_HPP
