// Tests for the evaluation layer: exact harmonic sums, polylogarithm series,
// parametric sums, limits, and the character identities tying them to the
// shuffle and quasi-shuffle products.

#include "mzkit/analytic.hpp"

#include <gtest/gtest.h>

#include <boost/math/constants/constants.hpp>

#include <map>
#include <string>
#include <vector>

#include "test_util.hpp"

namespace mzkit {
namespace {

using mzkit_test::harmonic_neg_oracle;
using mzkit_test::harmonic_oracle;

Word w(const std::string& text, std::optional<Alphabet> a = std::nullopt) {
  return parse_word(text, a);
}

Real pi_const() { return boost::math::constants::pi<Real>(); }

void expect_close(const Real& a, const Real& b, const Real& tol, const std::string& what) {
  EXPECT_TRUE(abs(a - b) <= tol) << what << ": " << real_str(a) << " vs " << real_str(b)
                                 << " (|diff| = " << real_str(abs(a - b), 5) << ")";
}

// Brute-force real-valued harmonic sum by direct recursion (oracle).
Real hb(const std::vector<int>& s, long n) {
  if (s.empty()) return Real(1);
  const std::vector<int> rest(s.begin() + 1, s.end());
  Real acc(0);
  for (long m = 1; m <= n; ++m) {
    Real p(1);
    for (int i = 0; i < s[0]; ++i) p *= Real(m);
    acc += hb(rest, m - 1) / p;
  }
  return acc;
}

// Brute-force truncated polylogarithm: sum_{N >= n1 > ... > nr} z^{n1}/prod.
Real li_brute(const std::vector<int>& s, const Real& z, long n) {
  Real acc(0), zn(1);
  const std::vector<int> rest(s.begin() + 1, s.end());
  for (long m = 1; m <= n; ++m) {
    zn *= z;
    Real p(1);
    for (int i = 0; i < s[0]; ++i) p *= Real(m);
    acc += zn / p * hb(rest, m - 1);
  }
  return acc;
}

TEST(AnalyticTest, HEvalFrozenValues) {
  EXPECT_EQ(h_eval(w("y1"), 3), Rat(11) / 6);
  EXPECT_EQ(h_eval(w("y2,y1"), 2), Rat(1) / 4);
  EXPECT_EQ(h_eval(w("1", Alphabet::Y), 5), Rat(1));
  EXPECT_EQ(h_eval(w("y3,y1"), 0), Rat(0));
  EXPECT_EQ(h_eval(w("y1,y1,y1"), 2), Rat(0));  // needs a chain of length 3
}

TEST(AnalyticTest, HEvalMatchesOracle) {
  for (const Word& u : words_up_to(Alphabet::Y, 4))
    for (long n : {1L, 5L, 13L})
      EXPECT_EQ(h_eval(u, n), harmonic_oracle(u.letters, static_cast<int>(n)))
          << u.str() << " at n=" << n;
}

TEST(AnalyticTest, HEvalErrors) {
  EXPECT_THROW(h_eval(w("x0x1"), 3), domain_error);
  EXPECT_THROW(h_eval(w("y1"), -1), domain_error);
}

TEST(AnalyticTest, HNegFrozenValues) {
  EXPECT_EQ(h_neg_eval(w("y1", Alphabet::Y0), 4), Rat(10));
  for (long n : {0L, 1L, 7L})
    EXPECT_EQ(h_neg_eval(w("y0"), n), Rat(n));
  EXPECT_EQ(h_neg_eval(w("y2", Alphabet::Y0), 3), Rat(14));  // 1 + 4 + 9
  EXPECT_EQ(h_neg_eval(w("y1,y0"), 3), Rat(2 + 3 * 2));      // n1*(n1-1) summed
}

TEST(AnalyticTest, HNegMatchesOracle) {
  for (const Word& u : words_up_to(Alphabet::Y0, 4))
    for (long n : {1L, 4L, 9L, 30L})
      EXPECT_EQ(h_neg_eval(u, n), harmonic_neg_oracle(u.letters, static_cast<int>(n)))
          << u.str() << " at n=" << n;
  EXPECT_THROW(h_neg_eval(w("x1"), 3), domain_error);
}

TEST(AnalyticTest, LiFrozenValues) {
  EvalConfig tight;
  tight.tol = Real("1e-40");
  const Real half = Real(1) / 2;
  expect_close(li_eval(w("x1"), half, tight), log(Real(2)), Real("1e-38"), "li(x1,1/2)");
  const Real li2_half = pi_const() * pi_const() / 12 - log(Real(2)) * log(Real(2)) / 2;
  expect_close(li_eval(w("x0x1"), half, tight), li2_half, Real("1e-38"), "li(x0x1,1/2)");
  expect_close(li_eval(w("x0x1"), half, tight), Real("0.5822405"), Real("1e-7"),
               "li(x0x1,1/2) decimal");
  expect_close(li_eval(w("x1x1"), half, tight), log(Real(2)) * log(Real(2)) / 2, Real("1e-38"),
               "li(x1x1,1/2)");
  expect_close(li_eval(w("x0x0"), exp(Real(-1)), tight), half, Real("1e-40"), "li(x0x0,1/e)");
  expect_close(li_eval(w("1", Alphabet::X), half, tight), Real(1), Real(0), "li(1,z)");
}

TEST(AnalyticTest, LiMatchesBruteSums) {
  EvalConfig tight;
  tight.tol = Real("1e-30");
  const Real z1 = Real(3) / 10;
  expect_close(li_eval(w("x0x1x1"), Real(1) / 2, tight), li_brute({2, 1}, Real(1) / 2, 220),
               Real("1e-25"), "li(x0x1x1,1/2)");
  expect_close(li_eval(w("x0x0x1"), Real(7) / 10, tight), li_brute({3}, Real(7) / 10, 260),
               Real("1e-25"), "li(x0x0x1,7/10)");
  expect_close(li_eval(w("x1x1x1"), z1, tight), li_brute({1, 1, 1}, z1, 150), Real("1e-25"),
               "li(x1x1x1,3/10)");
  expect_close(li_eval(w("x1x0x1"), z1, tight), li_brute({1, 2}, z1, 150), Real("1e-25"),
               "li(x1x0x1,3/10)");
}

// Words ending in x0 are produced by an exact shuffle rewriting; check them
// against the differential structure instead: stripping the first letter a
// of w = a v satisfies  d/dz Li_w = Li_v / z  (a = x0)  or  Li_v / (1-z).
TEST(AnalyticTest, LiTrailingZeroMatchesDerivativeStructure) {
  EvalConfig tight;
  tight.tol = Real("1e-40");
  const Real z = Real(3) / 5;
  const Real h = Real("1e-10");
  for (const std::string& text : {"x0x1x0", "x1x0x0", "x0x1x1x0", "x1x0x1x0"}) {
    const Word word = w(text);
    const Word tail = word.subword(1, word.length() - 1);
    const Real num =
        (li_eval(word, z + h, tight) - li_eval(word, z - h, tight)) / (2 * h);
    const Real den = word.letters.front() == 0 ? z : Real(1) - z;
    expect_close(num, li_eval(tail, z, tight) / den, Real("1e-15"), text + " derivative");
  }
}

TEST(AnalyticTest, LiShuffleCharacter) {
  EvalConfig cfg;
  cfg.tol = Real("1e-14");
  const std::vector<Word> words = words_up_to(Alphabet::X, 3);
  for (const Real& z : {Real(3) / 10, Real(1) / 2}) {
    std::map<Word, Real, WordLess> cache;
    const auto li_cached = [&](const Word& u) {
      auto it = cache.find(u);
      if (it == cache.end()) it = cache.emplace(u, li_eval(u, z, cfg)).first;
      return it->second;
    };
    for (const Word& u : words)
      for (const Word& v : words) {
        Real lhs(0);
        for (const auto& [sw, c] : shuffle_words(u, v).terms)
          lhs += to_real(Rat(c)) * li_cached(sw);
        expect_close(lhs, li_cached(u) * li_cached(v), Real("1e-10"),
                     "shuffle character " + u.str() + " | " + v.str());
      }
  }
}

TEST(AnalyticTest, HStuffleCharacterExact) {
  const std::vector<Word> words = words_up_to(Alphabet::Y, 4);
  for (const Word& u : words)
    for (const Word& v : words)
      for (long n : {0L, 2L, 7L, 30L}) {
        const NCPoly<Rat> st = convert_poly<Rat>(stuffle_words(u, v));
        EXPECT_EQ(h_eval_poly(st, n), h_eval(u, n) * h_eval(v, n))
            << u.str() << " | " << v.str() << " at n=" << n;
      }
}

TEST(AnalyticTest, HNegStuffleCharacterExact) {
  const std::vector<Word> words = words_up_to(Alphabet::Y0, 3);
  for (const Word& u : words)
    for (const Word& v : words)
      for (long n : {0L, 4L, 19L}) {
        Rat lhs(0);
        for (const auto& [sw, c] : stuffle_words(u, v).terms)
          lhs += Rat(c) * h_neg_eval(sw, n);
        EXPECT_EQ(lhs, h_neg_eval(u, n) * h_neg_eval(v, n))
            << u.str() << " | " << v.str() << " at n=" << n;
      }
}

// The Taylor coefficients of Li_w/(1-z) (partial sums of those of Li_w)
// reproduce the harmonic numbers of the associated index word.
TEST(AnalyticTest, TaylorCoefficientsMatchHarmonicSums) {
  const int m = 12;
  for (const Word& u : words_up_to(Alphabet::X, 3)) {
    if (u.empty() || u.letters.back() != 1) continue;
    const std::vector<Rat> coeffs = li_taylor_coeffs(u, m);
    const Word y = *pi_y_word(u);
    Rat partial(0);
    for (int n = 1; n <= m; ++n) {
      partial += coeffs[n - 1];
      EXPECT_EQ(partial, h_eval(y, n)) << u.str() << " at n=" << n;
    }
  }
  EXPECT_THROW(li_taylor_coeffs(w("x0x1x0"), 5), domain_error);
  EXPECT_THROW(li_taylor_coeffs(w("y2"), 5), domain_error);
}

TEST(AnalyticTest, LiNegValues) {
  EvalConfig cfg;
  cfg.tol = Real("1e-20");
  const Real half = Real(1) / 2;
  expect_close(li_neg_eval(w("y2", Alphabet::Y0), half, cfg), Real(6), Real("1e-18"),
               "li_neg(y2,1/2)");
  expect_close(li_neg_eval(w("y0"), half, cfg), Real(1), Real("1e-18"), "li_neg(y0,1/2)");
  // brute double sum for a depth-2 case
  const Real z = Real(2) / 5;
  Real brute(0);
  for (long n = 2; n <= 200; ++n) {
    Real zn(1);
    for (long i = 0; i < n; ++i) zn *= z;
    brute += Real(n) * zn * Real(n - 1);  // inner chain: any m < n with power 0
  }
  expect_close(li_neg_eval(w("y1,y0"), z, cfg), brute, Real("1e-18"), "li_neg(y1y0,2/5)");
  EXPECT_THROW(li_neg_eval(w("x1"), half, cfg), domain_error);
}

TEST(AnalyticTest, LiParametricValues) {
  EvalConfig cfg;
  cfg.tol = Real("1e-20");
  const Real half = Real(1) / 2;
  // sum_n z^n/(n - 1/2) = 2 sqrt(z) atanh(sqrt(z))
  const Real u = sqrt(half);
  const Real oracle = 2 * u * (log(Real(1) + u) - log(Real(1) - u)) / 2;
  const Real got = li_parametric({1}, {half}, half, cfg);
  expect_close(got, oracle, Real("1e-18"), "parametric (1;1/2;1/2)");
  expect_close(got, Real("1.24646"), Real("1e-5"), "parametric decimal");
  // t = 0 degenerates to li_eval
  for (const Real& z : {Real(3) / 10, Real(7) / 10}) {
    expect_close(li_parametric({2}, {Real(0)}, z, cfg), li_eval(w("x0x1"), z, cfg),
                 Real("1e-18"), "t=0 depth 1");
    expect_close(li_parametric({2, 1}, {Real(0), Real(0)}, z, cfg),
                 li_eval(w("x0x1x1"), z, cfg), Real("1e-18"), "t=0 depth 2");
    expect_close(li_parametric({1, 2}, {Real(0), Real(0)}, z, cfg),
                 li_eval(w("x1x0x1"), z, cfg), Real("1e-18"), "t=0 depth 2b");
  }
  // an honestly shifted depth-2 case against a brute double sum
  const Real t1 = Real(1) / 3, t2 = -Real(1) / 4, z2 = Real(2) / 5;
  Real brute(0);
  for (long n1 = 2; n1 <= 220; ++n1) {
    Real zn(1);
    for (long i = 0; i < n1; ++i) zn *= z2;
    Real inner(0);
    for (long n2 = 1; n2 < n1; ++n2) inner += Real(1) / (Real(n2) - t2);
    brute += zn / ((Real(n1) - t1) * (Real(n1) - t1)) * inner;
  }
  expect_close(li_parametric({2, 1}, {t1, t2}, z2, cfg), brute, Real("1e-18"),
               "parametric depth 2 brute");
  EXPECT_THROW(li_parametric({1}, {Real(1)}, half, cfg), domain_error);
  EXPECT_THROW(li_parametric({0}, {Real(0)}, half, cfg), domain_error);
  EXPECT_THROW(li_parametric({1, 1}, {half}, half, cfg), domain_error);
}

TEST(AnalyticTest, ZetaDepthOne) {
  const Real pi2 = pi_const() * pi_const();
  expect_close(zeta_em_int(2), pi2 / 6, Real("1e-45"), "zeta(2)");
  expect_close(zeta_em_int(4), pi2 * pi2 / 90, Real("1e-45"), "zeta(4)");
  expect_close(zeta_em_int(6), pi2 * pi2 * pi2 / 945, Real("1e-45"), "zeta(6)");
  expect_close(zeta_convergent(w("y2")), pi2 / 6, Real("1e-45"), "zeta(y2)");
  expect_close(zeta_convergent(w("x0x1")), pi2 / 6, Real("1e-45"), "zeta(x0x1)");
  expect_close(zeta_convergent(w("y2")), Real("1.6449341"), Real("1e-7"), "zeta(y2) decimal");
}

TEST(AnalyticTest, ZetaDepthTwoAndThree) {
  EvalConfig cfg;
  cfg.tol = Real("1e-10");
  const Real z3 = zeta_em_int(3);
  const Real v21 = zeta_convergent(w("y2,y1"), cfg);
  expect_close(v21, z3, Real("1e-10"), "zeta(y2,y1) vs zeta(3)");
  expect_close(v21, Real("1.2020569"), Real("1e-7"), "zeta(y2,y1) decimal");
  expect_close(zeta_convergent(w("x0x1x1"), cfg), z3, Real("1e-10"), "zeta(x0x1x1)");
  const Real pi4 = pi_const() * pi_const() * pi_const() * pi_const();
  expect_close(zeta_convergent(w("y3,y1"), cfg), pi4 / 360, Real("1e-9"), "zeta(3,1)");
  expect_close(zeta_convergent(w("y2,y1,y1"), cfg), pi4 / 90, Real("1e-9"), "zeta(2,1,1)");
}

TEST(AnalyticTest, ZetaDivergentAndInvalid) {
  EXPECT_THROW(zeta_convergent(w("y1")), domain_error);
  EXPECT_THROW(zeta_convergent(w("y1,y2")), domain_error);
  EXPECT_THROW(zeta_convergent(w("1", Alphabet::Y)), domain_error);
  EXPECT_THROW(zeta_convergent(w("x1x0x1")), domain_error);
  EXPECT_THROW(zeta_convergent(w("x0x1x0")), domain_error);
  EXPECT_THROW(zeta_convergent(w("x0")), domain_error);
  EXPECT_THROW(zeta_convergent(w("y1,y0")), domain_error);
  EXPECT_THROW(zeta_convergent(w("y2,y0")), domain_error);
}

// li_eval(w, 1-eps) approaches zeta(w); extrapolating in the basis
// {1, eps, eps log eps, eps log^2 eps} over eps in [1e-4, 1e-2] recovers the
// limit well below the 1e-4 bar.
TEST(AnalyticTest, AbelLimitConsistency) {
  EvalConfig cfg;  // default tolerance 1e-12
  const std::vector<Real> eps = {Real(1) / 100, Real(1) / 1000,
                                 Real(1) / (Real(1000) * sqrt(Real(10))), Real(1) / 10000};
  for (const std::string& text : {"x0x1", "x0x0x1", "x0x1x1"}) {
    const Word word = w(text);
    const Real limit = zeta_convergent(word, cfg);
    Matrix<Real> a;
    std::vector<Real> rhs;
    for (const Real& e : eps) {
      const Real le = log(e);
      a.push_back({Real(1), e, e * le, e * le * le});
      rhs.push_back(li_eval(word, Real(1) - e, cfg));
    }
    const Real extrapolated = gauss_solve(a, rhs)[0];
    expect_close(extrapolated, limit, Real("1e-4"), text + " extrapolation");
    EXPECT_LT(abs(rhs[1] - limit), abs(rhs[0] - limit)) << text << " monotone approach";
  }
}

TEST(AnalyticTest, StarExpressionEvaluation) {
  EvalConfig cfg;
  cfg.tol = Real("1e-14");
  for (const Real& z : {Real(3) / 10, Real(1) / 2}) {
    for (int i = 0; i <= 2; ++i)
      for (int j = 0; j <= 2; ++j) {
        RatExpr e = RatExpr::one(Alphabet::X);
        for (int k = 0; k < i; ++k) e = rat_shuffle(e, RatExpr::star(Alphabet::X, 0, Rat(1)));
        for (int k = 0; k < j; ++k) e = rat_shuffle(e, RatExpr::star(Alphabet::X, 1, Rat(1)));
        Real expect(1);
        for (int k = 0; k < i; ++k) expect *= z;
        for (int k = 0; k < j; ++k) expect /= Real(1) - z;
        expect_close(li_rat_eval(e, z, cfg), expect, Real("1e-10"),
                     "star powers i=" + std::to_string(i) + " j=" + std::to_string(j));
      }
    // rational multiplier: ((1/2) x1)* evaluates to (1-z)^{-1/2}
    const RatExpr half_star = RatExpr::star(Alphabet::X, 1, Rat(1) / 2);
    expect_close(li_rat_eval(half_star, z, cfg), Real(1) / sqrt(Real(1) - z), Real("1e-12"),
                 "half star");
  }
  // geometric-series semantics: the graded expansion evaluated term by term
  // agrees with the closed form once the dropped lengths are negligible
  const Real z = Real(2) / 5;
  const RatExpr mixed = rat_shuffle(RatExpr::star(Alphabet::X, 1, Rat(1)),
                                    RatExpr::from_word(w("x0x1")));
  expect_close(li_eval_poly(rat_expand(mixed, 16), z, cfg), li_rat_eval(mixed, z, cfg),
               Real("1e-9"), "star times word vs expansion");
  const RatExpr geo = RatExpr::star(Alphabet::X, 0, Rat(1));
  expect_close(li_eval_poly(rat_expand(geo, 16), z, cfg), z, Real("1e-9"),
               "x0 star expansion vs z");
  EXPECT_THROW(li_rat_eval(RatExpr::star(Alphabet::Y, 1, Rat(1)), z, cfg), domain_error);
}

TEST(AnalyticTest, ConfigAndDomainErrors) {
  EvalConfig bad;
  bad.digits = 20;
  EXPECT_THROW(li_eval(w("x1"), Real(1) / 2, bad), domain_error);
  bad = EvalConfig{};
  bad.digits = 70;
  EXPECT_THROW(li_eval(w("x1"), Real(1) / 2, bad), domain_error);
  bad = EvalConfig{};
  bad.trunc = 5;
  EXPECT_THROW(li_eval(w("x1"), Real(1) / 2, bad), domain_error);
  bad = EvalConfig{};
  bad.tol = Real(0);
  EXPECT_THROW(li_eval(w("x1"), Real(1) / 2, bad), domain_error);

  EvalConfig starved;
  starved.trunc = 20;
  starved.tol = Real("1e-30");
  EXPECT_THROW(li_eval(w("x1"), Real(9) / 10, starved), tolerance_error);

  for (const Real& z : {Real(0), Real(1), Real(-1) / 5, Real(13) / 10})
    EXPECT_THROW(li_eval(w("x1"), z), domain_error);
  EXPECT_THROW(li_eval(w("y1"), Real(1) / 2), domain_error);
}

TEST(AnalyticTest, EulerGammaEngine) {
  const Real reference("0.5772156649015328606065120900824024310421");
  expect_close(euler_gamma(), reference, Real("1e-39"), "euler gamma");
}

}  // namespace
}  // namespace mzkit
