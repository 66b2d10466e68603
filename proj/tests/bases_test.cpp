// Tests for the dual PBW bases and the ordered-exponential factorization of
// group-like series.  Harmonic sums used as a factorization example are
// recomputed inside the test with a direct nested-sum oracle.

#include <gtest/gtest.h>

#include <vector>

#include "mzkit/bases.hpp"
#include "test_util.hpp"

using namespace mzkit;
using mzkit_test::harmonic_oracle;
using mzkit_test::mono;

namespace {

// Group-like harmonic generating series truncated at the given weight.
PolyQ harmonic_series(int n, int maxweight) {
  PolyQ s = PolyQ::one(Alphabet::Y);
  for (const Word& w : words_up_to(Alphabet::Y, maxweight))
    s.add_term(w, harmonic_oracle(w.letters, n));
  return s;
}

template <class C>
bool reduced_part_vanishes(const TensorPoly<C>& d) {
  for (const auto& [uv, c] : d)
    if (!uv.first.empty() && !uv.second.empty() && !(c == C(0))) return false;
  return true;
}

}  // namespace

TEST(BasesTest, ShuffleSideFrozenValues) {
  PolyQ p01 = mono("x0x1");
  p01.add_term(parse_word("x1x0"), Rat(-1));
  EXPECT_EQ(basis_P(parse_word("x0x1")), p01);
  EXPECT_EQ(basis_S(parse_word("x0x1")), mono("x0x1"));
  EXPECT_EQ(basis_S(parse_word("x1x0")), mono("x0x1") + mono("x1x0"));
  EXPECT_EQ(pairing(basis_P(parse_word("x0x1")), basis_S(parse_word("x1x0"))), Rat(0));
  EXPECT_EQ(pairing(basis_P(parse_word("x0x1")), basis_S(parse_word("x0x1"))), Rat(1));
  EXPECT_EQ(basis_P(Word(Alphabet::X, {})), PolyQ::one(Alphabet::X));
}

TEST(BasesTest, QuasiShuffleSideFrozenValues) {
  EXPECT_EQ(basis_Pi(parse_word("y1")), mono("y1"));
  PolyQ pi2 = mono("y2");
  pi2.add_term(parse_word("y1,y1"), Rat(-1, 2));
  EXPECT_EQ(basis_Pi(parse_word("y2")), pi2);
  EXPECT_EQ(basis_Pi(parse_word("y2")), pi1(mono("y2")));
  // Pi_{y1y1} = Pi_{y1}^2 / 2!
  PolyQ pi11(Alphabet::Y);
  pi11.add_term(parse_word("y1,y1"), Rat(1, 2));
  EXPECT_EQ(basis_Pi(parse_word("y1,y1")), pi11);
  EXPECT_EQ(pairing(basis_Pi(parse_word("y2")), basis_Sigma(parse_word("y2"))), Rat(1));
  EXPECT_EQ(pairing(basis_Pi(parse_word("y1,y1")), basis_Sigma(parse_word("y2"))), Rat(0));
  EXPECT_EQ(basis_Sigma(parse_word("y2")), mono("y2"));
}

TEST(BasesTest, AlphabetErrors) {
  EXPECT_THROW(basis_P(parse_word("y1")), domain_error);
  EXPECT_THROW(basis_S(parse_word("y1")), domain_error);
  EXPECT_THROW(basis_Pi(parse_word("x0x1")), domain_error);
  EXPECT_THROW(basis_Pi(parse_word("y0", Alphabet::Y0)), domain_error);
  EXPECT_THROW(basis_Sigma(parse_word("x1")), domain_error);
}

TEST(BasesTest, FullDualityShuffleSide) {
  const auto ws = words_up_to(Alphabet::X, 5);
  std::vector<PolyQ> ps, ss;
  for (const Word& w : ws) {
    ps.push_back(basis_P(w));
    ss.push_back(basis_S(w));
  }
  for (size_t i = 0; i < ws.size(); ++i)
    for (size_t j = 0; j < ws.size(); ++j)
      EXPECT_EQ(pairing(ps[i], ss[j]), Rat(i == j ? 1 : 0))
          << ws[i].str() << " | " << ws[j].str();
}

TEST(BasesTest, FullDualityQuasiShuffleSide) {
  const auto ws = words_up_to(Alphabet::Y, 5);
  std::vector<PolyQ> pis, sigmas;
  for (const Word& w : ws) {
    pis.push_back(basis_Pi(w));
    sigmas.push_back(basis_Sigma(w));
  }
  for (size_t i = 0; i < ws.size(); ++i)
    for (size_t j = 0; j < ws.size(); ++j)
      EXPECT_EQ(pairing(pis[i], sigmas[j]), Rat(i == j ? 1 : 0))
          << ws[i].str() << " | " << ws[j].str();
}

TEST(BasesTest, LyndonGeneratorsArePrimitive) {
  for (const Word& l : lyndon_words(Alphabet::X, 5))
    EXPECT_TRUE(reduced_part_vanishes(coproduct_shuffle(basis_P(l)))) << l.str();
  for (const Word& l : lyndon_words(Alphabet::Y, 5))
    EXPECT_TRUE(reduced_part_vanishes(coproduct_stuffle(basis_Pi(l)))) << l.str();
}

TEST(BasesTest, PBWExpansionsRecoverWords) {
  // w = sum_u <S_u|w> P_u = sum_u <P_u|w> S_u, and likewise on the other side
  for (const Word& w : words_up_to(Alphabet::X, 4)) {
    PolyQ via_p(Alphabet::X), via_s(Alphabet::X);
    for (const Word& u : words_up_to(Alphabet::X, 4)) {
      if (u.grade() != w.grade()) continue;
      const PolyQ wp = PolyQ::monomial(w);
      via_p += basis_P(u).scaled(pairing(basis_S(u), wp));
      via_s += basis_S(u).scaled(pairing(basis_P(u), wp));
    }
    EXPECT_EQ(via_p, PolyQ::monomial(w)) << w.str();
    EXPECT_EQ(via_s, PolyQ::monomial(w)) << w.str();
  }
  for (const Word& w : words_up_to(Alphabet::Y, 4)) {
    PolyQ via_pi(Alphabet::Y), via_sig(Alphabet::Y);
    for (const Word& u : words_up_to(Alphabet::Y, 4)) {
      if (u.grade() != w.grade()) continue;
      const PolyQ wp = PolyQ::monomial(w);
      via_pi += basis_Pi(u).scaled(pairing(basis_Sigma(u), wp));
      via_sig += basis_Sigma(u).scaled(pairing(basis_Pi(u), wp));
    }
    EXPECT_EQ(via_pi, PolyQ::monomial(w)) << w.str();
    EXPECT_EQ(via_sig, PolyQ::monomial(w)) << w.str();
  }
}

TEST(BasesTest, FactorizeSingleExponential) {
  const Rat c(5, 3);
  const PolyQ s = series_exp(mono("x0").scaled(c), 4);
  const auto f = mrs_factorize(s, Product::Shuffle, 4);
  for (const auto& [l, e] : f) {
    if (l == parse_word("x0")) EXPECT_EQ(e, c);
    else EXPECT_EQ(e, Rat(0)) << l.str();
  }
}

TEST(BasesTest, FactorizeRoundTripShuffle) {
  PolyQ lie(Alphabet::X);
  lie += basis_P(parse_word("x0")).scaled(Rat(2));
  lie += basis_P(parse_word("x1")).scaled(Rat(1, 5));
  lie += basis_P(parse_word("x0x1")).scaled(Rat(-1, 3));
  lie += basis_P(parse_word("x0x1x1")).scaled(Rat(7));
  const PolyQ s = series_exp(lie, 4);
  const auto f = mrs_factorize(s, Product::Shuffle, 4);
  EXPECT_EQ(mrs_reconstruct(f, Alphabet::X, Product::Shuffle, 4), s.truncated(4));
}

TEST(BasesTest, FactorizeRoundTripQuasiShuffle) {
  PolyQ lie(Alphabet::Y);
  lie += basis_Pi(parse_word("y1")).scaled(Rat(-2));
  lie += basis_Pi(parse_word("y2")).scaled(Rat(3, 7));
  lie += basis_Pi(parse_word("y2,y1")).scaled(Rat(1, 2));
  const PolyQ s = series_exp(lie, 4);
  const auto f = mrs_factorize(s, Product::Stuffle, 4);
  EXPECT_EQ(mrs_reconstruct(f, Alphabet::Y, Product::Stuffle, 4), s.truncated(4));
}

TEST(BasesTest, FactorizeRejectsNonGrouplike) {
  PolyQ s = PolyQ::one(Alphabet::Y);
  s.add_term(parse_word("y2"), Rat(1));
  EXPECT_THROW(mrs_factorize(s, Product::Stuffle, 4), domain_error);
  std::map<Word, Rat, WordLess> bad;
  bad[parse_word("y1,y2")] = Rat(1);  // not Lyndon
  EXPECT_THROW(mrs_reconstruct(bad, Alphabet::Y, Product::Stuffle, 3), domain_error);
}

TEST(BasesTest, HarmonicSeriesFactorization) {
  const int n = 10;
  const PolyQ h = harmonic_series(n, 3);
  const auto f = mrs_factorize(h, Product::Stuffle, 3);
  // exponent at y2 = value of the harmonic sum attached to Sigma_{y2}
  Rat want(0);
  for (const auto& [v, c] : basis_Sigma(parse_word("y2")).terms)
    want += c * harmonic_oracle(v.letters, n);
  EXPECT_EQ(f.at(parse_word("y2")), want);
  EXPECT_EQ(want, harmonic_oracle({2}, n));  // Sigma_{y2} = y2 exactly
  // full round trip on the harmonic series
  EXPECT_EQ(mrs_reconstruct(f, Alphabet::Y, Product::Stuffle, 3), h);
}
