// Tests for the rational-expression layer.  The star rewriting rules are
// checked against geometric word expansions (an independent representation
// where shuffle and concatenation products can be computed directly), and
// the eta character against brute-force harmonic sums.

#include <gtest/gtest.h>

#include <vector>

#include "mzkit/ratexpr.hpp"
#include "test_util.hpp"

using namespace mzkit;
using mzkit_test::harmonic_oracle;

namespace {

RatExpr x1star(int k) { return RatExpr::star(Alphabet::X, 1, Rat(k)); }
RatExpr y1star(const Rat& k) { return RatExpr::star(Alphabet::Y, 1, k); }

}  // namespace

TEST(RatExprTest, NormalizeMergesSameLetterStars) {
  // (x1*)^{sh 2} -> (2 x1)*
  RatExpr e(Alphabet::X);
  e.terms.push_back({{StarAtom{1, Rat(1), 1}, StarAtom{1, Rat(1), 1}}, Word(Alphabet::X, {}), Rat(1)});
  EXPECT_TRUE(rat_equal(e, x1star(2)));
  // and the merge is honest: expansions agree as word polynomials
  const auto lhs = shuffle_product(star_expand(Alphabet::X, 1, Rat(1), 6),
                                   star_expand(Alphabet::X, 1, Rat(1), 6))
                       .truncated(6);
  EXPECT_EQ(lhs, rat_expand(x1star(2), 6));
}

TEST(RatExprTest, GeneralStarMerge) {
  // (a x)* sh (b x)* = ((a+b) x)*, checked through expansions
  const Rat a(2, 3), b(-1, 5);
  const auto prod = shuffle_product(star_expand(Alphabet::X, 0, a, 5),
                                    star_expand(Alphabet::X, 0, b, 5))
                        .truncated(5);
  EXPECT_EQ(prod, star_expand(Alphabet::X, 0, a + b, 5));
  EXPECT_TRUE(rat_equal(rat_shuffle(RatExpr::star(Alphabet::X, 0, a), RatExpr::star(Alphabet::X, 0, b)),
                        RatExpr::star(Alphabet::X, 0, a + b)));
}

TEST(RatExprTest, NormalizeExpandsStarPowers) {
  // (a x0)^{*2} -> (a x0)* sh (1 + a x0)
  const Rat a(2, 3);
  const RatExpr pow2 = RatExpr::star(Alphabet::X, 0, a, 2);
  RatExpr want = RatExpr::star(Alphabet::X, 0, a);
  RatExpr second(Alphabet::X);
  second.terms.push_back({{StarAtom{0, a, 1}}, parse_word("x0"), a});
  want += second;
  EXPECT_TRUE(rat_equal(pow2, want));
  // star concat-powers against the direct concatenation of expansions
  for (int i = 1; i <= 3; ++i) {
    const RatExpr powi = RatExpr::star(Alphabet::X, 0, a, i);
    NCPoly<Rat> direct = NCPoly<Rat>::one(Alphabet::X);
    for (int r = 0; r < i; ++r)
      direct = concat_product(direct, star_expand(Alphabet::X, 0, a, 6), 6);
    EXPECT_EQ(rat_expand(powi, 6), direct) << i;
  }
}

TEST(RatExprTest, NormalizeTrivialCases) {
  EXPECT_TRUE(rat_equal(rat_shuffle(RatExpr::star(Alphabet::X, 0, Rat(1)), RatExpr::one(Alphabet::X)),
                        RatExpr::star(Alphabet::X, 0, Rat(1))));
  // (0 x)* = 1
  EXPECT_TRUE(rat_equal(RatExpr::star(Alphabet::X, 1, Rat(0)), RatExpr::one(Alphabet::X)));
  EXPECT_THROW(star_shuffle_normalize(RatExpr::star(Alphabet::X, 1, Rat(1), -1)), domain_error);
  EXPECT_THROW(star_shuffle_normalize(RatExpr::star(Alphabet::X, 3, Rat(1))), domain_error);
}

TEST(RatExprTest, LambdaFrozenValues) {
  // (2 x1)* - x1* -> t^2 - t
  const OneVarPoly p = lambda_map(x1star(2) - x1star(1));
  EXPECT_EQ(p, OneVarPoly({Rat(0), Rat(-1), Rat(1)}));
  EXPECT_EQ(lambda_map(RatExpr::one(Alphabet::X)), OneVarPoly({Rat(1)}));
  EXPECT_TRUE(rat_equal(lambda_inv(OneVarPoly::monomial(3)), x1star(3)));
}

TEST(RatExprTest, LambdaBijection) {
  for (int k = 0; k <= 8; ++k) {
    const OneVarPoly p = OneVarPoly::monomial(k, Rat(k + 1, 3));
    EXPECT_EQ(lambda_map(lambda_inv(p)), p);
  }
  const OneVarPoly q({Rat(5), Rat(0), Rat(-7, 2), Rat(1, 6)});
  EXPECT_EQ(lambda_map(lambda_inv(q)), q);
  const RatExpr e = x1star(4).scaled(Rat(2)) - x1star(1).scaled(Rat(1, 3));
  EXPECT_TRUE(rat_equal(lambda_inv(lambda_map(e)), e));
}

TEST(RatExprTest, LambdaRespectsShuffle) {
  // lambda is a shuffle-to-product morphism: (j x1)* sh (k x1)* -> t^{j+k}
  for (int j = 0; j <= 3; ++j)
    for (int k = 0; k <= 3; ++k) {
      const RatExpr prod = rat_shuffle(x1star(j), x1star(k));
      EXPECT_EQ(lambda_map(prod), lambda_map(x1star(j)) * lambda_map(x1star(k)));
    }
}

TEST(RatExprTest, LambdaErrors) {
  EXPECT_THROW(lambda_map(RatExpr::star(Alphabet::X, 0, Rat(1))), domain_error);
  EXPECT_THROW(lambda_map(RatExpr::from_word(parse_word("x1"))), domain_error);
  EXPECT_THROW(lambda_map(RatExpr::star(Alphabet::X, 1, Rat(1, 2))), domain_error);
  EXPECT_THROW(lambda_map(y1star(Rat(1))), domain_error);
}

TEST(RatExprTest, PcheckSubstitute) {
  // t^2 - t -> (2 x1)* - x1*
  EXPECT_TRUE(rat_equal(pcheck_substitute(OneVarPoly({Rat(0), Rat(-1), Rat(1)})),
                        x1star(2) - x1star(1)));
  // t - 1 -> x1* - 1
  EXPECT_TRUE(rat_equal(pcheck_substitute(OneVarPoly({Rat(-1), Rat(1)})),
                        x1star(1) - RatExpr::one(Alphabet::X)));
  EXPECT_TRUE(rat_equal(pcheck_substitute(OneVarPoly({Rat(1)})), RatExpr::one(Alphabet::X)));
  // lambda(pcheck_substitute(p)) = p
  const OneVarPoly p({Rat(0), Rat(-1), Rat(3), Rat(2)});
  EXPECT_EQ(lambda_map(pcheck_substitute(p)), p);
}

TEST(RatExprTest, OneVarPolyViews) {
  const OneVarPoly p({Rat(0), Rat(-1), Rat(1)});  // t^2 - t
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.valuation(), 1);
  EXPECT_EQ(p.eval(Rat(1)), Rat(0));
  EXPECT_EQ(p.eval(Rat(3)), Rat(6));
  EXPECT_EQ(p.eval_tilde(Rat(1)), Rat(-1, 2));
  EXPECT_EQ(p.factorial_transform(), OneVarPoly({Rat(0), Rat(-1), Rat(2)}));
  EXPECT_EQ(p.exp_transform(), OneVarPoly({Rat(0), Rat(-1), Rat(1, 2)}));
  EXPECT_EQ(OneVarPoly::monomial(1) * OneVarPoly({Rat(-1), Rat(1)}), p);
  EXPECT_EQ(OneVarPoly().degree(), -1);
}

TEST(RatExprTest, EtaFrozenValues) {
  EXPECT_EQ(eta_eval(y1star(Rat(2)) - y1star(Rat(1)), 4), Rat(10));
  EXPECT_EQ(eta_eval(y1star(Rat(1)), 3), Rat(4));
  EXPECT_EQ(eta_eval(RatExpr::one(Alphabet::Y), 7), Rat(1));
  EXPECT_EQ(eta_eval(y1star(Rat(1, 2)), 2), Rat(15, 8));
}

TEST(RatExprTest, EtaBinomialForm) {
  for (int k = 0; k <= 5; ++k)
    for (int n = 0; n <= 10; ++n)
      EXPECT_EQ(eta_eval(y1star(Rat(k)), n), Rat(binomial(Int(n + k), k))) << k << "," << n;
}

TEST(RatExprTest, EtaMatchesGeometricExpansion) {
  // eta((k y1)*)(n) = H of the truncated expansion, valid while n <= cutoff
  const int cutoff = 8;
  for (int k = 1; k <= 3; ++k) {
    const auto expansion = star_expand(Alphabet::Y, 1, Rat(k), cutoff);
    for (int n = 0; n <= cutoff; ++n) {
      Rat h(0);
      for (const auto& [w, c] : expansion.terms) h += c * harmonic_oracle(w.letters, n);
      EXPECT_EQ(eta_eval(y1star(Rat(k)), n), h) << k << "," << n;
    }
  }
}

TEST(RatExprTest, EtaIsAStuffleCharacter) {
  // eta(A)(n) eta(B)(n) = H_{A qs B}(n), with the stuffle computed on
  // geometric expansions truncated at weight 8 and n kept <= 8 so the
  // truncation is exact.
  const int cutoff = 8;
  std::vector<RatExpr> atoms{RatExpr::one(Alphabet::Y), y1star(Rat(1)), y1star(Rat(2))};
  for (const RatExpr& a : atoms)
    for (const RatExpr& b : atoms) {
      const auto prod = stuffle_product(rat_expand(a, cutoff), rat_expand(b, cutoff));
      for (int n = 0; n <= cutoff; ++n) {
        Rat h(0);
        for (const auto& [w, c] : prod.terms) h += c * harmonic_oracle(w.letters, n);
        EXPECT_EQ(eta_eval(a, n) * eta_eval(b, n), h) << n;
      }
    }
}

TEST(RatExprTest, EtaErrors) {
  EXPECT_THROW(eta_eval(x1star(1), 3), domain_error);
  EXPECT_THROW(eta_eval(RatExpr::from_word(parse_word("y1")), 3), domain_error);
  EXPECT_THROW(eta_eval(y1star(Rat(1)), -1), domain_error);
}
