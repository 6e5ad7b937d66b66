#include <gtest/gtest.h>

#include "axb/product_modules.hpp"

using namespace axb;

namespace {
LaurentPoly I(Int n) { return LaurentPoly::monomial(n); }
ToeplitzElement S(Int m, Int n) { return ToeplitzElement::monomial(m, n); }
}  // namespace

TEST(ModuleL, EmbedCoordinates) {
    auto v = embed<LSystem>(2, I(3));
    ASSERT_EQ(v.coords.size(), 2u);
    // coordinate k is L_2(i^{-k} i^3)
    EXPECT_EQ(v.coords[0], transfer_L(2, I(3)));
    EXPECT_EQ(v.coords[1], transfer_L(2, I(2)));
    EXPECT_EQ(v.coords[0], LaurentPoly());
    EXPECT_EQ(v.coords[1], I(1));
    for (Int a = 1; a <= 5; ++a) EXPECT_EQ(embed<LSystem>(a, LaurentPoly(1)), basis_vector<LSystem>(a, 0));
}

TEST(ModuleL, InnerProducts) {
    EXPECT_EQ(inner(embed<LSystem>(2, I(1)), embed<LSystem>(2, I(1))), LaurentPoly(1));
    EXPECT_TRUE(inner(embed<LSystem>(2, I(0)), embed<LSystem>(2, I(1))).is_zero());
}

TEST(ModuleK, OrthonormalBasis) {
    for (Int a = 1; a <= 8; ++a)
        for (Int j = 0; j < a; ++j)
            for (Int k = 0; k < a; ++k)
                EXPECT_EQ(inner(embed<KSystem>(a, S(j, 0)), embed<KSystem>(a, S(k, 0))),
                          j == k ? ToeplitzElement(1) : ToeplitzElement());
}

TEST(ModuleL, Products) {
    EXPECT_EQ(module_mult(embed<LSystem>(2, LaurentPoly(1)), embed<LSystem>(3, LaurentPoly(1))),
              embed<LSystem>(6, LaurentPoly(1)));
    EXPECT_EQ(module_mult(embed<LSystem>(2, I(1)), embed<LSystem>(3, LaurentPoly(1))), embed<LSystem>(6, I(1)));
    for (Int a = 1; a <= 4; ++a)
        EXPECT_EQ(module_mult(embed<LSystem>(a, I(2)), embed<LSystem>(1, I(-1))),
                  embed<LSystem>(a, I(2) * alpha(a, I(-1))));
}

TEST(ModuleL, FrameIsIdentity) {
    for (Int a = 1; a <= 7; ++a) {
        auto sum = ModuleOperatorL::zero(a);
        for (Int k = 0; k < a; ++k) sum = sum + rank_one(embed<LSystem>(a, I(k)), embed<LSystem>(a, I(k)));
        EXPECT_EQ(sum, ModuleOperatorL::identity(a));
    }
    auto t = rank_one(embed<LSystem>(2, LaurentPoly(1)), embed<LSystem>(2, LaurentPoly(1)));
    auto out = apply(t, embed<LSystem>(2, I(1)));
    EXPECT_TRUE(out.coords[0].is_zero() && out.coords[1].is_zero());
}

TEST(NicaPair, RankOneOnTheProductFibre) {
    auto one6l = embed<LSystem>(6, LaurentPoly(1));
    auto one6k = embed<KSystem>(6, ToeplitzElement(1));
    EXPECT_EQ(nica_pair<LSystem>(2, 3), rank_one(one6l, one6l));
    EXPECT_EQ(nica_pair<KSystem>(2, 3), rank_one(one6k, one6k));
    EXPECT_EQ(iota(2, 3, ModuleOperatorK::identity(2)), ModuleOperatorK::identity(6));
    EXPECT_THROW(nica_pair<LSystem>(2, 4), std::invalid_argument);
}

TEST(ModuleK, BlockIdentities) {
    EXPECT_TRUE(lemma62_a(3, 2, 4));
    EXPECT_TRUE(lemma62_b(5, 1, 3));
    EXPECT_THROW(lemma62_b(3, 1, 3), std::invalid_argument);
    EXPECT_TRUE(lemma62_c(2, 3, S(1, 1)));
    EXPECT_TRUE(lemma62_c(3, 5, S(4, 2)));
}

TEST(Morphisms, PiAndMu) {
    EXPECT_EQ(morphism_pi(embed<KSystem>(2, S(1, 0))), embed<LSystem>(2, I(1)));
    for (Int a = 1; a <= 4; ++a)
        for (Int m = 0; m <= 3; ++m)
            for (Int n = 0; n <= 3; ++n) {
                EXPECT_EQ(morphism_pi(embed<KSystem>(a, S(m, n))), embed<LSystem>(a, rho(S(m, n))));
                EXPECT_EQ(morphism_mu(phi<KSystem>(a, S(m, n))), phi<LSystem>(a, rho(S(m, n))));
            }
}
