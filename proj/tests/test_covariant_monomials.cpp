#include <gtest/gtest.h>

#include "axb/covariant_monomials.hpp"

using namespace axb;

namespace {
Monomial pair(SemigroupElement x, SemigroupElement y) { return {x, y}; }
}

TEST(NormalForm, Relations) {
    auto vp_vq = normalize(Word{Letter::v(2, true), Letter::v(3)});
    EXPECT_EQ(vp_vq, OperatorExpr(pair({0, 3}, {0, 2})));
    auto sv = normalize(Word{Letter::s(true), Letter::v(5)});
    EXPECT_EQ(sv, OperatorExpr(pair({4, 5}, {1, 1})));
    for (Int p : {2, 3, 5, 7})
        for (Int k = 1; k < p; ++k)
            EXPECT_TRUE(normalize(concat({{Letter::v(p, true)}, power(Letter::s(), k), {Letter::v(p)}})).is_zero());
    EXPECT_EQ(normalize(Word{Letter::v(2), Letter::v(3)}), normalize(Word{Letter::w({0, 6})}));
}

TEST(NormalForm, Printing) {
    auto e = OperatorExpr::identity() - normalize(Word{Letter::s(), Letter::s(true)});
    EXPECT_EQ(e.to_string(), "1 - w(1,1) w(1,1)*");
}

TEST(Backends, GeneratorActions) {
    EXPECT_EQ(apply(Backend::toeplitz, Letter::s(), Index{2, 3}), (Index{3, 3}));
    EXPECT_EQ(apply(Backend::bilateral, Letter::v(2), Index{3, 1}), (Index{6, 2}));
    // S is a bijection of Z x N^x on the bilateral backend; S* is its inverse
    for (Int m = -5; m <= 5; ++m)
        for (Int a = 1; a <= 4; ++a) {
            auto up = apply(Backend::bilateral, Letter::s(), Index{m, a});
            ASSERT_TRUE(up);
            EXPECT_EQ(apply(Backend::bilateral, Letter::s(true), *up), (Index{m, a}));
        }
    EXPECT_EQ(apply(Backend::bilateral, Letter::s(true), Index{0, 1}), (Index{-1, 1}));
    EXPECT_FALSE(apply(Backend::toeplitz, Letter::s(true), Index{0, 1}));
}

TEST(Backends, ToeplitzSatisfiesTheFiveRelations) {
    std::vector<Int> primes{2, 3, 5};
    std::vector<Relation> rels{Relation::T1, Relation::T2, Relation::T3, Relation::T4, Relation::T5};
    EXPECT_TRUE(verify_relations(Backend::toeplitz, rels, primes, 5, 20, 12).all_passed());
}

TEST(Backends, BilateralFailsQ5AtTheOrigin) {
    std::vector<Int> primes{2, 3};
    std::vector<Relation> rels{Relation::Q5};
    auto rep = verify_relations(Backend::bilateral, rels, primes, 3, 5, 6);
    auto f = rep.first_failure(Relation::Q5);
    ASSERT_TRUE(f);
    EXPECT_EQ(f->witness, (Index{0, 1}));
}

TEST(Faithfulness, WitnessAtOrigin) {
    std::vector<Int> f{2, 5};
    EXPECT_EQ(faithfulness_witness(Backend::toeplitz, f, true, 10, 12), (Index{0, 1}));
    EXPECT_EQ(faithfulness_witness(Backend::bilateral, f, false, 10, 12), (Index{0, 1}));
}

TEST(IdealDecomposition, PrimeGivesOneTerm) {
    for (Int p : {2, 3, 5, 7}) {
        auto t = lemma65_decompose(p);
        ASSERT_EQ(t.size(), 1u);
        EXPECT_TRUE(t[0].conjugator.empty());
        EXPECT_EQ(t[0].prime, p);
    }
}

TEST(IdealDecomposition, FourPeelsTwice) {
    auto t = lemma65_decompose(4);
    ASSERT_EQ(t.size(), 3u);
    EXPECT_EQ(t[0].conjugator, v_word(2));
    EXPECT_EQ(t[1].conjugator, concat({{Letter::s()}, v_word(2)}));
    EXPECT_TRUE(t[2].conjugator.empty());
}

TEST(IdealDecomposition, SixHoldsOnTheToeplitzWindow) {
    auto c = verify_decomposition(6, lemma65_decompose(6), 60, 36);
    EXPECT_TRUE(c.symbolic);
    EXPECT_TRUE(c.backend);
}
