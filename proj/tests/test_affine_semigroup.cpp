#include <gtest/gtest.h>

#include "axb/affine_semigroup.hpp"
#include "axb/oracles.hpp"

using namespace axb;

TEST(GroupLaw, Products) {
    EXPECT_EQ(GroupElement(1, 2) * GroupElement(3, 5), GroupElement(7, 10));
    EXPECT_EQ(GroupElement(1, 2).inverse(), GroupElement(Rational(-1, 2), Rational(1, 2)));
    GroupElement g(Rational(2, 3), Rational(5, 7));
    EXPECT_EQ(GroupElement::identity() * g, g);
    EXPECT_EQ(g * g.inverse(), GroupElement::identity());
    EXPECT_THROW(GroupElement(0, 0), std::invalid_argument);
}

TEST(Order, Examples) {
    EXPECT_TRUE(leq(SemigroupElement(1, 2), SemigroupElement(3, 4)));
    EXPECT_FALSE(leq(SemigroupElement(0, 2), SemigroupElement(1, 2)));
    EXPECT_TRUE(leq(SemigroupElement(5, 3), SemigroupElement(5, 3)));
}

TEST(Order, SemigroupOrderMatchesGroupOrder) {
    for (Int m = 0; m <= 8; ++m)
        for (Int a = 1; a <= 6; ++a)
            for (Int n = 0; n <= 8; ++n)
                for (Int b = 1; b <= 6; ++b) {
                    SemigroupElement x{m, a}, y{n, b};
                    EXPECT_EQ(leq(x, y), leq(GroupElement(x), GroupElement(y)));
                    EXPECT_EQ(leq(x, y), oracle::below(x, y));
                }
}

// Brute force over l, c <= 12 keeps every common upper bound and takes the least.
std::optional<SemigroupElement> small_window_lub(SemigroupElement x, SemigroupElement y) {
    std::vector<SemigroupElement> ups;
    for (Int c = 1; c <= 12; ++c)
        for (Int l = 0; l <= 12; ++l) {
            SemigroupElement z{l, c};
            if (leq(GroupElement(x), GroupElement(z)) && leq(GroupElement(y), GroupElement(z))) ups.push_back(z);
        }
    for (auto& z : ups)
        if (std::all_of(ups.begin(), ups.end(), [&](auto& u) { return leq(GroupElement(z), GroupElement(u)); }))
            return z;
    return std::nullopt;
}

TEST(Lub, Examples) {
    EXPECT_EQ(lub({1, 2}, {0, 3}), small_window_lub({1, 2}, {0, 3}));
    EXPECT_EQ(lub({1, 2}, {0, 3}), SemigroupElement(3, 6));
    EXPECT_FALSE(small_window_lub({0, 2}, {1, 2}));
    EXPECT_FALSE(lub({0, 2}, {1, 2}));
    EXPECT_EQ(lub({4, 5}, {4, 5}), SemigroupElement(4, 5));
}

TEST(Lub, FirstCoordinateIsAtLeastBothShifts) {
    // the least nonnegative CRT solution is 3 here, which is below m = 5
    EXPECT_EQ(lub({5, 2}, {0, 3}), SemigroupElement(9, 6));
    EXPECT_EQ(lub({5, 2}, {0, 3}), oracle::lub({5, 2}, {0, 3}));
}

TEST(Lub, MatchesOracleOnSmallWindow) {
    for (Int m = 0; m <= 10; ++m)
        for (Int a = 1; a <= 10; ++a)
            for (Int n = 0; n <= 10; ++n)
                for (Int b = 1; b <= 10; ++b) ASSERT_EQ(lub({m, a}, {n, b}), oracle::lub({m, a}, {n, b}));
}

TEST(Lub, IsCommutativeAndAssociative) {
    for (Int m = 0; m <= 5; ++m)
        for (Int a = 1; a <= 4; ++a)
            for (Int n = 0; n <= 5; ++n)
                for (Int b = 1; b <= 4; ++b) {
                    SemigroupElement x{m, a}, y{n, b}, z{2, 3};
                    EXPECT_EQ(lub(x, y), lub(y, x));
                    auto xy = lub(x, y), yz = lub(y, z);
                    auto left = xy ? lub(*xy, z) : std::nullopt;
                    auto right = yz ? lub(x, *yz) : std::nullopt;
                    EXPECT_EQ(left, right);
                }
}
