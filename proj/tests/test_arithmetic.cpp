#include <gtest/gtest.h>

#include "axb/arithmetic.hpp"

using namespace axb;

TEST(Rational, NormalizesSignAndGcd) {
    Rational r(6, -4);
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 2);
    EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
    EXPECT_EQ(Rational(-7, 2).floor(), -4);
    EXPECT_EQ(Rational(-7, 2).ceil(), -3);
    EXPECT_TRUE(Rational(1, 3) < Rational(1, 2));
}

TEST(Rational, ParsesFractionsAndDecimals) {
    EXPECT_EQ(Rational::parse("3/6"), Rational(1, 2));
    EXPECT_EQ(Rational::parse("-2"), Rational(-2));
    EXPECT_EQ(Rational::parse("1.1"), Rational(11, 10));
    EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
}

TEST(Checked, OverflowIsReported) {
    EXPECT_THROW(checked_mul(Int{1} << 62, 4), std::overflow_error);
    EXPECT_EQ(floor_mod(-7, 3), 2);
    EXPECT_EQ(ceil_div(7, 2), 4);
}

TEST(Supernatural, Exponents) {
    EXPECT_EQ(Supernatural(12).exponent(2).value(), 2u);
    EXPECT_TRUE(Supernatural::nabla().exponent(7).is_infinite());
    EXPECT_EQ(Supernatural(1).exponent(3).value(), 0u);
}

TEST(Supernatural, Divisibility) {
    EXPECT_TRUE(divides(Supernatural(6), Supernatural(12)));
    EXPECT_TRUE(divides(Supernatural(12), Supernatural::nabla()));
    EXPECT_FALSE(divides(Supernatural(8), Supernatural(12)));
    EXPECT_TRUE(Supernatural::parse("2^inf").divisible_by(1024));
    EXPECT_FALSE(Supernatural::parse("2^inf").divisible_by(3));
}

TEST(Supernatural, LcmGcd) {
    EXPECT_EQ(lcm(Supernatural(4), Supernatural(6)), Supernatural(12));
    EXPECT_EQ(gcd(Supernatural(4), Supernatural(6)), Supernatural(2));
    EXPECT_TRUE(lcm(Supernatural::parse("2^inf"), Supernatural::nabla()).is_nabla());
    EXPECT_EQ(gcd(Supernatural::parse("2^inf*3"), Supernatural(12)), Supernatural(12));
}

TEST(Supernatural, ParseAndPrintRoundTrip) {
    for (auto text : {"1", "12", "2^inf", "nabla", "2^inf*3^2", "3^inf*5"}) {
        auto n = Supernatural::parse(text);
        EXPECT_EQ(Supernatural::parse(n.to_string()), n) << text;
    }
    EXPECT_THROW(Supernatural::parse("4^inf"), std::invalid_argument);
    EXPECT_THROW(Supernatural::parse("2^"), std::invalid_argument);
}

TEST(Supernatural, ScaledByRational) {
    EXPECT_EQ(*Supernatural(12).scaled(Rational(1, 2)), Supernatural(6));
    EXPECT_FALSE(Supernatural(12).scaled(Rational(1, 8)));
    EXPECT_TRUE(Supernatural::nabla().scaled(Rational(3, 5))->is_nabla());
}

TEST(Crt, AgreesWithSearch) {
    for (Int m1 = 1; m1 <= 12; ++m1)
        for (Int m2 = 1; m2 <= 12; ++m2)
            for (Int r1 = 0; r1 < m1; ++r1)
                for (Int r2 = 0; r2 < m2; ++r2) {
                    std::optional<Int> found;
                    Int l = m1 * m2 / std::gcd(m1, m2);
                    for (Int x = 0; x < l && !found; ++x)
                        if (x % m1 == r1 && x % m2 == r2) found = x;
                    auto c = crt(r1, m1, r2, m2);
                    ASSERT_EQ(c.has_value(), found.has_value());
                    if (c) {
                        EXPECT_EQ(c->first, *found);
                        EXPECT_EQ(c->second, l);
                    }
                }
}

TEST(ProfiniteResidue, IntegerResidues) {
    EXPECT_EQ(ProfiniteResidue::from_integer(7, 12).residue(4), 3);
    EXPECT_EQ(ProfiniteResidue::from_integer(5, Supernatural::nabla()).residue(3), 2);
    EXPECT_EQ(ProfiniteResidue::from_integer(7, 12).reduce(6).residue(6), 1);
    EXPECT_THROW(ProfiniteResidue::from_integer(7, 12).residue(5), std::domain_error);
}

TEST(ProfiniteResidue, TableDeterminesCompatibleResidues) {
    auto r = ProfiniteResidue::from_table({{16, 5}, {27, 4}}, Supernatural::parse("2^inf*3^inf"));
    EXPECT_EQ(r.residue(8), 5);
    EXPECT_EQ(r.residue(9), 4);
    EXPECT_EQ(r.residue(6), 1);  // 5 mod 2 and 4 mod 3
    EXPECT_FALSE(r.try_residue(32));
    EXPECT_THROW(ProfiniteResidue::from_table({{4, 1}, {6, 2}}, 12), std::invalid_argument);
}

TEST(ProfiniteResidue, AffineImage) {
    auto r = ProfiniteResidue::from_integer(0, 3);
    auto img = r.affine_image(1, 2);
    ASSERT_TRUE(img);
    EXPECT_EQ(img->integer_representative(), 1);
    EXPECT_EQ(img->modulus(), Supernatural(6));
    // 1/2 + 1/2·r needs r odd at modulus 2
    EXPECT_FALSE(ProfiniteResidue::from_integer(2, 4).affine_image(Rational(1, 2), Rational(1, 2)));
    EXPECT_TRUE(ProfiniteResidue::from_integer(1, 4).affine_image(Rational(1, 2), Rational(1, 2)));
}
