#include <gtest/gtest.h>

#include <random>

#include "axb/parser.hpp"

using namespace axb;

TEST(Parser, WordExample) {
    auto w = to_word(parse_expr("s^2 v_3 v_3* s*^2"));
    Word expected{Letter::s(), Letter::s(), Letter::v(3), Letter::v(3, true), Letter::s(true), Letter::s(true)};
    EXPECT_EQ(w, expected);
}

TEST(Parser, OperatorExample) {
    auto e = parse_operator("1 - s s*");
    ASSERT_EQ(e.terms().size(), 2u);
    EXPECT_EQ(e.terms().at(Monomial::identity()), Rational(1));
    EXPECT_EQ(e.terms().at(Monomial{{1, 1}, {1, 1}}), Rational(-1));
}

TEST(Parser, SpacedStarMultiplies) {
    EXPECT_EQ(parse_operator("s * s"), parse_operator("s^2"));
    EXPECT_EQ(parse_operator("s* s"), OperatorExpr::identity());
    EXPECT_EQ(parse_operator("(s v2)*"), parse_operator("v2* s*"));
    EXPECT_EQ(parse_operator("2/3 w(1,2)"), Rational(2, 3) * parse_operator("s v2"));
}

TEST(Parser, Points) {
    auto b = parse_point("B(7;12)");
    ASSERT_TRUE(std::holds_alternative<PointB>(b));
    EXPECT_EQ(std::get<PointB>(b).r.integer_representative(), 7);
    EXPECT_EQ(modulus(b), Supernatural(12));
    auto a = parse_point("A(3;nabla)");
    ASSERT_TRUE(std::holds_alternative<PointA>(a));
    EXPECT_EQ(std::get<PointA>(a).m, 3);
    auto t = parse_point("B(16:5,27:4;2^inf*3^inf)");
    EXPECT_EQ(std::get<PointB>(t).r.residue(8), 5);
}

TEST(Parser, OtherLiterals) {
    EXPECT_EQ(parse_semigroup("(3,4)"), SemigroupElement(3, 4));
    EXPECT_EQ(parse_group("(-1/2,2/3)"), GroupElement(Rational(-1, 2), Rational(2, 3)));
    EXPECT_EQ(parse_primes("2, 3,5"), (std::vector<Int>{2, 3, 5}));
    EXPECT_EQ(parse_toeplitz("S^2 S*"), ToeplitzElement::monomial(2, 1));
    EXPECT_EQ(parse_laurent("i^-2 + 3"), LaurentPoly::monomial(-2) + LaurentPoly(3));
}

TEST(Parser, ErrorsCarryPositions) {
    try {
        parse_expr("s v4");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 3u);
        EXPECT_NE(std::string(e.what()).find("unknown prime subscript 4"), std::string::npos);
    }
    EXPECT_THROW(parse_expr("s +"), ParseError);
    EXPECT_THROW(parse_expr("(s"), ParseError);
    EXPECT_THROW(parse_expr("s^-1"), ParseError);
    EXPECT_THROW(parse_point("B(1;4^inf)"), std::exception);
    EXPECT_THROW(parse_supernatural("2^x"), std::exception);
    EXPECT_THROW(parse_primes("2,6"), std::exception);
}

namespace {

class TreeGen {
public:
    TreeGen(std::uint64_t seed, Dialect d) : rng_(seed), d_(d) {}

    Expr any(int depth) {
        int pick = depth <= 0 ? pick_int(0, 1) : pick_int(0, 5);
        switch (pick) {
            case 0: return scalar();
            case 1: return gen();
            case 2: return sum(depth - 1);
            case 3: return product(depth - 1);
            case 4: return Expr::power(any(depth - 1), pick_int(0, 4) * (negative_exponents() ? -1 : 1));
            default: return Expr::adjoint(any(depth - 1));
        }
    }

private:
    int pick_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    bool negative_exponents() { return false; }

    Expr scalar() { return Expr::scalar(Rational(pick_int(0, 9), pick_int(1, 4))); }

    Expr gen() {
        if (d_ == Dialect::toeplitz) return Expr::symbol_gen('S');
        if (d_ == Dialect::laurent) {
            auto g = Expr::symbol_gen('i');
            return pick_int(0, 1) ? Expr::power(g, pick_int(-5, 5)) : g;
        }
        switch (pick_int(0, 2)) {
            case 0: return Expr::gen(Letter::s());
            case 1: return Expr::gen(Letter::v(std::array<Int, 4>{2, 3, 5, 7}[pick_int(0, 3)]));
            default: return Expr::gen(Letter::w({pick_int(0, 6), pick_int(1, 6)}));
        }
    }

    Expr sum(int depth) {
        Expr e;
        e.kind = Expr::Kind::sum;
        int n = pick_int(1, 3);
        for (int i = 0; i < n; ++i) {
            e.children.push_back(any(depth));
            e.negated.push_back(static_cast<char>(pick_int(0, 1)));
        }
        if (n == 1) e.negated[0] = 1;  // a single positive term is not a sum
        return e;
    }

    Expr product(int depth) {
        Expr e;
        e.kind = Expr::Kind::product;
        int n = pick_int(2, 3);
        for (int i = 0; i < n; ++i) e.children.push_back(any(depth));
        return e;
    }

    std::mt19937_64 rng_;
    Dialect d_;
};

}  // namespace

TEST(Parser, PrintParseRoundTrip) {
    for (Dialect d : {Dialect::words, Dialect::toeplitz, Dialect::laurent}) {
        TreeGen gen(17, d);
        for (int i = 0; i < 2000; ++i) {
            Expr tree = gen.any(4);
            std::string text = print(tree);
            Expr back;
            ASSERT_NO_THROW(back = parse_expr(text, d)) << text;
            ASSERT_TRUE(back == tree) << text << " reparsed as " << print(back);
        }
    }
}

TEST(Parser, EvaluationRespectsAdjoint) {
    EXPECT_EQ(parse_toeplitz("(S^2 S* + 3)*"), parse_toeplitz("S S*^2 + 3"));
    EXPECT_EQ(parse_laurent("(i^2 + i)*"), parse_laurent("i^-2 + i^-1"));
}

TEST(Parser, AlgebraElementsRoundTrip) {
    std::mt19937_64 rng(5);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    for (int i = 0; i < 500; ++i) {
        ToeplitzElement t;
        LaurentPoly f;
        for (int k = 0; k < 3; ++k) {
            Rational c(pick(-6, 6), pick(1, 5));
            t.add(pick(0, 4), pick(0, 4), c);
            f.add(pick(-4, 4), c);
        }
        ASSERT_EQ(parse_toeplitz(t.to_string()), t) << t.to_string();
        ASSERT_EQ(parse_laurent(f.to_string()), f) << f.to_string();
    }
    EXPECT_EQ(ToeplitzElement::monomial(2, 1).to_string(), "S^2 S*");
    EXPECT_EQ(LaurentPoly::monomial(1).to_string(), "i");
}
