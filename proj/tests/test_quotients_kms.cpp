#include <gtest/gtest.h>

#include <cmath>

#include "axb/parser.hpp"
#include "axb/quotients_kms.hpp"

using namespace axb;

TEST(Dynamics, Scale) {
    EXPECT_EQ(dynamics_scale(Monomial{{1, 1}, {}}), Rational(1));
    // v_2 v_3* scales by 2 then by 1/3
    EXPECT_EQ(dynamics_scale(parse_operator("v2 v3*").terms().begin()->first), Rational(2) * Rational(1, 3));
    EXPECT_EQ(dynamics_scale(parse_operator("v2 v3").terms().begin()->first), Rational(6));
}

TEST(Kms, PrimeValues) {
    auto nine = kms_value(StateParams::finite(2), parse_operator("s v3 v3* s*"));
    EXPECT_EQ(nine.value, KmsValue(Rational(1, 9)));
    EXPECT_FALSE(nine.uses_composite);
    EXPECT_TRUE(kms_value(StateParams::finite(Rational(7, 3)), OperatorExpr::identity()).value.is_one());
    for (Int p : {2, 3, 5, 7}) {
        auto v = kms_value(StateParams::finite(Rational(3, 2)), prime_partition(p)).value;
        EXPECT_NEAR(v.to_double(), std::pow(p, -0.5), 1e-12);
    }
}

TEST(Kms, RejectsNonProjections) {
    EXPECT_THROW(kms_value(StateParams::finite(2), parse_operator("s")), std::invalid_argument);
    EXPECT_THROW(kms_value(StateParams::finite(2), parse_operator("-v2 v2*")), std::invalid_argument);
    EXPECT_THROW(StateParams::finite(Rational(1, 2)), std::invalid_argument);
    EXPECT_THROW(kms_value(StateParams::ground(), parse_operator("s s*")), std::invalid_argument);
}

TEST(Kms, GroundAndInfinity) {
    EXPECT_TRUE(kms_value(StateParams::ground(), kms_projection(1, 3)).value.is_zero());
    EXPECT_TRUE(kms_value(StateParams::ground(), OperatorExpr::identity()).value.is_one());
    EXPECT_TRUE(kms_value(StateParams::kms_infinity(), kms_projection(0, 5)).value.is_zero());
}

TEST(Kms, FactoringPredicates) {
    EXPECT_EQ(factors_through(StateParams::finite(1), Quotient::mult).truth, Predicate::Truth::yes);
    auto two = factors_through(StateParams::finite(2), Quotient::mult);
    EXPECT_EQ(two.truth, Predicate::Truth::no);
    EXPECT_EQ(two.witness_prime, 2);
    EXPECT_EQ(factors_through(StateParams::finite(5), Quotient::add).truth, Predicate::Truth::yes);
    EXPECT_EQ(factors_through(StateParams::ground(), Quotient::add).truth, Predicate::Truth::conditional);
}

TEST(Cube, RelationSets) {
    EXPECT_TRUE(implication_closure(node_relations(Node::T_add)).count(Relation::T4));
    EXPECT_TRUE(implication_closure(node_relations(Node::T_mult)).count(Relation::T5));
    EXPECT_TRUE(relation_monotonicity_violations().empty());
}

TEST(Cube, ReductionInQuotients) {
    auto ss = parse_operator("s s*");
    EXPECT_EQ(reduce_in_node(ss, Node::T_add), OperatorExpr::identity());
    EXPECT_EQ(reduce_in_node(ss, Node::T), ss);
    EXPECT_EQ(reduce_in_node(prime_partition(3), Node::T_mult), OperatorExpr::identity());
    EXPECT_EQ(reduce_in_node(prime_partition(3), Node::T_add), prime_partition(3));
}

TEST(Cube, FacesCommute) {
    std::vector<Int> primes{2, 3, 5};
    for (auto& f : cube_faces()) {
        auto r = cube_face_check(f.name, primes);
        EXPECT_TRUE(r.passed()) << f.name;
        EXPECT_GT(r.checked, 0u);
    }
    EXPECT_TRUE(cube_face_check("identity", primes).passed());
    EXPECT_THROW(cube_face_check("diagonal", primes), std::invalid_argument);
}

TEST(Cube, TopFaceOnGenerators) {
    for (Int p : {2, 3, 5}) {
        CubeElement v{Node::T, OperatorExpr(Monomial{{0, p}, {}})};
        auto via_mult = apply_path({CubeMap::q_mult, CubeMap::theta2}, v);
        auto via_module = apply_path({CubeMap::theta1, CubeMap::Q_K}, v);
        EXPECT_EQ(std::get<ModuleVectorK>(via_mult.value), std::get<ModuleVectorK>(via_module.value));
        EXPECT_EQ(std::get<ModuleVectorK>(via_mult.value), embed<KSystem>(p, ToeplitzElement(1)));
    }
    CubeElement s{Node::T, OperatorExpr(Monomial{{1, 1}, {}})};
    EXPECT_THROW(apply_map(CubeMap::rho_NT, s), std::invalid_argument);
}
