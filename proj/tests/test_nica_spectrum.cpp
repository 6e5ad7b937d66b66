#include <gtest/gtest.h>

#include "axb/nica_spectrum.hpp"
#include "axb/parser.hpp"

using namespace axb;

TEST(Points, Membership) {
    EXPECT_TRUE(contains(make_a(7, 12), {3, 4}));
    EXPECT_FALSE(contains(make_a(7, 12), {5, 4}));
    EXPECT_TRUE(contains(make_b(7, 12), {3, 4}));
    EXPECT_FALSE(contains(make_b(7, 12), {3, 5}));
    EXPECT_THROW(make_a(-1, 3), std::invalid_argument);
}

TEST(Points, BoundaryClasses) {
    EXPECT_EQ(boundary_class(make_b(7, 12)), BoundaryClass::additive);
    EXPECT_EQ(boundary_class(make_a(3, Supernatural::nabla())), BoundaryClass::multiplicative);
    EXPECT_EQ(boundary_class(make_b(4, Supernatural::nabla())), BoundaryClass::minimal);
    EXPECT_EQ(boundary_class(make_a(3, 12)), BoundaryClass::interior);
}

// Independent hereditary closure: enumerate the source window, map through g and close
// downward, using only the membership predicate of the source point.
WindowSet closure_oracle(const GroupElement& g, const OmegaPoint& w, const Window& win) {
    WindowSet out(static_cast<std::size_t>(win.max_a + 1), std::vector<char>(static_cast<std::size_t>(win.max_k + 1)));
    for (Int c = 1; c <= 72; ++c)
        for (Int l = 0; l <= 400; ++l) {
            if (!contains(w, {l, c})) continue;
            GroupElement image = g * GroupElement(SemigroupElement{l, c});
            auto p = image.in_semigroup();
            if (!p) continue;
            for (Int a = 1; a <= win.max_a; ++a)
                for (Int k = 0; k <= win.max_k; ++k)
                    if (leq(SemigroupElement{k, a}, *p)) out[a][k] = true;
        }
    return out;
}

TEST(Action, ExampleMatchesIndependentClosure) {
    Window win{60, 12};
    auto r = partial_act({1, 2}, make_b(0, 3), win);
    ASSERT_EQ(r.status, ActionStatus::defined);
    EXPECT_TRUE(same_point(*r.point, make_b(1, 6)));
    EXPECT_EQ(closure_oracle({1, 2}, make_b(0, 3), win), window_membership(make_b(1, 6), win));
}

TEST(Action, ClosedFormsAgreeWithIndependentClosure) {
    Window win{30, 6};
    for (auto text : {"B(0;3)", "B(5;12)", "B(1;2^inf)", "A(2;nabla)"})
        for (GroupElement g : {GroupElement(1, 2), GroupElement(Rational(1, 2), Rational(1, 2)), GroupElement(-1, 3),
                               GroupElement(0, Rational(2, 3))}) {
            auto w = parse_point(text);
            auto r = partial_act(g, w, win);
            auto expected = closure_oracle(g, w, win);
            if (r.status == ActionStatus::defined)
                EXPECT_EQ(expected, window_membership(*r.point, win)) << text << " " << g;
            else
                EXPECT_FALSE(window_nonempty(expected)) << text << " " << g;
        }
}

TEST(Action, IdentityAndSubstitution) {
    for (auto text : {"A(3;12)", "B(7;12)", "A(1;nabla)", "B(2;2^inf)"}) {
        auto w = parse_point(text);
        auto r = partial_act(GroupElement::identity(), w);
        ASSERT_EQ(r.status, ActionStatus::defined) << text;
        EXPECT_TRUE(same_point(*r.point, w)) << text;
    }
    auto r = partial_act({2, 3}, make_a(1, Supernatural::nabla()));
    ASSERT_EQ(r.status, ActionStatus::defined);
    EXPECT_TRUE(same_point(*r.point, make_a(5, Supernatural::nabla())));
    EXPECT_FALSE(r.via_brute_force);
}

TEST(Action, UndefinedOutsideDomain) {
    // (-5,1) would need 5 <= m
    EXPECT_EQ(partial_act({-5, 1}, make_a(2, Supernatural::nabla())).status, ActionStatus::undefined);
    // a 1/2 scaling needs 2 | N
    EXPECT_EQ(partial_act({0, Rational(1, 2)}, make_b(1, 3)).status, ActionStatus::undefined);
}

TEST(Boundary, AdditiveCriterionWitness) {
    Window win{40, 24};
    auto a = relation_spectrum_check(make_a(7, 12), BoundaryRelation::add, win);
    EXPECT_FALSE(a.passed);
    EXPECT_EQ(a.witness, SemigroupElement(7, 1));
    EXPECT_TRUE(relation_spectrum_check(make_b(7, 12), BoundaryRelation::add, win).passed);
}

TEST(Boundary, MultiplicativeCriterionWitness) {
    Window win{40, 24};
    auto m = relation_spectrum_check(make_a(5, 12), BoundaryRelation::mult, win);
    EXPECT_FALSE(m.passed);
    EXPECT_EQ(m.witness, SemigroupElement(5, 12));
    EXPECT_EQ(m.prime, 5);
    EXPECT_TRUE(relation_spectrum_check(make_b(3, Supernatural::nabla()), BoundaryRelation::mult, win).passed);
}

TEST(Freeness, FixedPointOfAffineMap) {
    // t·m + s = m at m = s/(1-t)
    EXPECT_TRUE(is_fixed({-1, 2}, make_a(1, Supernatural::nabla())));
    EXPECT_FALSE(is_fixed({-1, 2}, make_a(2, Supernatural::nabla())));
    EXPECT_FALSE(is_fixed({0, 2}, make_b(0, 1)));
}

TEST(Convergence, ConstantAndApproximatingSequences) {
    auto gens = generator_grid(20, 20);
    std::vector<OmegaPoint> constant(3, make_b(3, 12));
    EXPECT_TRUE(converges(constant, make_b(3, 12), gens).converged);
    auto base = ProfiniteResidue::from_integer(4, 6);
    auto seq = approximate_from_finite(base, 7, 30);
    EXPECT_TRUE(converges(seq, OmegaPoint(PointB{base}), gens, 15).converged);
    EXPECT_FALSE(converges(seq, make_b(5, 6), gens, 15).converged);
}
