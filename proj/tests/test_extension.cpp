#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace quord;
using fixtures::a;
using fixtures::b;
using fixtures::bot;
using fixtures::m2;
using fixtures::top;

TEST(Szpilrajn, LinearInputIsKept) {
    LinearOrder l = LinearOrder::from_sequence({2, 0, 1});
    EXPECT_EQ(szpilrajn_extension(l, LinearOrder::natural(3)), l);
}

TEST(Szpilrajn, SeedWinsOnAntichain) {
    PartialOrder p(Relation::identity(3));
    EXPECT_EQ(szpilrajn_extension(p, LinearOrder::natural(3)), LinearOrder::natural(3));
}

TEST(Szpilrajn, SeedBreaksTieInBooleanLattice) {
    PartialOrder p(fixtures::m2_relation());
    LinearOrder seed = LinearOrder::from_sequence({top, b, a, bot});
    EXPECT_EQ(szpilrajn_extension(p, seed).sequence(), (std::vector<Element>{bot, b, a, top}));
}

TEST(Szpilrajn, AlwaysExtends) {
    PartialOrder p(fixtures::s3().relation());
    for (const auto& seed : {LinearOrder::natural(6), LinearOrder::from_sequence({5, 4, 3, 2, 1, 0})}) {
        LinearOrder l = szpilrajn_extension(p, seed);
        EXPECT_TRUE(p.relation().subset_of(l.relation()));
    }
}

TEST(Tighten, FullAboveIdentity) {
    HalfSpace full(Relation::full(2));
    HalfSpace t = tighten_halfspace(Quasiorder::identity(2), full, LinearOrder::natural(2));
    EXPECT_EQ(t.relation(), Relation::from_pairs(2, {{0, 1}}, true));
}

TEST(Tighten, HalfspaceAboveItself) {
    Quasiorder g(Relation::from_pairs(3, {{0, 1}, {1, 0}, {0, 2}, {1, 2}}, true));
    EXPECT_EQ(tighten_halfspace(g, HalfSpace(g), LinearOrder::natural(2)).quasiorder(), g);
    HalfSpace lattice(m2());
    EXPECT_EQ(tighten_halfspace(m2(), lattice, LinearOrder::from_sequence({bot, b, a, top})), lattice);
}

TEST(Tighten, Postconditions) {
    Quasiorder g = fixtures::vee();
    HalfSpace alpha(Relation::full(3));
    HalfSpace t = tighten_halfspace(g, alpha, LinearOrder::from_sequence({2, 0, 1}));
    EXPECT_TRUE(g.relation().subset_of(t.relation()));
    EXPECT_TRUE(t.relation().subset_of(alpha.relation()));
    EXPECT_EQ(t.relation() & t.relation().inverse(), Relation::identity(3));
}

TEST(Tighten, GammaNotBelowAlpha) {
    Quasiorder g(Relation::from_pairs(2, {{1, 0}}, true));
    HalfSpace alpha(Relation::from_pairs(2, {{0, 1}}, true));
    try {
        tighten_halfspace(g, alpha, LinearOrder::from_sequence({1, 0}));
        FAIL() << "expected a precondition error";
    } catch (const PreconditionError& e) {
        ASSERT_TRUE(e.witness());
        EXPECT_EQ(*e.witness(), (Pair{1, 0}));
    }
}

TEST(Tighten, OrderMustExtendInducedOrder) {
    Quasiorder g(Relation::from_pairs(2, {{0, 1}}, true));
    EXPECT_THROW(tighten_halfspace(g, HalfSpace(Relation::full(2)), LinearOrder::from_sequence({1, 0})),
                 PreconditionError);
}

TEST(Linearize, LinearIsFixed) {
    LinearOrder l = LinearOrder::from_sequence({1, 2, 0});
    EXPECT_EQ(linearize_halfspace(HalfSpace(l.relation()), LinearOrder::natural(3)), l);
}

TEST(Linearize, BooleanLattice) {
    LinearOrder lambda = LinearOrder::natural(4);
    EXPECT_EQ(linearize_halfspace(HalfSpace(m2()), lambda).sequence(), (std::vector<Element>{bot, a, b, top}));
}

TEST(Linearize, IdentityOnTwo) {
    EXPECT_EQ(linearize_halfspace(HalfSpace(Relation::identity(2)), LinearOrder::natural(2)), LinearOrder::natural(2));
}

TEST(Linearize, BothDirectionsMeetInOriginal) {
    auto [up, down] = linearize_both(HalfSpace(m2()), LinearOrder::natural(4));
    EXPECT_EQ(up.relation() & down.relation(), fixtures::m2_relation());
    EXPECT_EQ(down.sequence(), (std::vector<Element>{bot, b, a, top}));
}

TEST(Linearize, RejectsNonAntisymmetric) {
    EXPECT_THROW(linearize_halfspace(HalfSpace(Relation::full(2)), LinearOrder::natural(2)), PreconditionError);
}

TEST(TwoLinear, LinearOrderTwice) {
    LinearOrder l = LinearOrder::from_sequence({2, 0, 1});
    TwoLinearRepresentation t = two_linear_representation(HalfSpace(l.relation()));
    EXPECT_EQ(t.first, l);
    EXPECT_EQ(t.second, l);
}

TEST(TwoLinear, BooleanLattice) {
    TwoLinearRepresentation t = two_linear_representation(HalfSpace(m2()), LinearOrder::natural(4));
    EXPECT_EQ(t.first.sequence(), (std::vector<Element>{bot, a, b, top}));
    EXPECT_EQ(t.second.sequence(), (std::vector<Element>{bot, b, a, top}));
}

TEST(TwoLinear, FullCollapses) {
    TwoLinearRepresentation t = two_linear_representation(HalfSpace(Relation::full(3)));
    EXPECT_EQ(t.quotient.class_count(), 1U);
    EXPECT_EQ(t.first.size(), 1U);
    EXPECT_EQ(t.second.size(), 1U);
}

TEST(TwoLinear, SeedSizeMismatch) {
    EXPECT_THROW(two_linear_representation(HalfSpace(Relation::full(3)), LinearOrder::natural(3)), InputError);
}
