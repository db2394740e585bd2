#include <gtest/gtest.h>

#include <cstdint>

#include "fixtures.hpp"

using namespace quord;
using fixtures::a;
using fixtures::b;
using fixtures::bot;
using fixtures::m2;
using fixtures::top;

namespace {

// Brute force over raw n*n bit masks, independent of the library's
// enumeration and predicate.
std::size_t count_halfspaces_by_masks(std::size_t n) {
    auto in = [n](std::uint64_t m, std::size_t x, std::size_t y) { return ((m >> (x * n + y)) & 1U) != 0; };
    std::size_t count = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n * n)); ++m) {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x) {
            ok = in(m, x, x);
        }
        for (std::size_t x = 0; x < n && ok; ++x) {
            for (std::size_t y = 0; y < n && ok; ++y) {
                for (std::size_t z = 0; z < n && ok; ++z) {
                    ok = !(in(m, x, y) && in(m, y, z) && !in(m, x, z));
                    // complement plus diagonal must be transitive too
                    bool cxy = x == y || !in(m, x, y);
                    bool cyz = y == z || !in(m, y, z);
                    bool cxz = x == z || !in(m, x, z);
                    ok = ok && !(cxy && cyz && !cxz);
                }
            }
        }
        count += ok ? 1 : 0;
    }
    return count;
}

Relation meet_of(const std::vector<HalfSpace>& parts, std::size_t n) {
    Relation m = Relation::full(n);
    for (const auto& p : parts) {
        m = m & p.relation();
    }
    return m;
}

Relation meet_of(const std::vector<LinearOrder>& orders, std::size_t n) {
    Relation m = Relation::full(n);
    for (const auto& l : orders) {
        m = m & l.relation();
    }
    return m;
}

}  // namespace

TEST(EnumerateHalfspaces, Counts) {
    EXPECT_EQ(enumerate_halfspaces(0).size(), 1U);
    EXPECT_EQ(enumerate_halfspaces(1).size(), 1U);
    EXPECT_EQ(enumerate_halfspaces(2).size(), 4U);
    EXPECT_EQ(enumerate_halfspaces(3).size(), 20U);
}

TEST(EnumerateHalfspaces, MatchesMaskBruteForce) {
    for (std::size_t n = 1; n <= 4; ++n) {
        EXPECT_EQ(enumerate_halfspaces(n).size(), count_halfspaces_by_masks(n)) << n;
    }
}

TEST(EnumerateHalfspaces, SortedAndDistinct) {
    auto hs = enumerate_halfspaces(4);
    EXPECT_TRUE(std::is_sorted(hs.begin(), hs.end()));
    EXPECT_EQ(std::adjacent_find(hs.begin(), hs.end()), hs.end());
}

TEST(EnumerateHalfspaces, ResourceCap) {
    EXPECT_THROW(enumerate_halfspaces(8), ResourceError);
    EXPECT_THROW(enumerate_halfspaces(4, SearchLimits{.halfspace_max_n = 3}), ResourceError);
}

TEST(HalfspacesAbove, FullOnly) {
    auto above = enumerate_halfspaces_above(Quasiorder::full(3));
    ASSERT_EQ(above.size(), 1U);
    EXPECT_EQ(above[0].relation(), Relation::full(3));
}

TEST(HalfspacesAbove, IdentityOnTwo) { EXPECT_EQ(enumerate_halfspaces_above(Quasiorder::identity(2)).size(), 4U); }

TEST(HalfspacesAbove, BooleanLattice) {
    auto above = enumerate_halfspaces_above(m2());
    auto has = [&](const Relation& r) {
        return std::any_of(above.begin(), above.end(), [&](const HalfSpace& h) { return h.relation() == r; });
    };
    EXPECT_TRUE(has(fixtures::m2_relation()));
    Relation middle_full = fixtures::m2_relation();
    middle_full.insert(a, b);
    middle_full.insert(b, a);
    EXPECT_TRUE(has(middle_full));
    EXPECT_TRUE(has(LinearOrder::from_sequence({bot, a, b, top}).relation()));
    EXPECT_TRUE(has(LinearOrder::from_sequence({bot, b, a, top}).relation()));
    for (const auto& h : above) {
        EXPECT_TRUE(fixtures::m2_relation().subset_of(h.relation()));
    }
}

TEST(HsDimension, BooleanLatticeIsOne) {
    auto d = hs_dimension(m2());
    EXPECT_EQ(d.value, 1U);
    EXPECT_EQ(d.witness.parts().at(0).quasiorder(), m2());
}

TEST(HsDimension, IdentityIsOne) {
    for (std::size_t n = 1; n <= 5; ++n) {
        EXPECT_EQ(hs_dimension(Quasiorder::identity(n)).value, 1U) << n;
    }
}

TEST(HsDimension, StandardExampleIsThree) {
    auto d = hs_dimension(fixtures::s3());
    EXPECT_EQ(d.value, 3U);
    EXPECT_EQ(meet_of(d.witness.parts(), 6), fixtures::s3().relation());
}

TEST(HsDimension, VeeIsTwo) {
    auto d = hs_dimension(fixtures::vee());
    EXPECT_EQ(d.value, 2U);
    EXPECT_EQ(meet_of(d.witness.parts(), 3), fixtures::vee().relation());
}

TEST(HsDimension, DegenerateSizes) {
    EXPECT_EQ(hs_dimension(Quasiorder::identity(0)).value, 1U);
    EXPECT_EQ(order_dimension(PartialOrder(Relation::identity(0))).value, 1U);
    EXPECT_EQ(order_dimension(PartialOrder(Relation::identity(1))).value, 1U);
}

TEST(HsDimension, ResourceCap) {
    EXPECT_THROW(hs_dimension(Quasiorder::identity(8)), ResourceError);
    EXPECT_THROW(order_dimension(PartialOrder(Relation::identity(9))), ResourceError);
}

TEST(OrderDimension, Examples) {
    EXPECT_EQ(order_dimension(PartialOrder(fixtures::chain(5))).value, 1U);
    auto lattice = order_dimension(PartialOrder(fixtures::m2_relation()));
    EXPECT_EQ(lattice.value, 2U);
    EXPECT_EQ(meet_of(lattice.witness, 4), fixtures::m2_relation());
    auto s3 = order_dimension(PartialOrder(fixtures::s3()));
    EXPECT_EQ(s3.value, 3U);
    EXPECT_EQ(meet_of(s3.witness, 6), fixtures::s3().relation());
}

TEST(LinearExtensions, CountsAndOrder) {
    EXPECT_EQ(linear_extensions(PartialOrder(fixtures::m2_relation())).size(), 2U);
    auto all = linear_extensions(PartialOrder(Relation::identity(3)));
    EXPECT_EQ(all.size(), 6U);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
}

TEST(Realizer, RejectsBadFamilies) {
    EXPECT_THROW(Realizer(m2(), {}), ValidationError);
    EXPECT_THROW(Realizer(m2(), {HalfSpace(Relation::full(4))}), ValidationError);
    EXPECT_THROW(Realizer(m2(), {HalfSpace(LinearOrder::from_sequence({top, a, b, bot}).relation())}),
                 ValidationError);
}

TEST(Transform, IdentityOnTwo) {
    Realizer r(Quasiorder::identity(2), {HalfSpace(Relation::from_pairs(2, {{0, 1}}, true)),
                                         HalfSpace(Relation::from_pairs(2, {{1, 0}}, true))});
    for (std::size_t i_star : {0U, 1U}) {
        auto main = realizer_to_linear_extensions(r, LinearOrder::natural(2), i_star);
        ASSERT_EQ(main.orders.size(), 2U);
        EXPECT_EQ(main.orders[0].sequence(), (std::vector<Element>{0, 1}));
        EXPECT_EQ(main.orders[1].sequence(), (std::vector<Element>{1, 0}));
        auto alt = realizer_to_linear_extensions_alt(r, LinearOrder::from_sequence({1, 0}), i_star);
        EXPECT_EQ(alt.orders, main.orders);
    }
}

TEST(Transform, LinearTargetWithFull) {
    LinearOrder l = LinearOrder::from_sequence({2, 0, 1});
    Realizer r(l, {HalfSpace(l.relation()), HalfSpace(Relation::full(3))});
    auto main = realizer_to_linear_extensions(r, LinearOrder::natural(3), 1);
    auto alt = realizer_to_linear_extensions_alt(r, LinearOrder::natural(3), 0);
    for (const auto& t : {main, alt}) {
        ASSERT_EQ(t.orders.size(), 2U);
        EXPECT_EQ(t.orders[0], l);
        EXPECT_EQ(t.orders[1], l);
    }
}

TEST(Transform, BooleanLatticeFromLinearExtensions) {
    Realizer r(m2(), {HalfSpace(LinearOrder::from_sequence({bot, a, b, top}).relation()),
                      HalfSpace(LinearOrder::from_sequence({bot, b, a, top}).relation())});
    auto t = realizer_to_linear_extensions(r, LinearOrder::natural(4), 0);
    EXPECT_EQ(meet_of(t.orders, 4), fixtures::m2_relation());
    auto alt = realizer_to_linear_extensions_alt(r, LinearOrder::natural(4), 0);
    EXPECT_EQ(meet_of(alt.orders, 4), fixtures::m2_relation());
    EXPECT_TRUE(alt.reversal_set.has_value());
}

TEST(Transform, PreorderTarget) {
    // {0,1} equivalent, both below 2, element 3 incomparable to everything
    Quasiorder g(Relation::from_pairs(4, {{0, 1}, {1, 0}, {0, 2}, {1, 2}}, true));
    auto hs = hs_dimension(g);
    auto [padded, was_padded] = pad_realizer(hs.witness);
    EXPECT_EQ(was_padded, hs.value == 1);
    auto t = realizer_to_linear_extensions(padded, LinearOrder::natural(3), 0);
    EXPECT_EQ(t.quotient.class_count(), 3U);
    EXPECT_EQ(meet_of(t.orders, 3), t.quotient.induced().relation());
    for (const auto& o : t.orders) {
        EXPECT_TRUE(t.quotient.induced().relation().subset_of(o.relation()));
    }
}

TEST(Transform, ArgumentErrors) {
    Realizer single(m2(), {HalfSpace(m2())});
    EXPECT_THROW(realizer_to_linear_extensions(single, LinearOrder::natural(4), 0), PreconditionError);
    EXPECT_THROW(realizer_to_linear_extensions_alt(single, LinearOrder::natural(4), 0), PreconditionError);
    auto [padded, was_padded] = pad_realizer(single);
    EXPECT_TRUE(was_padded);
    EXPECT_EQ(padded.size(), 2U);
    EXPECT_THROW(realizer_to_linear_extensions(padded, LinearOrder::natural(4), 2), InputError);
    EXPECT_THROW(realizer_to_linear_extensions(padded, LinearOrder::natural(3), 0), InputError);
}

TEST(DimensionRelation, BooleanLattice) {
    auto c = dimension_relation_check(m2());
    EXPECT_EQ(c.hs_dim, 1U);
    ASSERT_TRUE(c.order_dim);
    EXPECT_EQ(*c.order_dim, 2U);
    EXPECT_FALSE(c.is_linear);
    EXPECT_TRUE(c.has_large_empty_box);
    EXPECT_TRUE(c.holds) << c.explanation;
}

TEST(DimensionRelation, Chain) {
    auto c = dimension_relation_check(fixtures::chain(3));
    EXPECT_EQ(c.hs_dim, 1U);
    EXPECT_EQ(c.order_dim, 1U);
    EXPECT_TRUE(c.is_linear);
    EXPECT_TRUE(c.holds) << c.explanation;
}

TEST(DimensionRelation, FullOnThree) {
    auto c = dimension_relation_check(Quasiorder::full(3));
    EXPECT_EQ(c.hs_dim, 1U);
    EXPECT_EQ(c.quotient_dim, 1U);
    EXPECT_FALSE(c.order_dim);
    EXPECT_FALSE(c.has_large_empty_box);
    EXPECT_TRUE(c.holds) << c.explanation;
}

TEST(DimensionRelation, StandardExample) {
    auto c = dimension_relation_check(fixtures::s3());
    EXPECT_EQ(c.hs_dim, 3U);
    EXPECT_EQ(c.order_dim, 3U);
    EXPECT_TRUE(c.holds) << c.explanation;
}
