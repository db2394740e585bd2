#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"

using namespace quord;

TEST(EnumerateQuasiorders, Counts) {
    std::vector<std::size_t> expected{1, 1, 4, 29, 355};
    for (std::size_t n = 0; n < expected.size(); ++n) {
        EXPECT_EQ(enumerate_quasiorders(n).size(), expected[n]) << n;
    }
}

TEST(EnumerateQuasiorders, TwoElementsByHand) {
    auto all = enumerate_quasiorders(2);
    std::set<Relation> got;
    for (const auto& q : all) {
        got.insert(q.relation());
    }
    std::set<Relation> expected{Relation::identity(2), Relation::from_pairs(2, {{0, 1}}, true),
                                Relation::from_pairs(2, {{1, 0}}, true), Relation::full(2)};
    EXPECT_EQ(got, expected);
}

TEST(EnumerateQuasiorders, SortedAndMatchesInsertionOrder) {
    for (std::size_t n = 0; n <= 4; ++n) {
        auto filtered = enumerate_quasiorders(n);
        EXPECT_TRUE(std::is_sorted(filtered.begin(), filtered.end()));
        EXPECT_EQ(std::adjacent_find(filtered.begin(), filtered.end()), filtered.end());
        EXPECT_EQ(filtered, enumerate_quasiorders_by_insertion(n)) << n;
    }
}

TEST(EnumerateQuasiorders, Cap) {
    EXPECT_THROW(enumerate_quasiorders(6), ResourceError);
    EXPECT_THROW(enumerate_quasiorders_by_insertion(6), ResourceError);
}

TEST(EnumeratePartialOrders, Counts) {
    EXPECT_EQ(enumerate_partial_orders(3).size(), 19U);
    EXPECT_EQ(enumerate_partial_orders(4).size(), 219U);
}

TEST(HalfspaceConditions, AgreeOnFourElements) {
    for (const auto& q : enumerate_quasiorders(4)) {
        bool primary = is_halfspace(q).holds;
        const Relation& r = q.relation();
        EXPECT_EQ(halfspace_by_complement(r), primary) << to_string(r);
        EXPECT_EQ(halfspace_by_triples(r), primary) << to_string(r);
        EXPECT_EQ(halfspace_by_dual_exchange(r), primary) << to_string(r);
    }
}

TEST(HalfspaceConditions, FilterMatchesGeneration) {
    for (std::size_t n = 0; n <= 4; ++n) {
        std::vector<HalfSpace> filtered;
        for (const auto& q : enumerate_quasiorders(n)) {
            if (is_halfspace(q).holds) {
                filtered.emplace_back(q);
            }
        }
        EXPECT_EQ(filtered, enumerate_halfspaces(n)) << n;
    }
}

TEST(Separation, FourElementInstanceCannotBeSeparated) { EXPECT_TRUE(verify_separation_counterexample()); }

TEST(Separation, WeakerInstanceIsSeparable) {
    Quasiorder p1(Relation::from_pairs(4, {{0, 1}, {2, 3}}, true));
    Quasiorder p2(Relation::from_pairs(4, {{2, 1}}, true));
    EXPECT_FALSE(verify_separation_counterexample(p1, p2));
    auto pair = find_separating_pair(p1, p2);
    ASSERT_TRUE(pair);
    EXPECT_TRUE(p1.relation().subset_of(pair->first.relation()));
    EXPECT_TRUE(p2.relation().subset_of(pair->second.relation()));
    EXPECT_TRUE(check_complementary_pair(pair->first, pair->second));
}

TEST(Separation, IdentityAgainstItself) {
    EXPECT_FALSE(verify_separation_counterexample(Quasiorder::identity(4), Quasiorder::identity(4)));
}

TEST(Sampler, DeterministicForSeed) {
    Sampler x(7);
    Sampler y(7);
    for (int i = 0; i < 20; ++i) {
        EXPECT_EQ(x.linear_order(5), y.linear_order(5));
        EXPECT_EQ(x.partial_order(5), y.partial_order(5));
    }
}

TEST(Replay, EquivalenceSuiteOnThree) {
    SuiteReport r = theorem_replay("prop2.2-equivalence-n3");
    EXPECT_EQ(r.id, "prop2.2-equivalence-n3");
    EXPECT_EQ(r.instances, 29U);
    EXPECT_EQ(r.failures, 0U);
    EXPECT_EQ(r.seed, default_replay_seed);
}

TEST(Replay, RoundTripOnFour) {
    SuiteReport r = theorem_replay("thm2.11-roundtrip-n4");
    EXPECT_GT(r.instances, 0U);
    EXPECT_EQ(r.failures, 0U);
}

TEST(Replay, ProductsSuite) {
    SuiteReport r = theorem_replay("thm3.4-products");
    EXPECT_GT(r.instances, 0U);
    EXPECT_EQ(r.failures, 0U) << (r.messages.empty() ? "" : r.messages.front());
}

TEST(Replay, EverySuiteIsClean) {
    for (const auto& id : suite_ids()) {
        if (id == "thm2.13-n4" || id == "thm3.4-products") {
            continue;  // covered above or by the acceptance binary
        }
        SuiteReport r = theorem_replay(id);
        EXPECT_GT(r.instances, 0U) << id;
        EXPECT_EQ(r.failures, 0U) << id << ": " << (r.messages.empty() ? "" : r.messages.front());
    }
}

TEST(Replay, UnknownSuite) { EXPECT_THROW(theorem_replay("no-such-suite"), InputError); }
