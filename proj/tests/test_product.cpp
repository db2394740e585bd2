#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace quord;
using fixtures::chain;

namespace {

// Componentwise order computed straight from the definition, with factor 0
// as the most significant digit.
Relation product_by_definition(const std::vector<Quasiorder>& factors) {
    std::size_t n = 1;
    for (const auto& f : factors) {
        n *= f.size();
    }
    auto digits = [&](std::size_t i) {
        std::vector<std::size_t> d(factors.size());
        for (std::size_t k = factors.size(); k-- > 0;) {
            d[k] = i % factors[k].size();
            i /= factors[k].size();
        }
        return d;
    };
    Relation r(n);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            auto dx = digits(x);
            auto dy = digits(y);
            bool all = true;
            for (std::size_t k = 0; k < factors.size(); ++k) {
                all = all && factors[k].contains(dx[k], dy[k]);
            }
            if (all) {
                r.insert(x, y);
            }
        }
    }
    return r;
}

bool triple_refutes(const Product& p, const ProductTriple& t) {
    return violates_exchange(p.order.relation(), p.encoding.index(t.a), p.encoding.index(t.b),
                             p.encoding.index(t.c));
}

}  // namespace

TEST(Encoding, MixedRadix) {
    ProductEncoding e({2, 3});
    EXPECT_EQ(e.size(), 6U);
    EXPECT_EQ(e.strides(), (std::vector<std::size_t>{3, 1}));
    std::vector<Element> t{1, 2};
    EXPECT_EQ(e.index(t), 5U);
    EXPECT_EQ(e.tuple(4), (std::vector<Element>{1, 1}));
    EXPECT_THROW(ProductEncoding({8, 9}), ResourceError);
}

TEST(DirectProduct, TwoChainsMakeBooleanLattice) {
    Product p = direct_product({chain(2), chain(2)});
    EXPECT_EQ(p.order, fixtures::m2());
}

TEST(DirectProduct, PointFactorReindexes) {
    EXPECT_EQ(direct_product({fixtures::m2(), Quasiorder::identity(1)}).order, fixtures::m2());
    EXPECT_EQ(direct_product({Quasiorder::identity(1), fixtures::vee()}).order, fixtures::vee());
}

TEST(DirectProduct, ChainTimesAntichain) {
    Product p = direct_product({chain(2), Quasiorder::identity(2)});
    EXPECT_EQ(p.order.relation(), Relation::from_pairs(4, {{0, 2}, {1, 3}}, true));
}

TEST(DirectProduct, MatchesDefinition) {
    std::vector<Quasiorder> factors{fixtures::vee(), Quasiorder(Relation::from_pairs(2, {{1, 0}}, true)),
                                    Quasiorder::full(2)};
    EXPECT_EQ(direct_product(factors).order.relation(), product_by_definition(factors));
}

TEST(DirectProduct, Errors) {
    EXPECT_THROW(direct_product(std::span<const Quasiorder>{}), InputError);
    EXPECT_THROW(direct_product({chain(5), chain(5), chain(5)}), ResourceError);
}

TEST(ProductPredicate, TwoChainsTrue) {
    EXPECT_TRUE(product_halfspace_predicate({chain(2), chain(2)}, false).is_halfspace);
}

TEST(ProductPredicate, ChainTimesLongerChainFalse) {
    EXPECT_FALSE(product_halfspace_predicate({chain(2), chain(3)}, false).is_halfspace);
    EXPECT_FALSE(is_halfspace(direct_product({chain(2), chain(3)}).order).holds);
}

TEST(ProductPredicate, ThreeChainsFalse) {
    EXPECT_FALSE(product_halfspace_predicate({chain(2), chain(2), chain(2)}, false).is_halfspace);
    EXPECT_FALSE(is_halfspace(direct_product({chain(2), chain(2), chain(2)}).order).holds);
}

TEST(ProductPredicate, TrivialFactorNeedsFlag) {
    EXPECT_THROW(product_halfspace_predicate({chain(2), Quasiorder::identity(2)}, false), PreconditionError);
    auto v = product_halfspace_predicate({chain(2), Quasiorder::identity(2)}, true);
    EXPECT_EQ(v.is_halfspace, is_halfspace(direct_product({chain(2), Quasiorder::identity(2)}).order).holds);
}

TEST(ProductPredicate, FullFactorIsNotNeutral) {
    // M2 is a half-space but M2 x full(2) is not
    EXPECT_FALSE(product_halfspace_predicate({fixtures::m2(), Quasiorder::full(2)}, true).is_halfspace);
    EXPECT_FALSE(is_halfspace(direct_product({fixtures::m2(), Quasiorder::full(2)}).order).holds);
    EXPECT_TRUE(product_halfspace_predicate({chain(3), Quasiorder::full(2)}, true).is_halfspace);
    EXPECT_TRUE(is_halfspace(direct_product({chain(3), Quasiorder::full(2)}).order).holds);
}

TEST(ProductPredicate, AgreesWithDirectCheckOnSmallFactors) {
    std::vector<Quasiorder> pool;
    for (std::size_t n = 1; n <= 3; ++n) {
        for (const auto& q : enumerate_quasiorders(n)) {
            pool.push_back(q);
        }
    }
    std::size_t checked = 0;
    for (const auto& f : pool) {
        for (const auto& g : pool) {
            if (f.size() * g.size() > 9) {
                continue;
            }
            bool predicted = product_halfspace_predicate({f, g}, true).is_halfspace;
            bool actual = is_halfspace(direct_product({f, g}).order).holds;
            ASSERT_EQ(predicted, actual) << to_string(f.relation()) << " x " << to_string(g.relation());
            ++checked;
        }
    }
    EXPECT_GT(checked, 1000U);
}

TEST(LemmaWitnesses, SpreadingTripleRefutesProduct) {
    std::vector<Quasiorder> factors{fixtures::vee(), chain(2)};
    LemmaWitnesses w = lemma_witnesses(factors);
    ASSERT_TRUE(w.spreading);
    EXPECT_TRUE(triple_refutes(direct_product(factors), *w.spreading));
    EXPECT_EQ(w.shapes[0].kind, FactorShape::Kind::other);
}

TEST(LemmaWitnesses, TwoBoxShape) {
    Quasiorder g(Relation::from_pairs(3, {{0, 1}, {0, 2}}, true));
    FactorShape s = factor_shape(g);
    EXPECT_EQ(s.kind, FactorShape::Kind::two_boxes);
    EXPECT_EQ(s.lower, ElementSet::of({0}));
    EXPECT_EQ(s.upper, ElementSet::of({1, 2}));

    std::vector<Quasiorder> factors{g, chain(2)};
    LemmaWitnesses w = lemma_witnesses(factors);
    ASSERT_TRUE(w.two_boxes);
    // the triple is a spreading pattern of the product, not a violation
    Product p = direct_product(factors);
    Element ta = p.encoding.index(w.two_boxes->a);
    Element tb = p.encoding.index(w.two_boxes->b);
    Element tc = p.encoding.index(w.two_boxes->c);
    EXPECT_NE(ta, tc);
    EXPECT_TRUE(p.order.contains(ta, tc));
    EXPECT_FALSE(p.order.contains(ta, tb));
}

TEST(LemmaWitnesses, TrivialShapes) {
    EXPECT_EQ(factor_shape(Quasiorder::identity(3)).kind, FactorShape::Kind::identity);
    EXPECT_EQ(factor_shape(Quasiorder::full(3)).kind, FactorShape::Kind::full);
    LemmaWitnesses w = lemma_witnesses({Quasiorder::identity(2)});
    EXPECT_FALSE(w.spreading);
    EXPECT_FALSE(w.two_boxes);
}
