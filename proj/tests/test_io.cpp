#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace quord;

namespace {

const char* m2_text = R"(# Boolean lattice
elements: bot a b top
bot a
bot b
a top
b top
bot top
)";

}  // namespace

TEST(ParseText, NamedElements) {
    LabeledRelation r = parse_relation(m2_text);
    EXPECT_EQ(r.labels, (std::vector<std::string>{"bot", "a", "b", "top"}));
    EXPECT_EQ(r.relation, fixtures::m2_relation());
}

TEST(ParseText, NumericHeader) {
    LabeledRelation r = parse_relation("n: 3\n0 1  # comment\n");
    EXPECT_EQ(r.labels, numeric_labels(3));
    EXPECT_EQ(r.relation, Relation::from_pairs(3, {{0, 1}}, true));
}

TEST(ParseText, Strict) {
    LabeledRelation r = parse_relation("n: 2\nstrict: true\n0 1\n");
    EXPECT_EQ(r.relation, Relation::from_pairs(2, {{0, 1}}, false));
}

TEST(ParseText, Errors) {
    EXPECT_THROW(parse_relation(""), InputError);
    EXPECT_THROW(parse_relation("0 1\n"), InputError);
    EXPECT_THROW(parse_relation("elements: a a\n"), InputError);
    EXPECT_THROW(parse_relation("n: x\n"), InputError);
    EXPECT_THROW(parse_relation("n: 2\n0 1 2\n"), InputError);
    EXPECT_THROW(parse_relation("n: 2\n0 1\nstrict: true\n"), InputError);
    EXPECT_THROW(parse_relation("n: 100\n"), ResourceError);
    try {
        parse_relation("elements: a b\na c\n", "f.rel");
        FAIL() << "expected an input error";
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("f.rel:2"), std::string::npos) << e.what();
    }
}

TEST(ParseJson, ObjectForm) {
    LabeledRelation r =
        parse_relation(R"({"elements": ["p", "q", "r"], "pairs": [["p", "q"], ["q", "p"], ["p", "r"], ["q", "r"]]})");
    EXPECT_EQ(r.labels, (std::vector<std::string>{"p", "q", "r"}));
    EXPECT_EQ(r.relation, Relation::from_pairs(3, {{0, 1}, {1, 0}, {0, 2}, {1, 2}}, true));
}

TEST(ParseJson, NotReflexive) {
    LabeledRelation r = parse_relation(R"({"elements": 2, "pairs": [[0, 1]], "reflexive_implicit": false})");
    EXPECT_EQ(r.relation, Relation::from_pairs(2, {{0, 1}}, false));
}

TEST(ParseJson, Errors) {
    EXPECT_THROW(parse_relation("{"), InputError);
    EXPECT_THROW(parse_relation(R"({"pairs": []})"), InputError);
    EXPECT_THROW(parse_relation(R"({"elements": 2, "pairs": [[0]]})"), InputError);
    EXPECT_THROW(parse_relation(R"({"elements": 2, "pairs": [[0, 5]]})"), InputError);
}

TEST(Format, RoundTrip) {
    for (const char* text : {m2_text, "n: 2\nstrict: true\n0 1\n", "elements: x\n"}) {
        LabeledRelation r = parse_relation(text);
        std::string out = format_relation(r);
        LabeledRelation again = parse_relation(out);
        EXPECT_EQ(again.labels, r.labels);
        EXPECT_EQ(again.relation, r.relation);
        EXPECT_EQ(format_relation(again), out);
    }
}

TEST(Format, CanonicalText) {
    LabeledRelation r = parse_relation("elements: a b\nb a\n");
    EXPECT_EQ(format_relation(r), "elements: a b\nb a\n");
}

TEST(Permutation, ParsesNames) {
    std::vector<std::string> labels{"bot", "a", "b", "top"};
    EXPECT_EQ(parse_permutation("top, b,a,bot", labels).sequence(), (std::vector<Element>{3, 2, 1, 0}));
    EXPECT_THROW(parse_permutation("a,b", labels), InputError);
    EXPECT_THROW(parse_permutation("a,a,b,top", labels), InputError);
    EXPECT_THROW(parse_permutation("a,b,c,top", labels), InputError);
}

TEST(Permutation, ClassesByFirstMember) {
    Quasiorder q(Relation::from_pairs(3, {{0, 1}, {1, 0}, {0, 2}, {1, 2}}, true));
    QuotientMap m = induced_order(q);
    std::vector<std::string> labels{"p", "q", "r"};
    EXPECT_EQ(parse_class_permutation("r,q,p", labels, m).sequence(), (std::vector<Element>{1, 0}));
    EXPECT_THROW(parse_class_permutation("p,q", labels, m), InputError);
}

TEST(Format, Reports) {
    std::vector<std::string> labels{"bot", "a", "b", "top"};
    BoxDecomposition d = box_decomposition(HalfSpace(fixtures::m2()));
    EXPECT_EQ(format_boxes(d, labels), "[{bot} < {a,b}∅ < {top}]");
    EXPECT_EQ(format_boxes(box_decomposition(HalfSpace(Relation::full(2))), {"x", "y"}), "[{x,y}■]");
    EXPECT_EQ(format_chain(LinearOrder::from_sequence({0, 2, 1, 3}), labels), "bot < b < a < top");
    EXPECT_EQ(format_named_pair({1, 3}, labels), "(a,top) ids (1,3)");
    EXPECT_EQ(format_set(ElementSet::of({0, 3}), labels), "{bot,top}");
}
