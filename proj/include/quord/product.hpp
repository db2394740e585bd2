#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quord/halfspace.hpp"
#include "quord/relation.hpp"

namespace quord {

/// Mixed-radix numbering of tuples, factor 0 most significant.
class ProductEncoding {
public:
    ProductEncoding() = default;

    explicit ProductEncoding(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)), strides_(sizes_.size()) {
        std::size_t total = 1;
        for (std::size_t i = sizes_.size(); i-- > 0;) {
            if (sizes_[i] == 0) {
                throw InputError("product factor " + std::to_string(i) + " has an empty ground set");
            }
            strides_[i] = total;
            if (total > max_elements / sizes_[i]) {
                throw ResourceError("product has more than " + std::to_string(max_elements) + " elements");
            }
            total *= sizes_[i];
        }
        total_ = total;
    }

    const std::vector<std::size_t>& factor_sizes() const noexcept { return sizes_; }
    const std::vector<std::size_t>& strides() const noexcept { return strides_; }
    std::size_t size() const noexcept { return total_; }

    std::size_t index(std::span<const Element> tuple) const {
        if (tuple.size() != sizes_.size()) {
            throw InputError("tuple length does not match the number of factors");
        }
        std::size_t out = 0;
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            if (tuple[i] >= sizes_[i]) {
                throw InputError("coordinate " + std::to_string(i) + " out of range");
            }
            out += tuple[i] * strides_[i];
        }
        return out;
    }

    std::vector<Element> tuple(std::size_t index) const {
        if (index >= total_) {
            throw InputError("product index " + std::to_string(index) + " out of range");
        }
        std::vector<Element> out(sizes_.size());
        for (std::size_t i = 0; i < sizes_.size(); ++i) {
            out[i] = index / strides_[i];
            index %= strides_[i];
        }
        return out;
    }

private:
    std::vector<std::size_t> sizes_;
    std::vector<std::size_t> strides_;
    std::size_t total_ = 1;
};

namespace detail {

inline Relation componentwise(std::span<const Relation> factors, const ProductEncoding& enc) {
    std::size_t n = enc.size();
    std::vector<std::vector<Element>> tuples(n);
    for (std::size_t i = 0; i < n; ++i) {
        tuples[i] = enc.tuple(i);
    }
    Relation out(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            bool all = true;
            for (std::size_t i = 0; i < factors.size() && all; ++i) {
                all = factors[i].contains(tuples[a][i], tuples[b][i]);
            }
            if (all) {
                out.insert(a, b);
            }
        }
    }
    return out;
}

}  // namespace detail

struct Product {
    Quasiorder order;
    ProductEncoding encoding;
};

/// Componentwise quasiorder on the product of the factors' ground sets.
inline Product direct_product(std::span<const Quasiorder> factors) {
    if (factors.empty()) {
        throw InputError("a product needs at least one factor");
    }
    std::vector<std::size_t> sizes;
    std::vector<Relation> rels;
    std::vector<Relation> sym;
    for (const auto& f : factors) {
        sizes.push_back(f.size());
        rels.push_back(f.relation());
        sym.push_back(f.relation() & f.relation().inverse());
    }
    ProductEncoding enc(sizes);
    Quasiorder order(detail::componentwise(rels, enc));
    const Relation& p = order.relation();
    ensure((p & p.inverse()) == detail::componentwise(sym, enc), "symmetric part of the product is not componentwise");

    // The quotient of the product is the product of the quotients.
    std::vector<QuotientMap> quotients;
    std::vector<Relation> induced;
    std::vector<std::size_t> class_counts;
    for (const auto& f : factors) {
        quotients.push_back(induced_order(f));
        induced.push_back(quotients.back().induced().relation());
        class_counts.push_back(quotients.back().class_count());
    }
    ProductEncoding class_enc(class_counts);
    Relation expected = detail::componentwise(induced, class_enc);
    QuotientMap q = induced_order(order);
    Relation mapped(class_enc.size());
    for (auto [a, b] : q.induced().relation().pairs()) {
        auto ta = enc.tuple(q.representative(a));
        auto tb = enc.tuple(q.representative(b));
        for (std::size_t i = 0; i < ta.size(); ++i) {
            ta[i] = quotients[i].class_of(ta[i]);
            tb[i] = quotients[i].class_of(tb[i]);
        }
        mapped.insert(class_enc.index(ta), class_enc.index(tb));
    }
    ensure(q.class_count() == class_enc.size() && mapped == expected,
           "induced order of the product is not the product of induced orders");
    return Product{std::move(order), std::move(enc)};
}

inline Product direct_product(std::initializer_list<Quasiorder> factors) {
    return direct_product(std::span<const Quasiorder>(factors.begin(), factors.size()));
}

// ---------------------------------------------------------------------------
// Half-space classification of products.

struct ProductVerdict {
    bool is_halfspace = false;
    std::string explanation;
};

namespace detail {

inline bool is_trivial(const Quasiorder& q) {
    return q.relation() == Relation::identity(q.size()) || q.relation() == Relation::full(q.size());
}

inline bool is_two_chain(const Quasiorder& q) {
    return q.size() == 2 && (q.relation() == Relation::from_pairs(2, {{0, 1}}, true) ||
                             q.relation() == Relation::from_pairs(2, {{1, 0}}, true));
}

}  // namespace detail

/// Decides whether the product of the factors is a half-space without
/// building it.
///
/// With treat_trivial unset every factor must be neither the identity nor
/// the full relation. Then one factor is a half-space exactly when it is
/// one, two factors only when both are two-element chains, and three or
/// more never.
///
/// With treat_trivial set, trivial factors are allowed:
///   - an empty factor makes the product empty, hence a half-space;
///   - one-element factors change nothing and are dropped;
///   - a full factor with two or more elements turns the product into a
///     pullback of the other factors, which is a half-space exactly when
///     those form a total quasiorder (no other factors, or one total factor);
///   - an identity factor with two or more elements next to other
///     nontrivial factors disconnects the product unless every factor is an
///     identity.
inline ProductVerdict product_halfspace_predicate(std::span<const Quasiorder> factors, bool treat_trivial) {
    if (factors.empty()) {
        throw InputError("a product needs at least one factor");
    }
    if (!treat_trivial) {
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (detail::is_trivial(factors[i])) {
                throw PreconditionError("factor " + std::to_string(i) +
                                        " is the identity or the full relation; allow trivial factors to classify it");
            }
        }
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].size() == 0) {
            return {true, "factor " + std::to_string(i) + " is empty, so the product is empty"};
        }
    }

    std::vector<const Quasiorder*> kept;
    std::size_t full_count = 0;
    std::size_t identity_count = 0;
    for (const auto& f : factors) {
        if (f.size() == 1) {
            continue;
        }
        if (f.relation() == Relation::full(f.size())) {
            ++full_count;
            continue;
        }
        if (f.relation() == Relation::identity(f.size())) {
            ++identity_count;
        }
        kept.push_back(&f);
    }

    if (full_count > 0) {
        if (kept.empty()) {
            return {true, "every factor is full, so the product is full"};
        }
        if (kept.size() == 1) {
            bool total = classify(kept[0]->relation()).total;
            return {total, total ? "full factors next to a single total factor give a total quasiorder"
                                 : "a full factor next to a non-total factor breaks the half-space property"};
        }
        return {false, "a full factor next to two or more non-full factors breaks the half-space property"};
    }
    if (identity_count > 0 && kept.size() >= 2) {
        bool all_identity = identity_count == kept.size();
        return {all_identity, all_identity ? "a product of identities is an identity"
                                           : "an identity factor disconnects the product"};
    }
    switch (kept.size()) {
        case 0:
            return {true, "every factor has one element"};
        case 1: {
            bool h = is_halfspace(*kept[0]).holds;
            return {h, h ? "a single nontrivial factor that is a half-space"
                         : "a single nontrivial factor that is not a half-space"};
        }
        case 2: {
            bool chains = detail::is_two_chain(*kept[0]) && detail::is_two_chain(*kept[1]);
            return {chains, chains ? "two two-element chains" : "two nontrivial factors, not both two-element chains"};
        }
        default:
            return {false, "three or more nontrivial factors"};
    }
}

inline ProductVerdict product_halfspace_predicate(std::initializer_list<Quasiorder> factors, bool treat_trivial) {
    return product_halfspace_predicate(std::span<const Quasiorder>(factors.begin(), factors.size()), treat_trivial);
}

// ---------------------------------------------------------------------------
// Diagnostics behind the classification.

/// A factor is either trivial or, when no (a, b, c) pattern exists, the
/// lower full box B1 (elements below everything) under the upper set B2
/// (elements related only to themselves).
struct FactorShape {
    enum class Kind { identity, full, two_boxes, other };
    Kind kind = Kind::other;
    ElementSet lower;  // B1
    ElementSet upper;  // B2
};

/// The pattern a != c, (a,c) in γ, (a,b) not in γ; least in lexicographic
/// order of (a, b, c).
inline std::optional<Triple> find_spreading_pattern(const Relation& g) {
    std::size_t n = g.size();
    for (std::size_t a = 0; a < n; ++a) {
        ElementSet others = g.successors(a).without(a);
        ElementSet missing = ElementSet::first(n) - g.successors(a);
        if (!others.empty() && !missing.empty()) {
            return Triple{a, missing.min(), others.min()};
        }
    }
    return std::nullopt;
}

inline FactorShape factor_shape(const Quasiorder& g) {
    std::size_t n = g.size();
    if (g.relation() == Relation::identity(n)) {
        return {FactorShape::Kind::identity, {}, {}};
    }
    if (g.relation() == Relation::full(n)) {
        return {FactorShape::Kind::full, {}, {}};
    }
    if (find_spreading_pattern(g.relation())) {
        return {FactorShape::Kind::other, {}, {}};
    }
    ElementSet lower;
    for (std::size_t a = 0; a < n; ++a) {
        if (g.relation().successors(a) == ElementSet::first(n)) {
            lower = lower.with(a);
        }
    }
    FactorShape s{FactorShape::Kind::two_boxes, lower, ElementSet::first(n) - lower};
    Relation rebuilt = Relation::identity(n);
    lower.for_each([&](Element a) {
        for (std::size_t b = 0; b < n; ++b) {
            rebuilt.insert(a, b);
        }
    });
    ensure(rebuilt == g.relation(), "pattern-free factor is not B1 below B2");
    return s;
}

struct ProductTriple {
    std::vector<Element> a;
    std::vector<Element> b;
    std::vector<Element> c;
};

struct LemmaWitnesses {
    /// A factor with the (a, b, c) pattern next to a non-full factor with
    /// two or more elements: a triple refuting the half-space property.
    std::optional<ProductTriple> spreading;
    std::vector<FactorShape> shapes;
    /// First two factors of shape B1 < B2: ā = (a12, a21), b̄ = (a11, a21),
    /// c̄ = (a12, a22), each a_ij the least element of B_ij. Then ā != c̄,
    /// (ā, c̄) is in the product and (ā, b̄) is not.
    std::optional<ProductTriple> two_boxes;
};

inline LemmaWitnesses lemma_witnesses(std::span<const Quasiorder> factors) {
    LemmaWitnesses out;
    for (const auto& f : factors) {
        out.shapes.push_back(factor_shape(f));
    }
    std::size_t m = factors.size();

    for (std::size_t j = 0; j < m && !out.spreading; ++j) {
        auto abc = find_spreading_pattern(factors[j].relation());
        if (!abc) {
            continue;
        }
        for (std::size_t k = 0; k < m; ++k) {
            const Relation& gk = factors[k].relation();
            if (k == j || gk.size() < 2 || gk == Relation::full(gk.size())) {
                continue;
            }
            auto [xk, yk] = (Relation::full(gk.size()) - gk).pairs().front();
            ProductTriple t{std::vector<Element>(m, 0), std::vector<Element>(m, 0), std::vector<Element>(m, 0)};
            t.a[j] = abc->x;
            t.b[j] = abc->y;
            t.c[j] = abc->z;
            t.a[k] = yk;
            t.b[k] = xk;
            t.c[k] = yk;
            out.spreading = t;
            break;
        }
    }

    std::vector<std::size_t> boxed;
    for (std::size_t i = 0; i < m; ++i) {
        if (out.shapes[i].kind == FactorShape::Kind::two_boxes) {
            boxed.push_back(i);
        }
    }
    if (boxed.size() >= 2) {
        std::size_t p = boxed[0];
        std::size_t q = boxed[1];
        ProductTriple t{std::vector<Element>(m, 0), std::vector<Element>(m, 0), std::vector<Element>(m, 0)};
        t.a[p] = out.shapes[p].upper.min();
        t.a[q] = out.shapes[q].lower.min();
        t.b[p] = out.shapes[p].lower.min();
        t.b[q] = out.shapes[q].lower.min();
        t.c[p] = out.shapes[p].upper.min();
        t.c[q] = out.shapes[q].upper.min();
        out.two_boxes = t;
    }
    return out;
}

inline LemmaWitnesses lemma_witnesses(std::initializer_list<Quasiorder> factors) {
    return lemma_witnesses(std::span<const Quasiorder>(factors.begin(), factors.size()));
}

}  // namespace quord
