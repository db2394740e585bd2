#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "quord/halfspace.hpp"
#include "quord/relation.hpp"

namespace quord {

/// Linear extension of p built greedily: incomparable pairs are visited in
/// the order the seed lists them ((s0,s1), (s0,s2), ..., (s1,s2), ...),
/// each is oriented as the seed orients it, and the relation is closed
/// transitively before moving on. Deterministic in (p, seed).
inline LinearOrder szpilrajn_extension(const PartialOrder& p, const LinearOrder& seed) {
    p.relation().require_same_ground(seed.relation());
    std::size_t n = p.size();
    std::vector<std::uint64_t> rows(n);
    for (std::size_t x = 0; x < n; ++x) {
        rows[x] = p.relation().successors(x).bits();
    }
    auto related = [&](Element x, Element y) { return ((rows[x] >> y) & 1U) != 0; };
    auto seq = seed.sequence();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Element x = seq[i];
            Element y = seq[j];
            if (related(x, y) || related(y, x)) {
                continue;
            }
            // Everything at or below x now lies below everything at or above y.
            for (std::size_t u = 0; u < n; ++u) {
                if (related(u, x)) {
                    rows[u] |= rows[y];
                }
            }
        }
    }
    Relation out(n);
    for (std::size_t x = 0; x < n; ++x) {
        ElementSet(rows[x]).for_each([&](Element y) { out.insert(x, y); });
    }
    LinearOrder result(std::move(out));
    ensure(p.relation().subset_of(result.relation()), "szpilrajn extension lost a pair of the input");
    return result;
}

inline LinearOrder szpilrajn_extension(const PartialOrder& p) {
    return szpilrajn_extension(p, LinearOrder::natural(p.size()));
}

/// Shrinks the half-space a ⊇ g so that its symmetric part becomes exactly
/// g ∩ g⁻¹: symmetric pairs of a that R orders strictly downwards (as
/// classes of g) are removed. R is a linear extension of g's induced order.
inline HalfSpace tighten_halfspace(const Quasiorder& g, const HalfSpace& a, const LinearOrder& r) {
    g.relation().require_same_ground(a.relation());
    if (auto p = g.relation().first_pair_not_in(a.relation())) {
        throw PreconditionError("gamma is not contained in alpha: " + format_pair(*p) + " missing from alpha", p);
    }
    QuotientMap quotient = induced_order(g);
    if (r.size() != quotient.class_count()) {
        throw InputError("R has " + std::to_string(r.size()) + " elements, the quotient has " +
                         std::to_string(quotient.class_count()) + " classes");
    }
    if (auto p = quotient.induced().relation().first_pair_not_in(r.relation())) {
        throw PreconditionError("R is not a linear extension of the induced order: class pair " + format_pair(*p) +
                                    " missing",
                                p);
    }
    const Relation& alpha = a.relation();
    Relation tau = alpha;
    for (auto [x, y] : (alpha & alpha.inverse()).pairs()) {
        std::size_t cx = quotient.class_of(x);
        std::size_t cy = quotient.class_of(y);
        if (cx != cy && r.contains(cy, cx)) {
            tau.erase(x, y);
        }
    }
    HalfSpace result(std::move(tau));
    const Relation& t = result.relation();
    ensure(g.relation().subset_of(t) && t.subset_of(alpha), "tightened half-space is not between gamma and alpha");
    ensure((t & t.inverse()) == (g.relation() & g.relation().inverse()),
           "tightened half-space has the wrong symmetric part");
    return result;
}

inline void require_antisymmetric_halfspace(const HalfSpace& a) {
    if (auto p = find_antisymmetry_violation(a.relation())) {
        throw PreconditionError("half-space is not antisymmetric: " + format_pair(*p) + " and its inverse present",
                                p);
    }
}

/// a ∪ (λ ∖ (a ∪ a⁻¹)): pairs a leaves incomparable are oriented by λ.
/// a must be an antisymmetric half-space.
inline LinearOrder linearize_halfspace(const HalfSpace& a, const LinearOrder& lambda) {
    a.relation().require_same_ground(lambda.relation());
    require_antisymmetric_halfspace(a);
    const Relation& alpha = a.relation();
    LinearOrder result(alpha | (lambda.relation() - (alpha | alpha.inverse())));
    ensure(alpha.subset_of(result.relation()), "linearization does not extend the half-space");
    return result;
}

/// Both linearizations a[λ] and a[λ⁻¹]; their intersection is a.
inline std::pair<LinearOrder, LinearOrder> linearize_both(const HalfSpace& a, const LinearOrder& lambda) {
    LinearOrder up = linearize_halfspace(a, lambda);
    LinearOrder down = linearize_halfspace(a, inverse(lambda));
    ensure((up.relation() & down.relation()) == a.relation(), "a[λ] ∩ a[λ⁻¹] differs from a");
    return {std::move(up), std::move(down)};
}

struct TwoLinearRepresentation {
    QuotientMap quotient;
    LinearOrder first;
    LinearOrder second;
};

/// Writes the induced order of a half-space as the intersection of two
/// linear orders on its quotient, using `seed` (on the quotient) and its
/// inverse to orient incomparable classes.
inline TwoLinearRepresentation two_linear_representation(const HalfSpace& a, const LinearOrder& seed) {
    QuotientMap quotient = induced_order(a.quasiorder());
    if (seed.size() != quotient.class_count()) {
        throw InputError("seed order has " + std::to_string(seed.size()) + " elements, the quotient has " +
                         std::to_string(quotient.class_count()) + " classes");
    }
    HalfSpace induced(quotient.induced().relation());
    auto [first, second] = linearize_both(induced, seed);
    return TwoLinearRepresentation{std::move(quotient), std::move(first), std::move(second)};
}

inline TwoLinearRepresentation two_linear_representation(const HalfSpace& a) {
    return two_linear_representation(a, LinearOrder::natural(induced_order(a.quasiorder()).class_count()));
}

}  // namespace quord
