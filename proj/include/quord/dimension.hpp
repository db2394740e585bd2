#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quord/detail/search.hpp"
#include "quord/extension.hpp"
#include "quord/halfspace.hpp"
#include "quord/relation.hpp"

namespace quord {

/// Size caps for the exhaustive searches. The defaults keep every search at
/// desk scale; the CLI lets QUORD_MAX_N override both.
struct SearchLimits {
    std::size_t halfspace_max_n = 7;
    std::size_t order_max_n = 8;
};

inline void require_within(std::size_t n, std::size_t cap, const char* what) {
    if (n > cap) {
        throw ResourceError(std::string(what) + ": " + std::to_string(n) + " elements exceed the cap of " +
                            std::to_string(cap));
    }
}

// ---------------------------------------------------------------------------
// Half-space enumeration from box sequences.

/// Calls `visit` once per box decomposition on n elements: every ordered
/// set partition (boxes smallest first) with a full/empty flag on each box
/// of two or more elements.
inline void for_each_box_decomposition(std::size_t n, const std::function<void(const BoxDecomposition&)>& visit,
                                       const SearchLimits& limits = {}) {
    require_within(n, limits.halfspace_max_n, "half-space enumeration");
    std::vector<Box> boxes;
    std::function<void(ElementSet)> place = [&](ElementSet remaining) {
        if (remaining.empty()) {
            visit(BoxDecomposition(n, boxes));
            return;
        }
        // Nonempty submasks of `remaining`, ascending.
        std::uint64_t rest = remaining.bits();
        for (std::uint64_t sub = rest & (~rest + 1); sub != 0; sub = (sub - rest) & rest) {
            ElementSet box(sub);
            boxes.push_back(Box{box, BoxKind::empty});
            place(remaining - box);
            if (box.size() > 1) {
                boxes.back().kind = BoxKind::full;
                place(remaining - box);
            }
            boxes.pop_back();
        }
    };
    place(ElementSet::first(n));
}

/// Calls `visit` once per half-space on n elements.
inline void for_each_halfspace(std::size_t n, const std::function<void(const HalfSpace&)>& visit,
                               const SearchLimits& limits = {}) {
    for_each_box_decomposition(
        n, [&](const BoxDecomposition& d) { visit(reconstruct_from_boxes(d)); }, limits);
}

/// Every half-space on n elements, sorted in bit-matrix order.
inline std::vector<HalfSpace> enumerate_halfspaces(std::size_t n, const SearchLimits& limits = {}) {
    std::vector<HalfSpace> out;
    for_each_halfspace(n, [&](const HalfSpace& h) { out.push_back(h); }, limits);
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

/// Shared, lazily built catalog of half-spaces per ground-set size.
inline const std::vector<HalfSpace>& halfspace_catalog(std::size_t n, const SearchLimits& limits) {
    require_within(n, limits.halfspace_max_n, "half-space enumeration");
    static std::mutex guard;
    static std::map<std::size_t, std::vector<HalfSpace>> cache;
    std::lock_guard lock(guard);
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, enumerate_halfspaces(n, limits)).first;
    }
    return it->second;
}

}  // namespace detail

/// The half-spaces containing g, in bit-matrix order.
inline std::vector<HalfSpace> enumerate_halfspaces_above(const Quasiorder& g, const SearchLimits& limits = {}) {
    std::vector<HalfSpace> out;
    for (const auto& h : detail::halfspace_catalog(g.size(), limits)) {
        if (g.relation().subset_of(h.relation())) {
            out.push_back(h);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Realizers.

/// A nonempty family of half-spaces whose intersection is the target.
class Realizer {
public:
    Realizer(Quasiorder target, std::vector<HalfSpace> parts) : target_(std::move(target)), parts_(std::move(parts)) {
        if (parts_.empty()) {
            throw ValidationError("realizer", {0, 0}, "a realizer needs at least one half-space");
        }
        Relation meet = Relation::full(target_.size());
        for (const auto& part : parts_) {
            part.relation().require_same_ground(target_.relation());
            if (auto p = target_.relation().first_pair_not_in(part.relation())) {
                throw ValidationError("realizer", *p, "a part misses target pair " + format_pair(*p));
            }
            meet = meet & part.relation();
        }
        if (auto p = meet.first_pair_not_in(target_.relation())) {
            throw ValidationError("realizer", *p, "intersection keeps non-target pair " + format_pair(*p));
        }
    }

    const Quasiorder& target() const noexcept { return target_; }
    const std::vector<HalfSpace>& parts() const noexcept { return parts_; }
    std::size_t size() const noexcept { return parts_.size(); }

private:
    Quasiorder target_;
    std::vector<HalfSpace> parts_;
};

struct HalfSpaceDimension {
    std::size_t value = 0;
    Realizer witness;
};

/// Least number of half-spaces intersecting to g. Among witnesses of that
/// size the lexicographically least index set over
/// enumerate_halfspaces_above(g) is returned.
inline HalfSpaceDimension hs_dimension(const Quasiorder& g, const SearchLimits& limits = {}) {
    require_within(g.size(), limits.halfspace_max_n, "half-space dimension");
    auto candidates = enumerate_halfspaces_above(g, limits);
    std::vector<Relation> rels;
    rels.reserve(candidates.size());
    for (const auto& h : candidates) {
        rels.push_back(h.relation());
    }
    auto pick = detail::least_minimal_realizer(rels, g.relation());
    ensure(pick.has_value(), "half-spaces above a quasiorder do not intersect to it");
    std::vector<HalfSpace> parts;
    for (std::size_t i : *pick) {
        parts.push_back(candidates[i]);
    }
    return HalfSpaceDimension{pick->size(), Realizer(g, std::move(parts))};
}

/// All linear extensions of p, in bit-matrix order.
inline std::vector<LinearOrder> linear_extensions(const PartialOrder& p) {
    std::size_t n = p.size();
    std::vector<LinearOrder> out;
    std::vector<Element> seq;
    std::vector<ElementSet> strictly_below(n);
    for (std::size_t x = 0; x < n; ++x) {
        strictly_below[x] = p.relation().predecessors(x).without(x);
    }
    std::function<void(ElementSet)> grow = [&](ElementSet placed) {
        if (seq.size() == n) {
            out.push_back(LinearOrder::from_sequence(seq));
            return;
        }
        for (std::size_t x = 0; x < n; ++x) {
            if (!placed.contains(x) && strictly_below[x].subset_of(placed)) {
                seq.push_back(x);
                grow(placed.with(x));
                seq.pop_back();
            }
        }
    };
    grow(ElementSet{});
    std::sort(out.begin(), out.end());
    return out;
}

struct OrderDimension {
    std::size_t value = 0;
    std::vector<LinearOrder> witness;
};

/// Dushnik-Miller dimension: least number of linear extensions whose
/// intersection is p. The witness is the least one over linear_extensions(p).
inline OrderDimension order_dimension(const PartialOrder& p, const SearchLimits& limits = {}) {
    require_within(p.size(), limits.order_max_n, "order dimension");
    auto candidates = linear_extensions(p);
    std::vector<Relation> rels;
    rels.reserve(candidates.size());
    for (const auto& l : candidates) {
        rels.push_back(l.relation());
    }
    auto pick = detail::least_minimal_realizer(rels, p.relation());
    ensure(pick.has_value(), "linear extensions do not intersect to the partial order");
    OrderDimension out{pick->size(), {}};
    for (std::size_t i : *pick) {
        out.witness.push_back(candidates[i]);
    }
    return out;
}

struct DimensionReport {
    HalfSpaceDimension hs;
    QuotientMap quotient;
    /// Dimension of the induced order on the quotient, witness on classes.
    OrderDimension quotient_order;
    /// Present when the input is itself a partial order; witness on elements.
    std::optional<OrderDimension> order;
};

inline DimensionReport dimension_report(const Quasiorder& g, const SearchLimits& limits = {}) {
    auto hs = hs_dimension(g, limits);
    auto quotient = induced_order(g);
    auto qdim = order_dimension(quotient.induced(), limits);
    std::optional<OrderDimension> dim;
    if (classify(g.relation()).antisymmetric) {
        dim = order_dimension(PartialOrder(g), limits);
        ensure(dim->value == qdim.value, "poset and quotient dimensions differ");
    }
    return DimensionReport{std::move(hs), std::move(quotient), std::move(qdim), std::move(dim)};
}

// ---------------------------------------------------------------------------
// From a half-space realizer to a linear realizer of the induced order.

struct TransformSeeds {
    /// Linear extension of the induced order used to tighten every part.
    /// Default: szpilrajn_extension of the induced order, natural seed.
    std::optional<LinearOrder> tighten_order;
    /// Seeds for the two Szpilrajn extensions λ and λ*. Default: natural.
    std::optional<LinearOrder> lambda_seed;
    std::optional<LinearOrder> lambda_star_seed;
};

struct RealizerTransform {
    QuotientMap quotient;
    std::vector<HalfSpace> tightened;    // τ_i on the ground set
    std::vector<HalfSpace> projected;    // π_i, induced orders of τ_i on the quotient
    std::vector<HalfSpace> complements;  // σ_i
    PartialOrder rho{Relation(0)};
    Equivalence theta{Relation(0)};
    std::optional<LinearOrder> lambda;
    std::optional<LinearOrder> lambda_star;
    std::optional<Relation> reversal_set;  // Λ, alternative construction only
    std::vector<LinearOrder> orders;       // R_i, linear extensions of the induced order
};

namespace detail {

template <typename T>
T certify(Relation r, const char* what) {
    try {
        return T(std::move(r));
    } catch (const ValidationError& e) {
        throw InvariantViolation(std::string(what) + ": " + e.what());
    }
}

inline void check_transform_arguments(const Realizer& r, const QuotientMap& quotient, const LinearOrder& mu,
                                      std::size_t i_star) {
    if (r.size() < 2) {
        throw PreconditionError("the transformation needs a realizer with at least two half-spaces");
    }
    if (i_star >= r.size()) {
        throw InputError("distinguished index " + std::to_string(i_star) + " out of range for " +
                         std::to_string(r.size()) + " parts");
    }
    if (mu.size() != quotient.class_count()) {
        throw InputError("mu has " + std::to_string(mu.size()) + " elements, the quotient has " +
                         std::to_string(quotient.class_count()) + " classes");
    }
}

/// Tightens each part, projects to the quotient, and builds ρ, σ_i and Θ,
/// checking the relations between them along the way.
inline RealizerTransform prepare_transform(const Realizer& r, const LinearOrder& tighten_order) {
    const Quasiorder& gamma = r.target();
    RealizerTransform t;
    t.quotient = induced_order(gamma);
    std::size_t k = t.quotient.class_count();
    const Relation& induced = t.quotient.induced().relation();

    Relation pi_meet = Relation::full(k);
    Relation pi_union(k);
    for (const auto& alpha : r.parts()) {
        HalfSpace tau = tighten_halfspace(gamma, alpha, tighten_order);
        QuotientMap tq = induced_order(tau.quasiorder());
        ensure(tq.classes() == t.quotient.classes(), "tightened part has a different quotient");
        HalfSpace pi = certify<HalfSpace>(tq.induced().relation(), "projected part is not a half-space");
        pi_meet = pi_meet & pi.relation();
        pi_union = pi_union | pi.relation();
        t.complements.push_back(complement_halfspace(pi));
        t.tightened.push_back(std::move(tau));
        t.projected.push_back(std::move(pi));
    }
    ensure(pi_meet == induced, "projected parts do not intersect to the induced order");

    Relation delta = Relation::identity(k);
    t.rho = certify<PartialOrder>(delta | (pi_union.inverse() - pi_union), "rho is not a partial order");

    Relation theta = Relation::full(k);
    for (const auto& sigma : t.complements) {
        theta = theta & sigma.relation() & sigma.relation().inverse();
    }
    t.theta = certify<Equivalence>(std::move(theta), "theta is not an equivalence");

    const Relation& rho = t.rho.relation();
    const Relation& th = t.theta.relation();
    ensure((rho & th) == delta, "rho and theta share a non-diagonal pair");
    // Read for distinct elements: with the diagonal of ρ included, Θ∘ρ
    // would contain Θ itself.
    Relation strict = rho - delta;
    ensure(compose(th, strict).subset_of(rho), "theta followed by rho escapes rho");
    ensure(compose(strict, th).subset_of(rho), "rho followed by theta escapes rho");
    return t;
}

inline void verify_linear_realizer(const RealizerTransform& t) {
    const Relation& induced = t.quotient.induced().relation();
    Relation meet = Relation::full(induced.size());
    for (const auto& order : t.orders) {
        ensure(induced.subset_of(order.relation()), "constructed order does not extend the induced order");
        meet = meet & order.relation();
    }
    ensure(meet == induced, "constructed orders do not intersect to the induced order");
}

}  // namespace detail

/// Builds linear extensions R_i of the induced order, one per part, with
/// ⋂ R_i equal to the induced order. Needs at least two parts; `mu` is a
/// linear order on the quotient classes and `i_star` picks the part that
/// is linearized against λ* instead of λ.
inline RealizerTransform realizer_to_linear_extensions(const Realizer& r, const LinearOrder& mu, std::size_t i_star,
                                                       const TransformSeeds& seeds = {}) {
    QuotientMap quotient = induced_order(r.target());
    detail::check_transform_arguments(r, quotient, mu, i_star);
    std::size_t k = quotient.class_count();
    LinearOrder tighten_order = seeds.tighten_order ? *seeds.tighten_order : szpilrajn_extension(quotient.induced());
    RealizerTransform t = detail::prepare_transform(r, tighten_order);

    const Relation& rho = t.rho.relation();
    const Relation& theta = t.theta.relation();
    auto base = detail::certify<PartialOrder>(rho | (mu.relation() & theta), "rho ∪ (mu ∩ theta) is not a partial order");
    auto base_star = detail::certify<PartialOrder>(rho | (mu.relation().inverse() & theta),
                                                   "rho ∪ (mu⁻¹ ∩ theta) is not a partial order");
    t.lambda = szpilrajn_extension(base, seeds.lambda_seed ? *seeds.lambda_seed : LinearOrder::natural(k));
    t.lambda_star =
        szpilrajn_extension(base_star, seeds.lambda_star_seed ? *seeds.lambda_star_seed : LinearOrder::natural(k));

    for (std::size_t i = 0; i < t.projected.size(); ++i) {
        t.orders.push_back(linearize_halfspace(t.projected[i], i == i_star ? *t.lambda_star : *t.lambda));
    }
    detail::verify_linear_realizer(t);
    return t;
}

/// Same contract, with the orders assembled directly from π_i, σ_i, Θ and
/// μ through the reversal set Λ instead of Szpilrajn extensions. Parts are
/// ranked by their position in the realizer.
inline RealizerTransform realizer_to_linear_extensions_alt(const Realizer& r, const LinearOrder& mu,
                                                           std::size_t i_star,
                                                           std::optional<LinearOrder> tighten_order = std::nullopt) {
    QuotientMap quotient = induced_order(r.target());
    detail::check_transform_arguments(r, quotient, mu, i_star);
    std::size_t k = quotient.class_count();
    RealizerTransform t =
        detail::prepare_transform(r, tighten_order ? *tighten_order : szpilrajn_extension(quotient.induced()));

    // Λ = {(x,y) | (y,x) ∈ π_j and (x,y) ∈ σ_i ∩ σ_i⁻¹ for every i < j, some j}
    Relation reversal(k);
    Relation earlier = Relation::full(k);
    for (std::size_t j = 0; j < t.projected.size(); ++j) {
        reversal = reversal | (t.projected[j].relation().inverse() & earlier);
        const Relation& sigma = t.complements[j].relation();
        earlier = earlier & sigma & sigma.inverse();
    }
    t.reversal_set = reversal;

    const Relation& theta = t.theta.relation();
    for (std::size_t i = 0; i < t.projected.size(); ++i) {
        const Relation& sigma = t.complements[i].relation();
        Relation orient = i == i_star ? mu.relation().inverse() : mu.relation();
        t.orders.push_back(detail::certify<LinearOrder>(
            t.projected[i].relation() | (sigma & sigma.inverse() & reversal) | (theta & orient),
            "alternative construction did not produce a linear order"));
    }
    detail::verify_linear_realizer(t);
    return t;
}

/// Appends A×A to a one-part realizer so the transformations apply; the
/// intersection is unchanged. Returns whether padding happened.
inline std::pair<Realizer, bool> pad_realizer(const Realizer& r) {
    if (r.size() >= 2) {
        return {r, false};
    }
    auto parts = r.parts();
    parts.push_back(HalfSpace(Relation::full(r.target().size())));
    return {Realizer(r.target(), std::move(parts)), true};
}

// ---------------------------------------------------------------------------
// Relationship between half-space dimension and order dimension.

struct DimensionRelationCheck {
    std::size_t hs_dim = 0;
    std::size_t quotient_dim = 0;
    std::optional<std::size_t> order_dim;  // when the input is a partial order
    bool is_halfspace = false;
    bool has_large_empty_box = false;      // meaningful when is_halfspace
    bool is_linear = false;
    bool holds = false;
    std::string explanation;
};

/// hs_dim = 1: the quasiorder is a half-space and the quotient has dimension
/// 1 or 2 depending on whether an empty box with two or more elements
/// exists. hs_dim >= 2: the quotient dimension equals hs_dim. For partial
/// orders the same split is phrased through linearity. hs_dim never
/// exceeds the quotient dimension.
inline DimensionRelationCheck dimension_relation_check(const Quasiorder& g, const SearchLimits& limits = {}) {
    DimensionReport report = dimension_report(g, limits);
    DimensionRelationCheck c;
    c.hs_dim = report.hs.value;
    c.quotient_dim = report.quotient_order.value;
    if (report.order) {
        c.order_dim = report.order->value;
    }
    c.is_halfspace = is_halfspace(g).holds;
    c.is_linear = classify(g.relation()).antisymmetric && classify(g.relation()).total;
    if (c.is_halfspace) {
        BoxDecomposition d = box_decomposition(HalfSpace(g));
        const auto& boxes = d.boxes();
        c.has_large_empty_box = std::any_of(boxes.begin(), boxes.end(), [](const Box& b) {
            return b.kind == BoxKind::empty && b.members.size() > 1;
        });
    }

    bool ok = c.hs_dim <= c.quotient_dim;
    std::string why = "hs_dim=" + std::to_string(c.hs_dim) + " quotient_dim=" + std::to_string(c.quotient_dim);
    if (c.hs_dim == 1) {
        std::size_t expected = c.has_large_empty_box ? 2 : 1;
        ok = ok && c.is_halfspace && c.quotient_dim == expected;
        why += c.has_large_empty_box ? "; half-space with an empty box of size > 1, expect quotient_dim=2"
                                     : "; half-space without empty boxes of size > 1, expect quotient_dim=1";
        if (c.order_dim) {
            std::size_t expected_dim = c.is_linear ? 1 : 2;
            ok = ok && *c.order_dim == expected_dim;
            why += c.is_linear ? "; linear order, expect dim=1" : "; non-linear partial order, expect dim=2";
        }
    } else {
        ok = ok && c.quotient_dim == c.hs_dim;
        why += "; expect quotient_dim=hs_dim";
        if (c.order_dim) {
            ok = ok && *c.order_dim == c.hs_dim;
            why += "; expect dim=hs_dim";
        }
    }
    c.holds = ok;
    c.explanation = why;
    return c;
}

}  // namespace quord
