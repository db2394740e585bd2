#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quord/relation.hpp"

namespace quord {

struct Triple {
    Element x = 0;
    Element y = 0;
    Element z = 0;

    friend bool operator==(const Triple&, const Triple&) = default;
};

/// True when (x,y) and (y,x) are both absent, (x,z) is present with z != x,
/// and (y,z) is absent: the pattern a half-space never contains.
inline bool violates_exchange(const Relation& a, Element x, Element y, Element z) {
    return !a.contains(x, y) && !a.contains(y, x) && a.contains(x, z) && z != x && !a.contains(y, z);
}

/// First (x, y, z) in lexicographic order with violates_exchange(a, x, y, z).
inline std::optional<Triple> find_halfspace_violation(const Relation& a) {
    std::size_t n = a.size();
    Relation inv = a.inverse();
    for (std::size_t x = 0; x < n; ++x) {
        ElementSet incomparable = ElementSet::first(n) - (a.successors(x) | inv.successors(x));
        if (incomparable.empty()) {
            continue;
        }
        for (std::size_t y = 0; y < n; ++y) {
            if (!incomparable.contains(y)) {
                continue;
            }
            ElementSet bad = a.successors(x).without(x) - a.successors(y);
            if (!bad.empty()) {
                return Triple{x, y, bad.min()};
            }
        }
    }
    return std::nullopt;
}

struct HalfSpaceCheck {
    bool holds = false;
    std::optional<Triple> witness;
};

inline HalfSpaceCheck is_halfspace(const Quasiorder& q) {
    auto w = find_halfspace_violation(q.relation());
    return HalfSpaceCheck{!w.has_value(), w};
}

/// A quasiorder whose complement with the diagonal added back is again a
/// quasiorder.
class HalfSpace {
public:
    HalfSpace() = default;
    explicit HalfSpace(Relation r) : HalfSpace(Quasiorder(std::move(r))) {}
    explicit HalfSpace(Quasiorder q) : q_(std::move(q)) {
        if (auto w = find_halfspace_violation(q_.relation())) {
            throw ValidationError("halfspace", {w->y, w->z},
                                  "elements " + std::to_string(w->x) + "," + std::to_string(w->y) +
                                      " incomparable, " + format_pair({w->x, w->z}) + " present, " +
                                      format_pair({w->y, w->z}) + " missing");
        }
    }

    const Quasiorder& quasiorder() const noexcept { return q_; }
    operator const Quasiorder&() const noexcept { return q_; }  // NOLINT(google-explicit-constructor)
    const Relation& relation() const noexcept { return q_.relation(); }
    std::size_t size() const noexcept { return q_.size(); }
    bool contains(Element x, Element y) const noexcept { return q_.contains(x, y); }

    friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
    friend auto operator<=>(const HalfSpace&, const HalfSpace&) = default;

private:
    Quasiorder q_;
};

inline HalfSpace inverse(const HalfSpace& h) { return HalfSpace(h.relation().inverse()); }

inline HalfSpace restrict(const HalfSpace& h, ElementSet subset) { return HalfSpace(restrict(h.relation(), subset)); }

/// Δ ∪ ((A×A) ∖ h).
inline HalfSpace complement_halfspace(const HalfSpace& h) {
    std::size_t n = h.size();
    HalfSpace beta(Relation::identity(n) | h.relation().complement());
    ensure((h.relation() & beta.relation()) == Relation::identity(n), "complement: meet is not the diagonal");
    ensure((h.relation() | beta.relation()) == Relation::full(n), "complement: join is not A x A");
    return beta;
}

inline bool check_complementary_pair(const Quasiorder& a, const Quasiorder& b) {
    a.relation().require_same_ground(b.relation());
    std::size_t n = a.size();
    return (a.relation() & b.relation()) == Relation::identity(n) &&
           (a.relation() | b.relation()) == Relation::full(n);
}

// ---------------------------------------------------------------------------
// Box decomposition: a half-space is a linearly ordered sequence of boxes,
// each either full (all pairs inside) or empty (only the diagonal inside).

enum class BoxKind { empty, full };

struct Box {
    ElementSet members;
    BoxKind kind = BoxKind::empty;

    friend bool operator==(const Box&, const Box&) = default;
};

class BoxDecomposition {
public:
    BoxDecomposition() = default;

    /// Boxes listed smallest first. They must partition 0..n-1 and no
    /// single-element box may be full.
    BoxDecomposition(std::size_t n, std::vector<Box> boxes) : n_(n), boxes_(std::move(boxes)) {
        if (n > max_elements) {
            throw ResourceError("box decomposition exceeds the element limit");
        }
        ElementSet seen;
        for (const auto& box : boxes_) {
            if (box.members.empty()) {
                throw ValidationError("box-partition", {0, 0}, "empty box");
            }
            if (!box.members.subset_of(ElementSet::first(n))) {
                throw ValidationError("box-partition", {box.members.min(), box.members.min()},
                                      "box member out of range");
            }
            if (!(seen & box.members).empty()) {
                Element e = (seen & box.members).min();
                throw ValidationError("box-partition", {e, e},
                                      "element " + std::to_string(e) + " in two boxes");
            }
            if (box.kind == BoxKind::full && box.members.size() == 1) {
                Element e = box.members.min();
                throw ValidationError("singleton-empty", {e, e},
                                      "single-element box {" + std::to_string(e) + "} flagged full");
            }
            seen = seen | box.members;
        }
        if (seen != ElementSet::first(n)) {
            Element e = (ElementSet::first(n) - seen).min();
            throw ValidationError("box-partition", {e, e}, "element " + std::to_string(e) + " in no box");
        }
    }

    std::size_t ground_size() const noexcept { return n_; }
    const std::vector<Box>& boxes() const noexcept { return boxes_; }

    friend bool operator==(const BoxDecomposition&, const BoxDecomposition&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Box> boxes_;
};

inline HalfSpace reconstruct_from_boxes(const BoxDecomposition& d) {
    std::size_t n = d.ground_size();
    Relation r = Relation::identity(n);
    ElementSet below;
    for (const auto& box : d.boxes()) {
        box.members.for_each([&](Element b) {
            below.for_each([&](Element a) { r.insert(a, b); });
            if (box.kind == BoxKind::full) {
                box.members.for_each([&](Element a) { r.insert(a, b); });
            }
        });
        below = below | box.members;
    }
    return HalfSpace(std::move(r));
}

/// Boxes are the classes of (α∩α⁻¹) ∪ (β∩β⁻¹) with β the complement,
/// ordered by α.
inline BoxDecomposition box_decomposition(const HalfSpace& h) {
    const Relation& alpha = h.relation();
    Relation beta = complement_halfspace(h).relation();
    Relation alpha_sym = alpha & alpha.inverse();
    Equivalence eps((alpha_sym) | (beta & beta.inverse()));
    auto classes = eps.classes();

    // Classes are linearly ordered by α, so a class's rank is the number of
    // classes strictly below it.
    std::vector<std::pair<std::size_t, Box>> ranked;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        std::size_t below = 0;
        for (std::size_t j = 0; j < classes.size(); ++j) {
            if (i != j && alpha.contains(classes[j].min(), classes[i].min())) {
                ++below;
            }
        }
        Element rep = classes[i].min();
        bool full = classes[i].size() > 1 && alpha_sym.successors(rep) == classes[i];
        ranked.emplace_back(below, Box{classes[i], full ? BoxKind::full : BoxKind::empty});
    }
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Box> boxes;
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        ensure(ranked[i].first == i, "box decomposition: boxes not linearly ordered");
        boxes.push_back(ranked[i].second);
    }
    BoxDecomposition d(h.size(), std::move(boxes));
    ensure(reconstruct_from_boxes(d) == h, "box decomposition does not reconstruct the half-space");
    return d;
}

/// B is a box iff h restricted to B is symmetric and no proper superset of
/// B keeps that property.
inline bool is_box(const HalfSpace& h, ElementSet subset) {
    if (subset.empty()) {
        throw InputError("box candidate must be nonempty");
    }
    std::size_t n = h.size();
    if (!subset.subset_of(ElementSet::first(n))) {
        throw InputError("box candidate has elements outside the ground set");
    }
    const Relation& a = h.relation();
    auto symmetric_on = [&](ElementSet s) {
        bool ok = true;
        s.for_each([&](Element b1) {
            s.for_each([&](Element b2) { ok = ok && (a.contains(b1, b2) == a.contains(b2, b1)); });
        });
        return ok;
    };
    bool verdict = symmetric_on(subset);
    if (verdict) {
        (ElementSet::first(n) - subset).for_each([&](Element e) {
            if (symmetric_on(subset.with(e))) {
                verdict = false;
            }
        });
    }
    BoxDecomposition d = box_decomposition(h);
    const auto& boxes = d.boxes();
    bool listed = std::any_of(boxes.begin(), boxes.end(), [&](const Box& b) { return b.members == subset; });
    ensure(verdict == listed, "is_box: maximality test disagrees with the box decomposition");
    return verdict;
}

// ---------------------------------------------------------------------------
// Standard construction from a map into a linearly ordered codomain.

/// A map f from the ground set into {0..m-1}, a subset X1 of the codomain,
/// and a linear order R on the codomain.
struct KernelPresentation {
    std::vector<std::size_t> map;
    std::size_t codomain_size = 0;
    ElementSet kernel_classes;
    LinearOrder order;

    KernelPresentation(std::vector<std::size_t> f, std::size_t m, ElementSet x1, LinearOrder r)
        : map(std::move(f)), codomain_size(m), kernel_classes(x1), order(std::move(r)) {
        if (order.size() != m) {
            throw InputError("codomain order has " + std::to_string(order.size()) + " elements, expected " +
                             std::to_string(m));
        }
        if (!kernel_classes.subset_of(ElementSet::first(m))) {
            throw InputError("X1 is not a subset of the codomain");
        }
        for (std::size_t v : map) {
            if (v >= m) {
                throw InputError("map value " + std::to_string(v) + " outside the codomain");
            }
        }
    }

    /// Δ ∪ {(a,b) | f(a) = f(b) ∈ X1}.
    Relation kernel() const {
        std::size_t n = map.size();
        Relation r = Relation::identity(n);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                if (map[a] == map[b] && kernel_classes.contains(map[a])) {
                    r.insert(a, b);
                }
            }
        }
        return r;
    }

    /// Δ ∪ {(a,b) | f(a) <_R f(b)}.
    Relation pullback() const {
        std::size_t n = map.size();
        Relation r = Relation::identity(n);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                if (map[a] != map[b] && order.contains(map[a], map[b])) {
                    r.insert(a, b);
                }
            }
        }
        return r;
    }
};

inline HalfSpace standard_construction(const KernelPresentation& k) {
    Relation ker = k.kernel();
    HalfSpace alpha(ker | k.pullback());
    ensure((alpha.relation() & alpha.relation().inverse()) == ker,
           "standard construction: symmetric part differs from the kernel");
    return alpha;
}

/// As above, and additionally checks that gamma is contained in the result;
/// a missing pair means the supplied map does not satisfy the hypotheses.
inline HalfSpace standard_construction(const KernelPresentation& k, const Quasiorder& gamma) {
    HalfSpace alpha = standard_construction(k);
    if (auto p = gamma.relation().first_pair_not_in(alpha.relation())) {
        throw PreconditionError("constructed half-space does not contain gamma: " + format_pair(*p) + " missing", p);
    }
    return alpha;
}

/// Lifts a linear realizer of the induced order to a half-space realizer of
/// q: each R_i becomes (q ∩ q⁻¹) ∪ κ⁻¹(R_i).
inline std::vector<HalfSpace> halfspace_realizer_from_linear_realizer(const Quasiorder& q,
                                                                     std::span<const LinearOrder> linext) {
    if (linext.empty()) {
        throw PreconditionError("linear realizer must be nonempty");
    }
    QuotientMap quotient = induced_order(q);
    std::size_t k = quotient.class_count();
    Relation meet = Relation::full(k);
    for (const auto& r : linext) {
        if (r.size() != k) {
            throw InputError("linear order on " + std::to_string(r.size()) + " elements, quotient has " +
                             std::to_string(k) + " classes");
        }
        if (auto p = quotient.induced().relation().first_pair_not_in(r.relation())) {
            throw PreconditionError("not a linear extension of the induced order: class pair " + format_pair(*p) +
                                        " missing",
                                    p);
        }
        meet = meet & r.relation();
    }
    if (auto p = meet.first_pair_not_in(quotient.induced().relation())) {
        throw PreconditionError("linear orders do not intersect to the induced order: class pair " +
                                    format_pair(*p) + " survives",
                                p);
    }
    std::vector<std::size_t> kappa(q.size());
    for (std::size_t x = 0; x < q.size(); ++x) {
        kappa[x] = quotient.class_of(x);
    }
    std::vector<HalfSpace> out;
    Relation check = Relation::full(q.size());
    for (const auto& r : linext) {
        out.push_back(standard_construction(KernelPresentation(kappa, k, ElementSet::first(k), r), q));
        check = check & out.back().relation();
    }
    ensure(check == q.relation(), "lifted half-spaces do not intersect to q");
    return out;
}

}  // namespace quord
