#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quord/error.hpp"

namespace quord {

/// Rows are single machine words, so no ground set may exceed this.
inline constexpr std::size_t max_elements = 64;

inline std::uint64_t low_bits(std::size_t n) {
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

/// A subset of a ground set of at most 64 elements.
class ElementSet {
public:
    constexpr ElementSet() = default;
    constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

    static ElementSet of(std::initializer_list<Element> elements) {
        ElementSet s;
        for (Element e : elements) {
            s = s.with(e);
        }
        return s;
    }

    static ElementSet of(std::span<const Element> elements) {
        ElementSet s;
        for (Element e : elements) {
            s = s.with(e);
        }
        return s;
    }

    static ElementSet first(std::size_t n) { return ElementSet(low_bits(n)); }

    std::uint64_t bits() const noexcept { return bits_; }
    bool contains(Element e) const noexcept { return e < 64 && ((bits_ >> e) & 1U) != 0; }
    ElementSet with(Element e) const {
        if (e >= max_elements) {
            throw InputError("element " + std::to_string(e) + " exceeds the 64-element limit");
        }
        return ElementSet(bits_ | (std::uint64_t{1} << e));
    }
    ElementSet without(Element e) const noexcept {
        return e < 64 ? ElementSet(bits_ & ~(std::uint64_t{1} << e)) : *this;
    }
    std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
    bool empty() const noexcept { return bits_ == 0; }
    Element min() const noexcept { return static_cast<Element>(std::countr_zero(bits_)); }

    template <typename F>
    void for_each(F&& f) const {
        for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
            f(static_cast<Element>(std::countr_zero(rest)));
        }
    }

    std::vector<Element> members() const {
        std::vector<Element> out;
        out.reserve(size());
        for_each([&](Element e) { out.push_back(e); });
        return out;
    }

    bool subset_of(ElementSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }

    friend ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
    friend ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
    friend ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
    friend bool operator==(ElementSet, ElementSet) = default;
    friend auto operator<=>(ElementSet, ElementSet) = default;

private:
    std::uint64_t bits_ = 0;
};

/// A binary relation on {0, ..., n-1}, stored as one successor bitmask per
/// element. Relations compare by size first, then row by row as unsigned
/// words; this is the "bit-matrix order" every enumeration sorts by.
class Relation {
public:
    Relation() = default;

    explicit Relation(std::size_t n) : n_(n) {
        if (n > max_elements) {
            throw ResourceError("ground set of " + std::to_string(n) + " elements exceeds the " +
                                std::to_string(max_elements) + "-element limit");
        }
        rows_.assign(n, 0);
    }

    static Relation identity(std::size_t n) {
        Relation r(n);
        for (std::size_t i = 0; i < n; ++i) {
            r.rows_[i] = std::uint64_t{1} << i;
        }
        return r;
    }

    static Relation full(std::size_t n) {
        Relation r(n);
        std::fill(r.rows_.begin(), r.rows_.end(), low_bits(n));
        return r;
    }

    static Relation from_pairs(std::size_t n, std::span<const Pair> pairs, bool reflexive_implicit) {
        Relation r = reflexive_implicit ? identity(n) : Relation(n);
        for (auto [x, y] : pairs) {
            if (x >= n || y >= n) {
                throw InputError("pair " + format_pair({x, y}) + " out of range for " +
                                 std::to_string(n) + " elements");
            }
            r.insert(x, y);
        }
        return r;
    }

    static Relation from_pairs(std::size_t n, std::initializer_list<Pair> pairs, bool reflexive_implicit) {
        return from_pairs(n, std::span<const Pair>(pairs.begin(), pairs.size()), reflexive_implicit);
    }

    /// Rebuilds a relation on n <= 8 elements from pair_mask().
    static Relation from_pair_mask(std::size_t n, std::uint64_t mask) {
        Relation r(n);
        for (std::size_t i = 0; i < n; ++i) {
            r.rows_[i] = (mask >> (i * n)) & low_bits(n);
        }
        return r;
    }

    std::size_t size() const noexcept { return n_; }

    bool contains(Element x, Element y) const noexcept {
        return x < n_ && y < n_ && ((rows_[x] >> y) & 1U) != 0;
    }
    bool contains(Pair p) const noexcept { return contains(p.first, p.second); }

    ElementSet successors(Element x) const { return ElementSet(rows_.at(x)); }

    ElementSet predecessors(Element y) const {
        ElementSet s;
        for (std::size_t i = 0; i < n_; ++i) {
            if (contains(i, y)) {
                s = s.with(i);
            }
        }
        return s;
    }

    Relation& insert(Element x, Element y) {
        check_element(x);
        check_element(y);
        rows_[x] |= std::uint64_t{1} << y;
        return *this;
    }

    Relation& erase(Element x, Element y) {
        check_element(x);
        check_element(y);
        rows_[x] &= ~(std::uint64_t{1} << y);
        return *this;
    }

    /// Pairs in row-major order.
    std::vector<Pair> pairs() const {
        std::vector<Pair> out;
        for (std::size_t x = 0; x < n_; ++x) {
            ElementSet(rows_[x]).for_each([&](Element y) { out.emplace_back(x, y); });
        }
        return out;
    }

    std::size_t pair_count() const noexcept {
        std::size_t c = 0;
        for (auto row : rows_) {
            c += static_cast<std::size_t>(std::popcount(row));
        }
        return c;
    }

    Relation inverse() const {
        Relation r(n_);
        for (std::size_t x = 0; x < n_; ++x) {
            ElementSet(rows_[x]).for_each([&](Element y) { r.rows_[y] |= std::uint64_t{1} << x; });
        }
        return r;
    }

    /// (A x A) minus this relation.
    Relation complement() const {
        Relation r(n_);
        for (std::size_t x = 0; x < n_; ++x) {
            r.rows_[x] = ~rows_[x] & low_bits(n_);
        }
        return r;
    }

    bool subset_of(const Relation& other) const {
        require_same_ground(other);
        for (std::size_t x = 0; x < n_; ++x) {
            if ((rows_[x] & ~other.rows_[x]) != 0) {
                return false;
            }
        }
        return true;
    }

    /// First pair of this relation missing from `other`, row-major.
    std::optional<Pair> first_pair_not_in(const Relation& other) const {
        require_same_ground(other);
        for (std::size_t x = 0; x < n_; ++x) {
            std::uint64_t extra = rows_[x] & ~other.rows_[x];
            if (extra != 0) {
                return Pair{x, static_cast<Element>(std::countr_zero(extra))};
            }
        }
        return std::nullopt;
    }

    /// {(x,z) | (x,y) in first and (y,z) in second for some y}.
    friend Relation compose(const Relation& first, const Relation& second) {
        first.require_same_ground(second);
        Relation r(first.n_);
        for (std::size_t x = 0; x < first.n_; ++x) {
            ElementSet(first.rows_[x]).for_each([&](Element y) { r.rows_[x] |= second.rows_[y]; });
        }
        return r;
    }

    /// Packs the relation into n*n bits, row x occupying bits [x*n, x*n+n).
    std::uint64_t pair_mask() const {
        if (n_ > 8) {
            throw ResourceError("pair masks need at most 8 elements");
        }
        std::uint64_t mask = 0;
        for (std::size_t x = 0; x < n_; ++x) {
            mask |= rows_[x] << (x * n_);
        }
        return mask;
    }

    friend Relation operator&(const Relation& a, const Relation& b) { return a.zip(b, [](auto u, auto v) { return u & v; }); }
    friend Relation operator|(const Relation& a, const Relation& b) { return a.zip(b, [](auto u, auto v) { return u | v; }); }
    friend Relation operator-(const Relation& a, const Relation& b) { return a.zip(b, [](auto u, auto v) { return u & ~v; }); }

    friend bool operator==(const Relation&, const Relation&) = default;
    friend std::strong_ordering operator<=>(const Relation& a, const Relation& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) {
            return c;
        }
        return std::lexicographical_compare_three_way(a.rows_.begin(), a.rows_.end(), b.rows_.begin(),
                                                      b.rows_.end());
    }

    void require_same_ground(const Relation& other) const {
        if (n_ != other.n_) {
            throw InputError("ground-set mismatch: " + std::to_string(n_) + " vs " + std::to_string(other.n_) +
                             " elements");
        }
    }

private:
    void check_element(Element e) const {
        if (e >= n_) {
            throw InputError("element " + std::to_string(e) + " out of range for " + std::to_string(n_) +
                             " elements");
        }
    }

    template <typename Op>
    Relation zip(const Relation& other, Op op) const {
        require_same_ground(other);
        Relation r(n_);
        for (std::size_t x = 0; x < n_; ++x) {
            r.rows_[x] = op(rows_[x], other.rows_[x]);
        }
        return r;
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> rows_;
};

inline std::string to_string(const Relation& r) {
    std::string out = "{";
    bool first = true;
    for (auto p : r.pairs()) {
        if (!first) {
            out += ",";
        }
        first = false;
        out += format_pair(p);
    }
    return out + "} on " + std::to_string(r.size());
}

// ---------------------------------------------------------------------------
// Axiom checks. Each returns the first counterexample in row-major order.

inline std::optional<Element> find_irreflexive(const Relation& r) {
    for (std::size_t x = 0; x < r.size(); ++x) {
        if (!r.contains(x, x)) {
            return x;
        }
    }
    return std::nullopt;
}

/// (x, y, z) with (x,y), (y,z) in r and (x,z) not in r.
inline std::optional<std::array<Element, 3>> find_intransitive(const Relation& r) {
    for (std::size_t x = 0; x < r.size(); ++x) {
        for (Element y : r.successors(x).members()) {
            std::uint64_t missing = r.successors(y).bits() & ~r.successors(x).bits();
            if (missing != 0) {
                return std::array<Element, 3>{x, y, static_cast<Element>(std::countr_zero(missing))};
            }
        }
    }
    return std::nullopt;
}

/// x != y with both (x,y) and (y,x) in r.
inline std::optional<Pair> find_antisymmetry_violation(const Relation& r) {
    Relation both = r & r.inverse();
    for (auto [x, y] : both.pairs()) {
        if (x != y) {
            return Pair{x, y};
        }
    }
    return std::nullopt;
}

/// x != y with neither (x,y) nor (y,x) in r.
inline std::optional<Pair> find_incomparable(const Relation& r) {
    Relation neither = (r | r.inverse()).complement();
    for (auto [x, y] : neither.pairs()) {
        if (x != y) {
            return Pair{x, y};
        }
    }
    return std::nullopt;
}

inline std::optional<Pair> find_asymmetric(const Relation& r) { return (r - r.inverse()).first_pair_not_in(Relation(r.size())); }

struct Properties {
    bool reflexive = false;
    bool transitive = false;
    bool antisymmetric = false;
    bool symmetric = false;
    bool total = false;

    friend bool operator==(const Properties&, const Properties&) = default;
};

inline Properties classify(const Relation& r) {
    return Properties{
        .reflexive = !find_irreflexive(r),
        .transitive = !find_intransitive(r),
        .antisymmetric = !find_antisymmetry_violation(r),
        .symmetric = !find_asymmetric(r),
        .total = !find_incomparable(r),
    };
}

/// Smallest transitive superset (Warshall over bit rows).
inline Relation transitive_closure(const Relation& r) {
    std::size_t n = r.size();
    std::vector<std::uint64_t> rows(n);
    for (std::size_t x = 0; x < n; ++x) {
        rows[x] = r.successors(x).bits();
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if ((rows[i] >> k) & 1U) {
                rows[i] |= rows[k];
            }
        }
    }
    Relation out(n);
    for (std::size_t x = 0; x < n; ++x) {
        ElementSet(rows[x]).for_each([&](Element y) { out.insert(x, y); });
    }
    return out;
}

namespace detail {

inline void require_reflexive(const Relation& r) {
    if (auto x = find_irreflexive(r)) {
        throw ValidationError("reflexive", {*x, *x}, "missing " + format_pair({*x, *x}));
    }
}

inline void require_transitive(const Relation& r) {
    if (auto t = find_intransitive(r)) {
        auto [x, y, z] = *t;
        throw ValidationError("transitive", {x, z},
                              format_pair({x, y}) + " and " + format_pair({y, z}) + " present but " +
                                  format_pair({x, z}) + " missing");
    }
}

inline void require_antisymmetric(const Relation& r) {
    if (auto p = find_antisymmetry_violation(r)) {
        throw ValidationError("antisymmetric", *p,
                              "both " + format_pair(*p) + " and its inverse present");
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Validated refinements. Constructors check every axiom and throw
// ValidationError naming the first one that fails.

class Quasiorder {
public:
    Quasiorder() = default;
    explicit Quasiorder(Relation r) : rel_(std::move(r)) {
        detail::require_reflexive(rel_);
        detail::require_transitive(rel_);
    }

    static Quasiorder identity(std::size_t n) { return Quasiorder(Relation::identity(n)); }
    static Quasiorder full(std::size_t n) { return Quasiorder(Relation::full(n)); }

    const Relation& relation() const noexcept { return rel_; }
    std::size_t size() const noexcept { return rel_.size(); }
    bool contains(Element x, Element y) const noexcept { return rel_.contains(x, y); }

    friend bool operator==(const Quasiorder&, const Quasiorder&) = default;
    friend auto operator<=>(const Quasiorder&, const Quasiorder&) = default;

private:
    Relation rel_;
};

class PartialOrder {
public:
    PartialOrder() = default;
    explicit PartialOrder(Relation r) : PartialOrder(Quasiorder(std::move(r))) {}
    explicit PartialOrder(Quasiorder q) : q_(std::move(q)) { detail::require_antisymmetric(q_.relation()); }

    const Quasiorder& quasiorder() const noexcept { return q_; }
    operator const Quasiorder&() const noexcept { return q_; }  // NOLINT(google-explicit-constructor)
    const Relation& relation() const noexcept { return q_.relation(); }
    std::size_t size() const noexcept { return q_.size(); }
    bool contains(Element x, Element y) const noexcept { return q_.contains(x, y); }

    friend bool operator==(const PartialOrder&, const PartialOrder&) = default;
    friend auto operator<=>(const PartialOrder&, const PartialOrder&) = default;

private:
    Quasiorder q_;
};

class LinearOrder {
public:
    LinearOrder() = default;
    explicit LinearOrder(Relation r) : LinearOrder(PartialOrder(std::move(r))) {}
    explicit LinearOrder(PartialOrder p) : p_(std::move(p)) {
        if (auto pr = find_incomparable(p_.relation())) {
            throw ValidationError("total", *pr, format_pair(*pr) + " incomparable");
        }
    }

    /// `sequence[0]` is the least element. Must be a permutation of 0..n-1.
    static LinearOrder from_sequence(std::span<const Element> sequence) {
        std::size_t n = sequence.size();
        Relation r(n);
        ElementSet seen;
        for (std::size_t i = 0; i < n; ++i) {
            if (sequence[i] >= n || seen.contains(sequence[i])) {
                throw InputError("sequence is not a permutation of 0.." + std::to_string(n ? n - 1 : 0));
            }
            seen = seen.with(sequence[i]);
            for (std::size_t j = i; j < n; ++j) {
                r.insert(sequence[i], sequence[j]);
            }
        }
        return LinearOrder(std::move(r));
    }

    static LinearOrder from_sequence(std::initializer_list<Element> sequence) {
        return from_sequence(std::span<const Element>(sequence.begin(), sequence.size()));
    }

    /// 0 < 1 < ... < n-1.
    static LinearOrder natural(std::size_t n) {
        std::vector<Element> seq(n);
        for (std::size_t i = 0; i < n; ++i) {
            seq[i] = i;
        }
        return from_sequence(seq);
    }

    /// Elements in ascending order.
    std::vector<Element> sequence() const {
        std::vector<Element> seq(size());
        for (std::size_t x = 0; x < size(); ++x) {
            seq[position(x)] = x;
        }
        return seq;
    }

    /// Number of elements strictly below x.
    std::size_t position(Element x) const { return relation().predecessors(x).size() - 1; }

    const PartialOrder& partial_order() const noexcept { return p_; }
    operator const PartialOrder&() const noexcept { return p_; }  // NOLINT(google-explicit-constructor)
    operator const Quasiorder&() const noexcept { return p_.quasiorder(); }  // NOLINT(google-explicit-constructor)
    const Quasiorder& quasiorder() const noexcept { return p_.quasiorder(); }
    const Relation& relation() const noexcept { return p_.relation(); }
    std::size_t size() const noexcept { return p_.size(); }
    bool contains(Element x, Element y) const noexcept { return p_.contains(x, y); }

    friend bool operator==(const LinearOrder&, const LinearOrder&) = default;
    friend auto operator<=>(const LinearOrder&, const LinearOrder&) = default;

private:
    PartialOrder p_;
};

class Equivalence {
public:
    Equivalence() = default;
    explicit Equivalence(Relation r) : rel_(std::move(r)) {
        detail::require_reflexive(rel_);
        if (auto p = find_asymmetric(rel_)) {
            throw ValidationError("symmetric", *p, format_pair(*p) + " present without its inverse");
        }
        detail::require_transitive(rel_);
    }

    const Relation& relation() const noexcept { return rel_; }
    std::size_t size() const noexcept { return rel_.size(); }
    bool contains(Element x, Element y) const noexcept { return rel_.contains(x, y); }

    /// Equivalence classes ordered by their minimum element.
    std::vector<ElementSet> classes() const {
        std::vector<ElementSet> out;
        ElementSet done;
        for (std::size_t x = 0; x < size(); ++x) {
            if (!done.contains(x)) {
                out.push_back(rel_.successors(x));
                done = done | rel_.successors(x);
            }
        }
        return out;
    }

    friend bool operator==(const Equivalence&, const Equivalence&) = default;

private:
    Relation rel_;
};

// ---------------------------------------------------------------------------
// The lattice (Quord(A), join, meet) and basic constructions.

inline Quasiorder quord_meet(const Quasiorder& a, const Quasiorder& b) {
    return Quasiorder(a.relation() & b.relation());
}

inline Quasiorder quord_join(const Quasiorder& a, const Quasiorder& b) {
    return Quasiorder(transitive_closure(a.relation() | b.relation()));
}

inline Quasiorder inverse(const Quasiorder& q) { return Quasiorder(q.relation().inverse()); }
inline PartialOrder inverse(const PartialOrder& p) { return PartialOrder(p.relation().inverse()); }
inline LinearOrder inverse(const LinearOrder& l) { return LinearOrder(l.relation().inverse()); }

inline Equivalence symmetric_part(const Quasiorder& q) {
    return Equivalence(q.relation() & q.relation().inverse());
}

/// r restricted to `subset`, re-indexed so the i-th smallest member of
/// `subset` becomes element i.
inline Relation restrict(const Relation& r, ElementSet subset) {
    if (!subset.subset_of(ElementSet::first(r.size()))) {
        throw InputError("restriction subset has elements outside the ground set");
    }
    auto members = subset.members();
    Relation out(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = 0; j < members.size(); ++j) {
            if (r.contains(members[i], members[j])) {
                out.insert(i, j);
            }
        }
    }
    return out;
}

struct Restriction {
    Quasiorder order;
    /// index_map[i] is the original id of new element i (ascending).
    std::vector<Element> index_map;
};

inline Restriction restrict(const Quasiorder& q, ElementSet subset) {
    return Restriction{Quasiorder(restrict(q.relation(), subset)), subset.members()};
}

// ---------------------------------------------------------------------------
// Quotient by the symmetric part and the induced partial order.

class QuotientMap {
public:
    QuotientMap() = default;
    QuotientMap(std::vector<ElementSet> classes, std::size_t ground_size, PartialOrder induced)
        : classes_(std::move(classes)), class_of_(ground_size), induced_(std::move(induced)) {
        for (std::size_t c = 0; c < classes_.size(); ++c) {
            classes_[c].for_each([&](Element x) { class_of_[x] = c; });
        }
    }

    const std::vector<ElementSet>& classes() const noexcept { return classes_; }
    std::size_t class_count() const noexcept { return classes_.size(); }
    std::size_t ground_size() const noexcept { return class_of_.size(); }
    std::size_t class_of(Element x) const { return class_of_.at(x); }
    Element representative(std::size_t c) const { return classes_.at(c).min(); }
    const PartialOrder& induced() const noexcept { return induced_; }

    /// Pulls a relation on classes back to elements: (a,b) iff
    /// ([a],[b]) is in `on_classes`.
    Relation lift(const Relation& on_classes) const {
        if (on_classes.size() != class_count()) {
            throw InputError("relation on " + std::to_string(on_classes.size()) + " elements does not match " +
                             std::to_string(class_count()) + " classes");
        }
        Relation out(ground_size());
        for (std::size_t a = 0; a < ground_size(); ++a) {
            for (std::size_t b = 0; b < ground_size(); ++b) {
                if (on_classes.contains(class_of_[a], class_of_[b])) {
                    out.insert(a, b);
                }
            }
        }
        return out;
    }

    /// ([a],[b]) for every (a,b) in the relation.
    Relation project(const Relation& on_elements) const {
        if (on_elements.size() != ground_size()) {
            throw InputError("relation size does not match the quotient's ground set");
        }
        Relation out(class_count());
        for (auto [a, b] : on_elements.pairs()) {
            out.insert(class_of_[a], class_of_[b]);
        }
        return out;
    }

private:
    std::vector<ElementSet> classes_;
    std::vector<std::size_t> class_of_;
    PartialOrder induced_;
};

/// Quotient of q by q ∩ q⁻¹ with the induced order. Both descriptions of
/// the induced order (some-pair and all-pairs) are computed and compared.
inline QuotientMap induced_order(const Quasiorder& q) {
    auto classes = symmetric_part(q).classes();
    std::size_t k = classes.size();
    Relation some(k);
    Relation all(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            bool any = false;
            bool every = true;
            classes[i].for_each([&](Element x) {
                bool hit = !(q.relation().successors(x) & classes[j]).empty();
                bool cover = classes[j].subset_of(q.relation().successors(x));
                any = any || hit;
                every = every && cover;
            });
            if (any) {
                some.insert(i, j);
            }
            if (every) {
                all.insert(i, j);
            }
        }
    }
    ensure(some == all, "induced order: some-pair and all-pairs descriptions disagree");
    return QuotientMap(std::move(classes), q.size(), PartialOrder(std::move(some)));
}

}  // namespace quord
