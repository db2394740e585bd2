#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quord/dimension.hpp"
#include "quord/extension.hpp"
#include "quord/halfspace.hpp"
#include "quord/product.hpp"
#include "quord/relation.hpp"

namespace quord {

inline constexpr std::size_t enumeration_max_n = 5;

// ---------------------------------------------------------------------------
// Exhaustive generation. Both generators return relations sorted in
// bit-matrix order; they share nothing but the axiom checks.

/// Every quasiorder on n elements, found by testing all 2^(n²−n) reflexive
/// relations for transitivity.
inline std::vector<Quasiorder> enumerate_quasiorders(std::size_t n) {
    if (n > enumeration_max_n) {
        throw ResourceError("quasiorder enumeration is capped at " + std::to_string(enumeration_max_n) +
                            " elements");
    }
    std::vector<Pair> off_diagonal;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (x != y) {
                off_diagonal.emplace_back(x, y);
            }
        }
    }
    std::vector<Quasiorder> out;
    std::uint64_t count = std::uint64_t{1} << off_diagonal.size();
    for (std::uint64_t m = 0; m < count; ++m) {
        Relation r = Relation::identity(n);
        for (std::size_t i = 0; i < off_diagonal.size(); ++i) {
            if ((m >> i) & 1U) {
                r.insert(off_diagonal[i].first, off_diagonal[i].second);
            }
        }
        if (!find_intransitive(r)) {
            out.emplace_back(std::move(r));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Every quasiorder on n elements, grown one element at a time: the new
/// element n-1 gets a down-set D and an up-set U of the quasiorder on the
/// first n-1 elements with D × U inside it.
inline std::vector<Quasiorder> enumerate_quasiorders_by_insertion(std::size_t n) {
    if (n > enumeration_max_n) {
        throw ResourceError("quasiorder enumeration is capped at " + std::to_string(enumeration_max_n) +
                            " elements");
    }
    std::vector<Relation> level{Relation(0)};
    for (std::size_t m = 0; m < n; ++m) {
        std::vector<Relation> next;
        std::uint64_t subsets = std::uint64_t{1} << m;
        for (const auto& q : level) {
            auto is_down = [&](ElementSet s) {
                bool ok = true;
                s.for_each([&](Element x) { ok = ok && q.predecessors(x).subset_of(s); });
                return ok;
            };
            auto is_up = [&](ElementSet s) {
                bool ok = true;
                s.for_each([&](Element x) { ok = ok && q.successors(x).subset_of(s); });
                return ok;
            };
            for (std::uint64_t d = 0; d < subsets; ++d) {
                ElementSet down(d);
                if (!is_down(down)) {
                    continue;
                }
                for (std::uint64_t u = 0; u < subsets; ++u) {
                    ElementSet up(u);
                    if (!is_up(up)) {
                        continue;
                    }
                    bool compatible = true;
                    down.for_each([&](Element x) { compatible = compatible && up.subset_of(q.successors(x)); });
                    if (!compatible) {
                        continue;
                    }
                    Relation r(m + 1);
                    for (auto [x, y] : q.pairs()) {
                        r.insert(x, y);
                    }
                    r.insert(m, m);
                    down.for_each([&](Element x) { r.insert(x, m); });
                    up.for_each([&](Element y) { r.insert(m, y); });
                    next.push_back(std::move(r));
                }
            }
        }
        level = std::move(next);
    }
    std::vector<Quasiorder> out;
    out.reserve(level.size());
    for (auto& r : level) {
        out.emplace_back(std::move(r));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<PartialOrder> enumerate_partial_orders(std::size_t n) {
    std::vector<PartialOrder> out;
    for (const auto& q : enumerate_quasiorders(n)) {
        if (!find_antisymmetry_violation(q.relation())) {
            out.emplace_back(q);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// The other three half-space characterizations, kept for cross-checking.

/// Δ ∪ ((A×A) ∖ a) is transitive.
inline bool halfspace_by_complement(const Relation& a) {
    return !find_intransitive(Relation::identity(a.size()) | a.complement());
}

/// Every restriction to three elements passes halfspace_by_complement.
inline bool halfspace_by_triples(const Relation& a) {
    std::size_t n = a.size();
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
            for (std::size_t z = y + 1; z < n; ++z) {
                if (!halfspace_by_complement(restrict(a, ElementSet::of({x, y, z})))) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// (z,y), (y,z) absent, (x,z) present and x != z force (x,y) present.
inline bool halfspace_by_dual_exchange(const Relation& a) {
    std::size_t n = a.size();
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            for (std::size_t z = 0; z < n; ++z) {
                if (!a.contains(z, y) && !a.contains(y, z) && a.contains(x, z) && x != z && !a.contains(x, y)) {
                    return false;
                }
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Separation of convex sets by complementary half-spaces.

/// A half-space α ⊇ p1 whose complement contains p2, the least such α in
/// bit-matrix order.
inline std::optional<std::pair<HalfSpace, HalfSpace>> find_separating_pair(const Quasiorder& p1,
                                                                           const Quasiorder& p2) {
    p1.relation().require_same_ground(p2.relation());
    for (const auto& alpha : enumerate_halfspaces(p1.size())) {
        if (!p1.relation().subset_of(alpha.relation())) {
            continue;
        }
        HalfSpace beta = complement_halfspace(alpha);
        if (p2.relation().subset_of(beta.relation())) {
            return std::pair{alpha, beta};
        }
    }
    return std::nullopt;
}

/// True when no complementary pair separates p1 from p2.
inline bool verify_separation_counterexample(const Quasiorder& p1, const Quasiorder& p2) {
    return !find_separating_pair(p1, p2).has_value();
}

/// The four-element instance: Δ ∪ {(0,1),(2,3)} against Δ ∪ {(0,3),(2,1)}.
inline bool verify_separation_counterexample() {
    return verify_separation_counterexample(Quasiorder(Relation::from_pairs(4, {{0, 1}, {2, 3}}, true)),
                                            Quasiorder(Relation::from_pairs(4, {{0, 3}, {2, 1}}, true)));
}

// ---------------------------------------------------------------------------
// Randomness for the sampled suites. Draws are reduced by modulo so that a
// seed reproduces the same instances on every standard library.

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::size_t below(std::size_t bound) { return static_cast<std::size_t>(rng_() % bound); }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[below(i)]);
        }
    }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[below(v.size())];
    }

    LinearOrder linear_order(std::size_t n) {
        std::vector<Element> seq(n);
        for (std::size_t i = 0; i < n; ++i) {
            seq[i] = i;
        }
        shuffle(seq);
        return LinearOrder::from_sequence(seq);
    }

    /// Transitive closure of random forward pairs of a random linear order.
    PartialOrder partial_order(std::size_t n) {
        auto seq = linear_order(n).sequence();
        Relation r = Relation::identity(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (below(3) == 0) {
                    r.insert(seq[i], seq[j]);
                }
            }
        }
        return PartialOrder(transitive_closure(r));
    }

private:
    std::mt19937_64 rng_;
};

// ---------------------------------------------------------------------------
// Verification suites.

inline constexpr std::uint64_t default_replay_seed = 0x5EED2024ULL;

struct SuiteReport {
    std::string id;
    std::size_t instances = 0;
    std::size_t failures = 0;
    std::uint64_t seed = default_replay_seed;
    double wall_ms = 0;
    /// The first few failure descriptions.
    std::vector<std::string> messages;
};

namespace detail {

inline constexpr std::size_t kept_messages = 10;

class SuiteContext {
public:
    SuiteContext(SuiteReport& report) : report_(report), sampler(report.seed) {}

    /// Runs one instance. A false result or any exception counts as a failure.
    template <typename F>
    void check(const std::string& label, F&& instance) {
        ++report_.instances;
        std::string why;
        try {
            if (instance()) {
                return;
            }
            why = "check failed";
        } catch (const std::exception& e) {
            why = e.what();
        }
        ++report_.failures;
        if (report_.messages.size() < kept_messages) {
            report_.messages.push_back(label + ": " + why);
        }
    }

private:
    SuiteReport& report_;

public:
    Sampler sampler;
};

inline std::vector<Quasiorder> quasiorders_up_to(std::size_t n) {
    std::vector<Quasiorder> out;
    for (std::size_t m = 0; m <= n; ++m) {
        auto level = enumerate_quasiorders(m);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

inline std::vector<PartialOrder> partial_orders_up_to(std::size_t n) {
    std::vector<PartialOrder> out;
    for (std::size_t m = 0; m <= n; ++m) {
        auto level = enumerate_partial_orders(m);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

inline std::vector<HalfSpace> halfspaces_up_to(std::size_t n) {
    std::vector<HalfSpace> out;
    for (std::size_t m = 0; m <= n; ++m) {
        auto level = enumerate_halfspaces(m);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

inline std::vector<LinearOrder> all_linear_orders(std::size_t n) {
    return linear_extensions(PartialOrder(Relation::identity(n)));
}

inline std::string label_of(const Relation& r) { return to_string(r); }

/// Independent check that `orders` is a linear realizer of `target`.
inline bool is_linear_realizer(const std::vector<LinearOrder>& orders, const Relation& target) {
    Relation meet = Relation::full(target.size());
    for (const auto& l : orders) {
        Properties p = classify(l.relation());
        if (!(p.reflexive && p.transitive && p.antisymmetric && p.total) || !target.subset_of(l.relation())) {
            return false;
        }
        meet = meet & l.relation();
    }
    return meet == target;
}

inline bool is_halfspace_realizer(const std::vector<HalfSpace>& parts, const Relation& target) {
    Relation meet = Relation::full(target.size());
    for (const auto& h : parts) {
        if (!halfspace_by_complement(h.relation())) {
            return false;
        }
        meet = meet & h.relation();
    }
    return meet == target;
}

// --- relation core --------------------------------------------------------

inline void suite_relation_core(SuiteContext& ctx) {
    for (std::size_t n = 0; n <= 3; ++n) {
        auto qs = enumerate_quasiorders(n);
        for (const auto& a : qs) {
            for (const auto& b : qs) {
                ctx.check("join " + label_of(a.relation()) + " " + label_of(b.relation()), [&] {
                    Relation join = quord_join(a, b).relation();
                    if (!(a.relation() | b.relation()).subset_of(join)) {
                        return false;
                    }
                    for (const auto& c : qs) {
                        if ((a.relation() | b.relation()).subset_of(c.relation()) && !join.subset_of(c.relation())) {
                            return false;
                        }
                    }
                    Relation u = a.relation() | b.relation();
                    Relation cl = transitive_closure(u);
                    return transitive_closure(cl) == cl && a.relation().subset_of(cl) &&
                           transitive_closure(a.relation()).subset_of(cl);
                });
            }
            ctx.check("inverse/restrict " + label_of(a.relation()), [&] {
                QuotientMap qm = induced_order(a);  // compares both induced-order descriptions
                return inverse(inverse(a)) == a && restrict(a, ElementSet::first(n)).order == a &&
                       classify(qm.induced().relation()).antisymmetric;
            });
        }
    }
}

// --- half-spaces ----------------------------------------------------------

inline void suite_equivalence(SuiteContext& ctx, std::size_t n) {
    for (const auto& q : enumerate_quasiorders(n)) {
        ctx.check(label_of(q.relation()), [&] {
            const Relation& a = q.relation();
            bool c1 = halfspace_by_complement(a);
            bool c2 = halfspace_by_triples(a);
            bool c3 = is_halfspace(q).holds;
            bool c4 = halfspace_by_dual_exchange(a);
            return c1 == c2 && c2 == c3 && c3 == c4;
        });
    }
}

inline void suite_complementary(SuiteContext& ctx) {
    for (std::size_t n = 0; n <= 3; ++n) {
        auto qs = enumerate_quasiorders(n);
        Relation delta = Relation::identity(n);
        auto distributes = [&](const Quasiorder& a, const Quasiorder& b) {
            for (const auto& g : qs) {
                if (quord_join(quord_meet(a, g), quord_meet(b, g)) != g) {
                    return false;
                }
            }
            return true;
        };
        for (const auto& a : qs) {
            for (const auto& b : qs) {
                if ((a.relation() & b.relation()) != delta) {
                    continue;
                }
                ctx.check(label_of(a.relation()) + " / " + label_of(b.relation()), [&] {
                    bool pair = check_complementary_pair(a, b);
                    bool dist = distributes(a, b);
                    // Complementary pairs distribute; distributing pairs cover A×A.
                    return (!pair || dist) && (!dist || (a.relation() | b.relation()) == Relation::full(n));
                });
            }
        }
    }
}

inline void suite_induced(SuiteContext& ctx) {
    for (const auto& h : halfspaces_up_to(4)) {
        ctx.check(label_of(h.relation()), [&] {
            return halfspace_by_complement(induced_order(h.quasiorder()).induced().relation());
        });
    }
}

inline void suite_closure(SuiteContext& ctx) {
    for (const auto& h : halfspaces_up_to(4)) {
        std::size_t n = h.size();
        ctx.check("inverse " + label_of(h.relation()),
                  [&] { return halfspace_by_complement(h.relation().inverse()); });
        for (std::uint64_t b = 1; b < (std::uint64_t{1} << n); ++b) {
            ctx.check("restrict " + label_of(h.relation()),
                      [&] { return halfspace_by_complement(restrict(h.relation(), ElementSet(b))); });
        }
    }
}

inline void suite_roundtrip(SuiteContext& ctx, std::size_t n) {
    for (std::size_t m = 0; m <= n; ++m) {
        for (const auto& q : enumerate_quasiorders(m)) {
            if (!halfspace_by_complement(q.relation())) {
                continue;
            }
            ctx.check("decompose " + label_of(q.relation()), [&] {
                HalfSpace h(q);
                BoxDecomposition d = box_decomposition(h);
                if (reconstruct_from_boxes(d) != h) {
                    return false;
                }
                // The complement has the boxes reversed with flags flipped.
                BoxDecomposition c = box_decomposition(complement_halfspace(h));
                if (c.boxes().size() != d.boxes().size()) {
                    return false;
                }
                for (std::size_t i = 0; i < d.boxes().size(); ++i) {
                    const Box& a = d.boxes()[i];
                    const Box& b = c.boxes()[d.boxes().size() - 1 - i];
                    BoxKind flipped = a.members.size() > 1 && a.kind == BoxKind::empty ? BoxKind::full : BoxKind::empty;
                    if (a.members != b.members || b.kind != flipped) {
                        return false;
                    }
                }
                return true;
            });
        }
        for_each_box_decomposition(m, [&](const BoxDecomposition& d) {
            ctx.check("reconstruct on " + std::to_string(m),
                      [&] { return box_decomposition(reconstruct_from_boxes(d)) == d; });
        });
    }
}

inline void suite_standard_realizers(SuiteContext& ctx) {
    for (const auto& q : quasiorders_up_to(4)) {
        QuotientMap quotient = induced_order(q);
        auto all = linear_extensions(quotient.induced());
        auto least = order_dimension(quotient.induced()).witness;
        for (const auto* linext : {&all, &least}) {
            ctx.check(label_of(q.relation()), [&] {
                return is_halfspace_realizer(halfspace_realizer_from_linear_realizer(q, *linext), q.relation());
            });
        }
    }
}

// --- extensions -----------------------------------------------------------

inline bool tighten_holds(const Quasiorder& g, const HalfSpace& a, const LinearOrder& r) {
    HalfSpace t = tighten_halfspace(g, a, r);
    const Relation& tau = t.relation();
    const Relation& gam = g.relation();
    return halfspace_by_complement(tau) && gam.subset_of(tau) && tau.subset_of(a.relation()) &&
           (tau & tau.inverse()) == (gam & gam.inverse());
}

inline bool linearize_holds(const HalfSpace& a, const LinearOrder& lambda) {
    LinearOrder up = linearize_halfspace(a, lambda);
    LinearOrder down = linearize_halfspace(a, inverse(lambda));
    return is_linear_realizer({up, down}, a.relation());
}

inline bool two_linear_holds(const HalfSpace& a, const LinearOrder& seed) {
    auto rep = two_linear_representation(a, seed);
    return is_linear_realizer({rep.first, rep.second}, rep.quotient.induced().relation());
}

inline void suite_tighten_exhaustive(SuiteContext& ctx) {
    for (const auto& g : quasiorders_up_to(3)) {
        auto extensions = linear_extensions(induced_order(g).induced());
        for (const auto& a : enumerate_halfspaces_above(g)) {
            for (const auto& r : extensions) {
                ctx.check(label_of(g.relation()) + " in " + label_of(a.relation()),
                          [&] { return tighten_holds(g, a, r); });
            }
        }
    }
}

inline void suite_linearize_exhaustive(SuiteContext& ctx) {
    for (const auto& a : halfspaces_up_to(4)) {
        if (find_antisymmetry_violation(a.relation())) {
            continue;
        }
        for (const auto& lambda : all_linear_orders(a.size())) {
            ctx.check(label_of(a.relation()), [&] { return linearize_holds(a, lambda); });
        }
    }
}

inline void suite_two_linear(SuiteContext& ctx) {
    for (const auto& a : halfspaces_up_to(4)) {
        std::size_t k = induced_order(a.quasiorder()).class_count();
        for (const auto& seed : all_linear_orders(k)) {
            ctx.check(label_of(a.relation()), [&] { return two_linear_holds(a, seed); });
        }
        ctx.check("dimension of the quotient of " + label_of(a.relation()),
                  [&] { return order_dimension(induced_order(a.quasiorder()).induced()).value <= 2; });
    }
}

/// 4000 instances each of tightening, linearization and the two-order
/// representation, on random inputs with 4 or 5 elements.
inline void suite_extensions_sampled(SuiteContext& ctx) {
    std::vector<std::vector<Quasiorder>> qs{enumerate_quasiorders(4), enumerate_quasiorders(5)};
    std::vector<std::vector<HalfSpace>> hs{enumerate_halfspaces(4), enumerate_halfspaces(5)};
    std::vector<std::vector<HalfSpace>> antisym(2);
    for (std::size_t i = 0; i < 2; ++i) {
        for (const auto& h : hs[i]) {
            if (!find_antisymmetry_violation(h.relation())) {
                antisym[i].push_back(h);
            }
        }
    }
    Sampler& s = ctx.sampler;
    for (int i = 0; i < 4000; ++i) {
        std::size_t which = s.below(2);
        const Quasiorder& g = s.pick(qs[which]);
        auto above = enumerate_halfspaces_above(g);
        const HalfSpace& a = s.pick(above);
        QuotientMap quotient = induced_order(g);
        LinearOrder r = szpilrajn_extension(quotient.induced(), s.linear_order(quotient.class_count()));
        ctx.check("tighten " + label_of(g.relation()), [&] { return tighten_holds(g, a, r); });

        const HalfSpace& b = s.pick(antisym[which]);
        LinearOrder lambda = s.linear_order(b.size());
        ctx.check("linearize " + label_of(b.relation()), [&] { return linearize_holds(b, lambda); });

        const HalfSpace& c = s.pick(hs[which]);
        LinearOrder seed = s.linear_order(induced_order(c.quasiorder()).class_count());
        ctx.check("two orders " + label_of(c.relation()), [&] { return two_linear_holds(c, seed); });
    }
}

inline void suite_szpilrajn_random(SuiteContext& ctx) {
    for (int i = 0; i < 2000; ++i) {
        std::size_t n = 1 + ctx.sampler.below(6);
        PartialOrder p = ctx.sampler.partial_order(n);
        LinearOrder seed = ctx.sampler.linear_order(n);
        ctx.check(label_of(p.relation()), [&] {
            LinearOrder l = szpilrajn_extension(p, seed);
            return is_linear_realizer({l}, l.relation()) && p.relation().subset_of(l.relation());
        });
    }
}

// --- realizer transformations ----------------------------------------------

inline bool transform_holds(const Realizer& r, const LinearOrder& mu, std::size_t i_star) {
    Relation induced = induced_order(r.target()).induced().relation();
    auto a = realizer_to_linear_extensions(r, mu, i_star);
    auto b = realizer_to_linear_extensions_alt(r, mu, i_star);
    auto partial = [](const Relation& x) {
        Properties p = classify(x);
        return p.reflexive && p.transitive && p.antisymmetric;
    };
    for (const auto* t : {&a, &b}) {
        const Relation& rho = t->rho.relation();
        const Relation& theta = t->theta.relation();
        if (!is_linear_realizer(t->orders, induced) || t->orders.size() != r.size() || !partial(rho) ||
            (rho & theta) != Relation::identity(rho.size()) ||
            !compose(theta, rho - Relation::identity(rho.size())).subset_of(rho) ||
            !compose(rho - Relation::identity(rho.size()), theta).subset_of(rho)) {
            return false;
        }
    }
    return true;
}

/// Every realizer of size 2 or 3 drawn from the half-spaces above each
/// partial order on at most 4 elements; at most 500 per poset, chosen by
/// reservoir sampling when there are more.
inline void suite_transform_posets(SuiteContext& ctx) {
    constexpr std::size_t cap = 500;
    for (const auto& p : partial_orders_up_to(4)) {
        auto above = enumerate_halfspaces_above(p);
        std::size_t n = p.size();
        std::vector<std::uint64_t> masks;
        for (const auto& h : above) {
            masks.push_back(h.relation().pair_mask());
        }
        std::uint64_t target = p.relation().pair_mask();
        std::vector<std::vector<std::size_t>> reservoir;
        std::size_t seen = 0;
        auto offer = [&](std::vector<std::size_t> pick) {
            ++seen;
            if (reservoir.size() < cap) {
                reservoir.push_back(std::move(pick));
            } else if (std::size_t slot = ctx.sampler.below(seen); slot < cap) {
                reservoir[slot] = std::move(pick);
            }
        };
        std::size_t m = masks.size();
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                std::uint64_t ij = masks[i] & masks[j];
                if (ij == target) {
                    offer({i, j});
                }
                for (std::size_t k = j + 1; k < m; ++k) {
                    if ((ij & masks[k]) == target) {
                        offer({i, j, k});
                    }
                }
            }
        }
        std::size_t classes = n;
        for (const auto& pick : reservoir) {
            std::vector<HalfSpace> parts;
            for (std::size_t i : pick) {
                parts.push_back(above[i]);
            }
            Realizer r(p, std::move(parts));
            LinearOrder mu = ctx.sampler.linear_order(classes);
            std::size_t i_star = ctx.sampler.below(r.size());
            ctx.check(label_of(p.relation()), [&] { return transform_holds(r, mu, i_star); });
        }
    }
}

/// 1000 random quasiorders on 5 elements, each with a random realizer:
/// half-spaces above it are shuffled and taken until they intersect to it.
inline void suite_transform_random(SuiteContext& ctx) {
    auto qs = enumerate_quasiorders(5);
    Sampler& s = ctx.sampler;
    for (int i = 0; i < 1000; ++i) {
        const Quasiorder& g = s.pick(qs);
        auto above = enumerate_halfspaces_above(g);
        s.shuffle(above);
        std::vector<HalfSpace> parts;
        Relation meet = Relation::full(5);
        for (const auto& h : above) {
            if (meet == g.relation() && parts.size() >= 2) {
                break;
            }
            parts.push_back(h);
            meet = meet & h.relation();
        }
        Realizer r = pad_realizer(Realizer(g, std::move(parts))).first;
        LinearOrder mu = s.linear_order(induced_order(g).class_count());
        std::size_t i_star = s.below(r.size());
        ctx.check(label_of(g.relation()), [&] { return transform_holds(r, mu, i_star); });
    }
}

// --- dimensions -----------------------------------------------------------

inline void suite_quotient_dimension(SuiteContext& ctx) {
    for (const auto& g : quasiorders_up_to(4)) {
        ctx.check(label_of(g.relation()), [&] { return dimension_relation_check(g).holds; });
    }
}

inline void suite_poset_dimension(SuiteContext& ctx) {
    for (const auto& p : partial_orders_up_to(5)) {
        ctx.check(label_of(p.relation()), [&] {
            auto c = dimension_relation_check(p);
            if (!c.order_dim) {
                return false;
            }
            if (c.hs_dim == 1) {
                return *c.order_dim == (c.is_linear ? 1U : 2U) && c.holds;
            }
            return *c.order_dim == c.hs_dim && c.holds;
        });
    }
}

inline void suite_dimension_bounds(SuiteContext& ctx) {
    std::map<Relation, std::size_t> memo;
    auto hs = [&](const Quasiorder& g) {
        auto it = memo.find(g.relation());
        if (it == memo.end()) {
            it = memo.emplace(g.relation(), hs_dimension(g).value).first;
        }
        return it->second;
    };
    for (const auto& g : quasiorders_up_to(4)) {
        ctx.check(label_of(g.relation()), [&] {
            auto report = dimension_report(g);
            bool witnesses = is_halfspace_realizer(report.hs.witness.parts(), g.relation()) &&
                             is_linear_realizer(report.quotient_order.witness, report.quotient.induced().relation());
            bool bound = report.hs.value <= report.quotient_order.value;
            bool one = (report.hs.value == 1) == halfspace_by_complement(g.relation());
            return witnesses && bound && one && hs(g) == report.hs.value;
        });
        for (std::uint64_t b = 1; b < (std::uint64_t{1} << g.size()); ++b) {
            ctx.check("restrict " + label_of(g.relation()),
                      [&] { return hs(restrict(g, ElementSet(b)).order) <= hs(g); });
        }
    }
}

// --- products -------------------------------------------------------------

inline void suite_products(SuiteContext& ctx) {
    auto chain = [](std::size_t n) { return Quasiorder(LinearOrder::natural(n).relation()); };
    ctx.check("2-chain x 2-chain", [&] {
        return product_halfspace_predicate({chain(2), chain(2)}, false).is_halfspace &&
               halfspace_by_complement(direct_product({chain(2), chain(2)}).order.relation());
    });
    ctx.check("2-chain x 3-chain", [&] {
        return !product_halfspace_predicate({chain(2), chain(3)}, false).is_halfspace &&
               !halfspace_by_complement(direct_product({chain(2), chain(3)}).order.relation());
    });
    ctx.check("2-chain x 2-chain x 2-chain", [&] {
        return !product_halfspace_predicate({chain(2), chain(2), chain(2)}, false).is_halfspace &&
               !halfspace_by_complement(direct_product({chain(2), chain(2), chain(2)}).order.relation());
    });

    std::vector<Quasiorder> pool;
    for (std::size_t n = 1; n <= 3; ++n) {
        auto level = enumerate_quasiorders(n);
        pool.insert(pool.end(), level.begin(), level.end());
    }
    std::vector<Quasiorder> factors;
    std::function<void(std::size_t)> grow = [&](std::size_t size) {
        if (!factors.empty()) {
            ctx.check("factors", [&] {
                Product p = direct_product(factors);
                bool direct = halfspace_by_complement(p.order.relation());
                if (product_halfspace_predicate(factors, true).is_halfspace != direct) {
                    return false;
                }
                bool nontrivial = std::none_of(factors.begin(), factors.end(), [](const Quasiorder& f) {
                    return f.relation() == Relation::identity(f.size()) || f.relation() == Relation::full(f.size());
                });
                if (nontrivial && product_halfspace_predicate(factors, false).is_halfspace != direct) {
                    return false;
                }
                auto w = lemma_witnesses(factors);
                if (w.spreading) {
                    const ProductEncoding& e = p.encoding;
                    if (direct || !violates_exchange(p.order.relation(), e.index(w.spreading->a),
                                                     e.index(w.spreading->b), e.index(w.spreading->c))) {
                        return false;
                    }
                }
                if (w.two_boxes) {
                    const ProductEncoding& e = p.encoding;
                    std::size_t a = e.index(w.two_boxes->a);
                    std::size_t b = e.index(w.two_boxes->b);
                    std::size_t c = e.index(w.two_boxes->c);
                    if (a == c || !p.order.contains(a, c) || p.order.contains(a, b)) {
                        return false;
                    }
                }
                return true;
            });
        }
        if (factors.size() == 4) {
            return;
        }
        for (const auto& q : pool) {
            if (size * q.size() > 12) {
                continue;
            }
            factors.push_back(q);
            grow(size * q.size());
            factors.pop_back();
        }
    };
    grow(1);
}

// --- oracle self-checks ---------------------------------------------------

inline void suite_separation(SuiteContext& ctx) {
    auto poset = [](std::initializer_list<Pair> pairs) { return Quasiorder(Relation::from_pairs(4, pairs, true)); };
    ctx.check("crossed pairs cannot be separated", [&] { return verify_separation_counterexample(); });
    ctx.check("one crossed pair can be separated", [&] {
        return !verify_separation_counterexample(poset({{0, 1}, {2, 3}}), poset({{2, 1}}));
    });
    ctx.check("diagonals can be separated",
              [&] { return !verify_separation_counterexample(poset({}), poset({})); });
}

inline void suite_enumeration(SuiteContext& ctx) {
    const std::vector<std::size_t> quasiorder_counts{1, 1, 4, 29, 355, 6942};
    const std::vector<std::size_t> halfspace_counts{1, 1, 4, 20};
    for (std::size_t n = 0; n <= enumeration_max_n; ++n) {
        auto filtered = enumerate_quasiorders(n);
        auto grown = enumerate_quasiorders_by_insertion(n);
        ctx.check("quasiorders on " + std::to_string(n), [&] {
            if (filtered == grown) {
                return filtered.size() == quasiorder_counts[n];
            }
            auto [a, b] = std::mismatch(filtered.begin(), filtered.end(), grown.begin(), grown.end());
            throw InvariantViolation("generators diverge at index " + std::to_string(a - filtered.begin()));
        });
        ctx.check("half-spaces on " + std::to_string(n), [&] {
            std::vector<HalfSpace> by_filter;
            for (const auto& q : filtered) {
                if (halfspace_by_complement(q.relation())) {
                    by_filter.emplace_back(q);
                }
            }
            auto generated = enumerate_halfspaces(n);
            return by_filter == generated && (n >= halfspace_counts.size() || generated.size() == halfspace_counts[n]);
        });
    }
}

struct Suite {
    std::string_view id;
    void (*run)(SuiteContext&);
};

inline const std::vector<Suite>& suites() {
    static const std::vector<Suite> all{
        {"relation-core-n3", suite_relation_core},
        {"prop2.1-complementary-n3", suite_complementary},
        {"prop2.2-equivalence-n3", [](SuiteContext& c) { suite_equivalence(c, 3); }},
        {"prop2.2-equivalence-n4", [](SuiteContext& c) { suite_equivalence(c, 4); }},
        {"prop2.3-induced-n4", suite_induced},
        {"closure-inverse-restrict-n4", suite_closure},
        {"thm2.9-n4", suite_standard_realizers},
        {"thm2.11-roundtrip-n4", [](SuiteContext& c) { suite_roundtrip(c, 4); }},
        {"thm2.11-roundtrip-n5", [](SuiteContext& c) { suite_roundtrip(c, 5); }},
        {"prop2.4-tighten-n3", suite_tighten_exhaustive},
        {"prop2.5-linearize-n4", suite_linearize_exhaustive},
        {"cor2.6-n4", suite_two_linear},
        {"extensions-sampled-n5", suite_extensions_sampled},
        {"szpilrajn-random-n6", suite_szpilrajn_random},
        {"thm2.13-n4", suite_transform_posets},
        {"thm2.13-random-n5", suite_transform_random},
        {"thm2.15-n4", suite_quotient_dimension},
        {"thm2.16-n5", suite_poset_dimension},
        {"cor2.10-n4", suite_dimension_bounds},
        {"thm3.4-products", suite_products},
        {"separation-counterexample", suite_separation},
        {"enumeration-counts", suite_enumeration},
    };
    return all;
}

}  // namespace detail

inline std::vector<std::string> suite_ids() {
    std::vector<std::string> out;
    for (const auto& s : detail::suites()) {
        out.emplace_back(s.id);
    }
    return out;
}

/// Runs a registered suite. Failures are counted, not thrown.
inline SuiteReport theorem_replay(std::string_view suite_id, std::uint64_t seed = default_replay_seed) {
    for (const auto& s : detail::suites()) {
        if (s.id == suite_id) {
            SuiteReport report;
            report.id = std::string(suite_id);
            report.seed = seed;
            detail::SuiteContext ctx(report);
            auto start = std::chrono::steady_clock::now();
            s.run(ctx);
            report.wall_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            return report;
        }
    }
    throw InputError("unknown suite '" + std::string(suite_id) + "'");
}

}  // namespace quord
