#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quord/relation.hpp"

namespace quord::detail {

// Pair sets are either packed words (n <= 8, n*n <= 64 bits) or full
// relations. The search below is written once against these four helpers.

inline std::uint64_t mask_and(std::uint64_t a, std::uint64_t b) { return a & b; }
inline std::uint64_t mask_or(std::uint64_t a, std::uint64_t b) { return a | b; }
inline std::uint64_t mask_minus(std::uint64_t a, std::uint64_t b) { return a & ~b; }
inline bool mask_empty(std::uint64_t a) { return a == 0; }

inline Relation mask_and(const Relation& a, const Relation& b) { return a & b; }
inline Relation mask_or(const Relation& a, const Relation& b) { return a | b; }
inline Relation mask_minus(const Relation& a, const Relation& b) { return a - b; }
inline bool mask_empty(const Relation& a) { return a.pair_count() == 0; }

/// Lexicographically least k-subset (as ascending index lists) of
/// `candidates` whose intersection is `target`. Every candidate must
/// contain `target`.
///
/// Pruning: a pick that removes nothing is skipped (it cannot occur in a
/// witness of minimal size, and callers only ask for k after k-1 failed),
/// and a branch stops once the pairs still to be removed are not all
/// removed by some candidate further along the list.
template <typename Mask>
class CombinationSearch {
public:
    CombinationSearch(const std::vector<Mask>& candidates, Mask target, Mask universe)
        : candidates_(candidates), target_(std::move(target)), universe_(std::move(universe)) {
        std::size_t m = candidates_.size();
        suffix_removable_.assign(m + 1, mask_minus(universe_, universe_));
        for (std::size_t i = m; i-- > 0;) {
            suffix_removable_[i] = mask_or(suffix_removable_[i + 1], mask_minus(universe_, candidates_[i]));
        }
    }

    std::optional<std::vector<std::size_t>> find(std::size_t k) {
        chosen_.clear();
        if (k == 0) {
            return std::nullopt;
        }
        if (k == 1) {
            for (std::size_t i = 0; i < candidates_.size(); ++i) {
                if (candidates_[i] == target_) {
                    return std::vector<std::size_t>{i};
                }
            }
            return std::nullopt;
        }
        if (dfs(0, k, universe_)) {
            return chosen_;
        }
        return std::nullopt;
    }

    /// Smallest k with a witness, and the least witness of that size.
    std::optional<std::vector<std::size_t>> find_minimal() {
        for (std::size_t k = 1; k <= candidates_.size(); ++k) {
            if (auto w = find(k)) {
                return w;
            }
        }
        return std::nullopt;
    }

private:
    bool dfs(std::size_t start, std::size_t remaining, const Mask& current) {
        Mask uncovered = mask_minus(current, target_);
        std::size_t m = candidates_.size();
        for (std::size_t i = start; i + remaining <= m; ++i) {
            if (!mask_empty(mask_minus(uncovered, suffix_removable_[i]))) {
                break;
            }
            Mask next = mask_and(current, candidates_[i]);
            if (next == current) {
                continue;
            }
            chosen_.push_back(i);
            if (remaining == 1) {
                if (mask_empty(mask_minus(next, target_))) {
                    return true;
                }
            } else if (dfs(i + 1, remaining - 1, next)) {
                return true;
            }
            chosen_.pop_back();
        }
        return false;
    }

    const std::vector<Mask>& candidates_;
    Mask target_;
    Mask universe_;
    std::vector<Mask> suffix_removable_;
    std::vector<std::size_t> chosen_;
};

/// Dispatches to packed words when the ground set allows it.
inline std::optional<std::vector<std::size_t>> least_minimal_realizer(const std::vector<Relation>& candidates,
                                                                      const Relation& target) {
    std::size_t n = target.size();
    if (n <= 8) {
        std::vector<std::uint64_t> masks;
        masks.reserve(candidates.size());
        for (const auto& c : candidates) {
            masks.push_back(c.pair_mask());
        }
        CombinationSearch<std::uint64_t> search(masks, target.pair_mask(), low_bits(n * n));
        return search.find_minimal();
    }
    CombinationSearch<Relation> search(candidates, target, Relation::full(n));
    return search.find_minimal();
}

}  // namespace quord::detail
