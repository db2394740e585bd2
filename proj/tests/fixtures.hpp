#pragma once

#include <quord/quord.hpp>

namespace fixtures {

using quord::Element;
using quord::Quasiorder;
using quord::Relation;

// M2 with ids bot=0, a=1, b=2, top=3.
inline constexpr Element bot = 0;
inline constexpr Element a = 1;
inline constexpr Element b = 2;
inline constexpr Element top = 3;

inline Relation m2_relation() {
    return Relation::from_pairs(4, {{bot, a}, {bot, b}, {a, top}, {b, top}, {bot, top}}, true);
}

inline Quasiorder m2() { return Quasiorder(m2_relation()); }

inline Quasiorder chain(std::size_t n) { return quord::LinearOrder::natural(n).quasiorder(); }

// Standard example S3: a_i < b_j for i != j; a_i = i, b_j = 3 + j.
inline Quasiorder s3() {
    Relation r = Relation::identity(6);
    for (Element i = 0; i < 3; ++i) {
        for (Element j = 0; j < 3; ++j) {
            if (i != j) {
                r.insert(i, 3 + j);
            }
        }
    }
    return Quasiorder(r);
}

// 0 < 1 with 2 isolated.
inline Quasiorder vee() { return Quasiorder(Relation::from_pairs(3, {{0, 1}}, true)); }

}  // namespace fixtures
