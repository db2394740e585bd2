// Small tour of the library on the four-element order M2.

#include <iostream>

#include "quord/quord.hpp"

int main() {
    using namespace quord;

    // bot < a, b < top with a and b incomparable.
    LabeledRelation m2 = parse_relation(R"(elements: bot a b top
bot a
bot b
bot top
a top
b top
)");
    PartialOrder order(m2.relation);

    HalfSpace h(order);
    std::cout << "boxes: " << format_boxes(box_decomposition(h), m2.labels) << "\n";
    std::cout << "complement:\n" << format_relation({m2.labels, complement_halfspace(h).relation()});

    std::cout << "hs-dim: " << hs_dimension(order).value << "\n";
    auto dim = order_dimension(order);
    std::cout << "dim: " << dim.value << "\n";
    for (const auto& l : dim.witness) {
        std::cout << "  " << format_chain(l, m2.labels) << "\n";
    }
    return 0;
}
