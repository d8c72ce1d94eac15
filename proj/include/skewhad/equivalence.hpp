#pragma once

#include <optional>

#include "skewhad/difference_family.hpp"

// Equivalence of blocks under the affine maps x -> m*x + t with m a unit.
// The scan is exhaustive over all phi(n)*n maps, so a `nullopt` answer is a
// proof of non-equivalence.

namespace skewhad {

struct AffineMap {
    int n = 1;
    int multiplier = 1; // unit of Z_n
    int translation = 0;

    bool operator==(const AffineMap&) const = default;
};

// { (m*x + t) mod n : x in b }, sorted. Cardinality is preserved.
Block apply(const AffineMap& map, const Block& b);

// Smallest (multiplier, translation) in lexicographic order with
// apply(map, x) == y, or nullopt when no affine map works.
// Split over multiplier ranges when built with OpenMP.
std::optional<AffineMap> find_equivalence(const Block& x, const Block& y);

} // namespace skewhad
