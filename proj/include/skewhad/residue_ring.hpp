#pragma once

#include <vector>

#include "skewhad/errors.hpp"

// Arithmetic in Z_n, multiplicative subgroups of its unit group, and the
// negation-paired enumeration of the nonzero H-orbits that everything else
// (blocks-as-orbit-unions, skew index sets, the search space) is built on.

namespace skewhad {

int mul_mod(int n, int a, int b);
int gcd_int(int a, int b);

// Euler's totient, by trial division. Fine for the intended n < 10^6.
int unit_group_order(int n);

struct Subgroup {
    int n = 1;
    std::vector<int> elements; // sorted, closed under multiplication mod n

    int order() const { return static_cast<int>(elements.size()); }
    bool contains(int x) const;

    // {g^k mod n}; throws NotAUnit unless gcd(g, n) = 1.
    static Subgroup cyclic(int n, int generator);
    // Validates closure, unit-ness and presence of the identity.
    static Subgroup from_elements(int n, std::vector<int> elements);
};

// All units of multiplicative order exactly d, ascending.
std::vector<int> elements_of_order(int n, int d);

// Orbits of H acting on Z_n by multiplication, {0} included,
// ordered by smallest element.
std::vector<std::vector<int>> orbits_of(int n, const Subgroup& h);

// Which element supplies the representative of the next even-index orbit.
// `ascending` scans all of Z_n \ {0}; `units_first` exhausts the unit orbits
// before the non-unit ones. Both appear in the bundled reference tables.
enum class OrbitOrder { ascending, units_first };

// Nonzero orbits listed so that orbit 2i+1 is the elementwise negation of
// orbit 2i. Orbit 0 is always H itself.
struct OrbitIndexing {
    int n = 1;
    Subgroup subgroup;
    OrbitOrder order_rule = OrbitOrder::ascending;
    std::vector<std::vector<int>> orbits;
    std::vector<int> orbit_index_of; // size n; orbit_index_of[0] == -1

    int orbit_count() const { return static_cast<int>(orbits.size()); }
    int pair_count() const { return orbit_count() / 2; }
    const std::vector<int>& orbit(int i) const;
};

// Throws SelfNegativeOrbit when some orbit contains its own negation
// (equivalently, -1 lies in the effective stabilizer).
OrbitIndexing paired_indexing(int n, const Subgroup& h,
                              OrbitOrder order = OrbitOrder::ascending);

} // namespace skewhad
