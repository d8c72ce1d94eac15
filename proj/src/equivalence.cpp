#include "skewhad/equivalence.hpp"

#include <algorithm>

namespace skewhad {

Block apply(const AffineMap& map, const Block& b) {
    if (map.n != b.n) throw ModulusMismatch("map and block moduli differ");
    if (map.n > 1 &&
        gcd_int(map.multiplier == 0 ? map.n : map.multiplier, map.n) != 1)
        throw NotAUnit("multiplier " + std::to_string(map.multiplier) +
                       " is not a unit mod " + std::to_string(map.n));
    std::vector<int> out;
    out.reserve(b.elements.size());
    for (int x : b.elements) {
        long long y = (static_cast<long long>(map.multiplier) * x + map.translation) % map.n;
        out.push_back(static_cast<int>((y + map.n) % map.n));
    }
    std::sort(out.begin(), out.end());
    Block mapped;
    mapped.n = b.n;
    mapped.elements = std::move(out);
    return mapped;
}

std::optional<AffineMap> find_equivalence(const Block& x, const Block& y) {
    if (x.n != y.n) throw ModulusMismatch("blocks use different moduli");
    const int n = x.n;
    if (x.size() != y.size()) return std::nullopt;
    if (n == 1) return AffineMap{1, 0, 0}; // equal sizes force x == y here

    std::vector<char> in_y(static_cast<std::size_t>(n), 0);
    for (int e : y.elements) in_y[static_cast<std::size_t>(e)] = 1;

    // Smallest workable translation per multiplier; the lexicographic
    // minimum is then the first multiplier with a hit.
    std::vector<int> found_t(static_cast<std::size_t>(n), -1);
#pragma omp parallel for schedule(dynamic, 8)
    for (int m = 1; m < n; ++m) {
        if (gcd_int(m, n) != 1) continue;
        std::vector<int> mapped(x.elements.size());
        for (std::size_t i = 0; i < x.elements.size(); ++i)
            mapped[i] = mul_mod(n, m, x.elements[i]);
        for (int t = 0; t < n; ++t) {
            bool all_in = true;
            for (int e : mapped) {
                int shifted = e + t;
                if (shifted >= n) shifted -= n;
                if (!in_y[static_cast<std::size_t>(shifted)]) {
                    all_in = false;
                    break;
                }
            }
            if (all_in) { // equal sizes, so subset means equality
                found_t[static_cast<std::size_t>(m)] = t;
                break;
            }
        }
    }
    for (int m = 1; m < n; ++m)
        if (found_t[static_cast<std::size_t>(m)] >= 0)
            return AffineMap{n, m, found_t[static_cast<std::size_t>(m)]};
    return std::nullopt;
}

} // namespace skewhad
