#include "skewhad/residue_ring.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace skewhad {

int gcd_int(int a, int b) {
    while (b != 0) {
        int t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

int mul_mod(int n, int a, int b) {
    return static_cast<int>((static_cast<std::int64_t>(a) * b) % n);
}

int unit_group_order(int n) {
    if (n < 1) throw Error("modulus must be >= 1");
    int result = n;
    int x = n;
    for (int p = 2; static_cast<std::int64_t>(p) * p <= x; ++p) {
        if (x % p == 0) {
            while (x % p == 0) x /= p;
            result -= result / p;
        }
    }
    if (x > 1) result -= result / x;
    return result;
}

bool Subgroup::contains(int x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
}

Subgroup Subgroup::cyclic(int n, int generator) {
    if (n < 1) throw Error("modulus must be >= 1");
    int g = ((generator % n) + n) % n;
    if (gcd_int(g == 0 ? n : g, n) != 1)
        throw NotAUnit("generator " + std::to_string(generator) +
                       " is not a unit mod " + std::to_string(n));
    Subgroup h;
    h.n = n;
    int identity = 1 % n;
    h.elements.push_back(identity);
    int x = g;
    while (x != identity) {
        h.elements.push_back(x);
        x = mul_mod(n, x, g);
    }
    std::sort(h.elements.begin(), h.elements.end());
    return h;
}

Subgroup Subgroup::from_elements(int n, std::vector<int> elements) {
    if (n < 1) throw Error("modulus must be >= 1");
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty()) throw Error("subgroup cannot be empty");
    for (int e : elements) {
        if (e < 0 || e >= n) throw Error("subgroup element out of range");
        if (gcd_int(e == 0 ? n : e, n) != 1)
            throw NotAUnit("subgroup element " + std::to_string(e) +
                           " is not a unit mod " + std::to_string(n));
    }
    Subgroup h;
    h.n = n;
    h.elements = std::move(elements);
    if (!h.contains(1 % n)) throw Error("subgroup must contain the identity");
    for (int a : h.elements)
        for (int b : h.elements)
            if (!h.contains(mul_mod(n, a, b)))
                throw Error("element set is not closed under multiplication");
    return h;
}

std::vector<int> elements_of_order(int n, int d) {
    if (d < 1) throw Error("order must be >= 1");
    int phi = unit_group_order(n);
    if (phi % d != 0) return {};
    // divisors of phi, ascending; the order of any unit is the least one
    // whose power hits the identity
    std::vector<int> divisors;
    for (int q = 1; static_cast<std::int64_t>(q) * q <= phi; ++q) {
        if (phi % q == 0) {
            divisors.push_back(q);
            if (q != phi / q) divisors.push_back(phi / q);
        }
    }
    std::sort(divisors.begin(), divisors.end());

    auto pow_mod = [n](int base, int e) {
        std::int64_t r = 1 % n, b = base;
        while (e > 0) {
            if (e & 1) r = (r * b) % n;
            b = (b * b) % n;
            e >>= 1;
        }
        return static_cast<int>(r);
    };

    std::vector<int> out;
    int identity = 1 % n;
    for (int u = 0; u < n; ++u) {
        if (gcd_int(u == 0 ? n : u, n) != 1) continue;
        for (int q : divisors) {
            if (pow_mod(u, q) == identity) {
                if (q == d) out.push_back(u);
                break;
            }
        }
    }
    return out;
}

std::vector<std::vector<int>> orbits_of(int n, const Subgroup& h) {
    if (h.n != n) throw ModulusMismatch("subgroup modulus differs");
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> orbits;
    for (int x = 0; x < n; ++x) {
        if (seen[x]) continue;
        std::vector<int> orb;
        for (int e : h.elements) {
            int y = mul_mod(n, x, e);
            if (!seen[y]) {
                seen[y] = 1;
                orb.push_back(y);
            }
        }
        std::sort(orb.begin(), orb.end());
        orbits.push_back(std::move(orb));
    }
    return orbits; // first-seen order == ascending smallest element
}

const std::vector<int>& OrbitIndexing::orbit(int i) const {
    if (i < 0 || i >= orbit_count())
        throw IndexOutOfRange("orbit index " + std::to_string(i) +
                              " out of range (have " +
                              std::to_string(orbit_count()) + ")");
    return orbits[static_cast<std::size_t>(i)];
}

OrbitIndexing paired_indexing(int n, const Subgroup& h, OrbitOrder order) {
    if (h.n != n) throw ModulusMismatch("subgroup modulus differs");
    OrbitIndexing idx;
    idx.n = n;
    idx.subgroup = h;
    idx.order_rule = order;
    idx.orbit_index_of.assign(n, -1);

    std::vector<char> used(n, 0);
    used[0] = 1;

    auto take = [&](int x) {
        std::vector<int> orb;
        for (int e : h.elements) orb.push_back(mul_mod(n, x, e));
        std::sort(orb.begin(), orb.end());
        orb.erase(std::unique(orb.begin(), orb.end()), orb.end());
        std::vector<int> neg;
        neg.reserve(orb.size());
        for (int e : orb) neg.push_back((n - e) % n);
        std::sort(neg.begin(), neg.end());
        if (neg == orb)
            throw SelfNegativeOrbit("orbit of " + std::to_string(x) + " mod " +
                                    std::to_string(n) + " is its own negation");
        int even = static_cast<int>(idx.orbits.size());
        for (int e : orb) {
            used[e] = 1;
            idx.orbit_index_of[e] = even;
        }
        for (int e : neg) {
            used[e] = 1;
            idx.orbit_index_of[e] = even + 1;
        }
        idx.orbits.push_back(std::move(orb));
        idx.orbits.push_back(std::move(neg));
    };

    if (order == OrbitOrder::ascending) {
        for (int x = 1; x < n; ++x)
            if (!used[x]) take(x);
    } else {
        for (int x = 1; x < n; ++x)
            if (!used[x] && gcd_int(x, n) == 1) take(x);
        for (int x = 1; x < n; ++x)
            if (!used[x]) take(x);
    }
    return idx;
}

} // namespace skewhad
