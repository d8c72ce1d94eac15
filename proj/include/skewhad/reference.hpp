#pragma once

#include <cstdint>
#include <vector>

#include "skewhad/sign_matrix.hpp"

// Serial byte-array reference kernels. These deliberately stay naive (one
// int8 per entry, straight triple loops, no threads) so the bit-packed
// OpenMP paths in sign_matrix.cpp can be differential-tested and benchmarked
// against them.

namespace skewhad::ref {

struct ByteMatrix {
    int order = 0;
    std::vector<std::int8_t> entries; // row-major, +1/-1

    int get(int r, int c) const {
        return entries[static_cast<std::size_t>(r) * static_cast<std::size_t>(order) +
                       static_cast<std::size_t>(c)];
    }
    void set(int r, int c, int value) {
        entries[static_cast<std::size_t>(r) * static_cast<std::size_t>(order) +
                static_cast<std::size_t>(c)] = static_cast<std::int8_t>(value);
    }
};

ByteMatrix from_packed(const SignMatrix& m);

// Full O(m^3) product check: A * A' == order * I.
bool verify_hadamard(const ByteMatrix& a);

bool verify_skew(const ByteMatrix& a);

} // namespace skewhad::ref
