#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "skewhad/difference_family.hpp"

// Dense {+1,-1} vectors and matrices. Matrix entries are bit-packed, one bit
// per entry with +1 <-> 0, so a row-pair inner product is order - 2*popcount
// of the XOR of the rows. A plain byte-array implementation of the same
// checks lives in reference.hpp and is used for differential tests and the
// benchmark.

namespace skewhad {

class SignVector {
public:
    SignVector() = default;
    explicit SignVector(int n, int fill = +1);

    int size() const { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    void set(int i, int value); // value must be +1 or -1
    bool operator==(const SignVector&) const = default;

private:
    std::vector<std::int8_t> entries_;
};

// Entry i is -1 exactly when i is in the block.
SignVector encode(const Block& b);

// Periodic autocorrelation: paf(a)[s] = sum_j a[j] * a[(j+s) mod n].
std::vector<long long> paf(const SignVector& a);

class SignMatrix {
public:
    SignMatrix() = default;
    explicit SignMatrix(int order); // all +1

    int order() const { return order_; }
    int get(int r, int c) const {
        const std::uint64_t w =
            bits_[static_cast<std::size_t>(r) * words_ + (static_cast<unsigned>(c) >> 6)];
        return (w >> (static_cast<unsigned>(c) & 63u)) & 1u ? -1 : +1;
    }
    void set(int r, int c, int value);

    // order - 2*popcount(row_r XOR row_s)
    int row_dot(int r, int s) const;

    bool operator==(const SignMatrix&) const = default;

private:
    int order_ = 0;
    std::size_t words_ = 0; // per row
    std::vector<std::uint64_t> bits_;
};

// The n x n circulant with the given first row: entry (r, c) = row[(c-r) mod n].
SignMatrix circulant(const SignVector& first_row);

// The back-diagonal (reversal) permutation: perm[i] = n-1-i. Self-inverse.
// Never materialized as a matrix; applying it on the right reverses columns.
std::vector<int> back_diagonal(int n);

// M * R, i.e. column order reversed.
SignMatrix reverse_columns(const SignMatrix& m);

// The 4n x 4n array
//   [  P1    P2R    P3R    P4R  ]
//   [ -P2R   P1    -P4'R   P3'R ]
//   [ -P3R   P4'R   P1    -P2'R ]
//   [ -P4R  -P3'R   P2'R   P1   ]
// (' = transpose). All four inputs must share an order.
SignMatrix goethals_seidel(const SignMatrix& p1, const SignMatrix& p2,
                           const SignMatrix& p3, const SignMatrix& p4);

// A * A' == order * I, checked row-pair-wise with early exit.
// Parallelized over row pairs when built with OpenMP.
bool verify_hadamard(const SignMatrix& a);

// Diagonal all +1 and a(r,c) == -a(c,r) off the diagonal.
bool verify_skew(const SignMatrix& a);

// Fast SDS-side Hadamard check: the sum over blocks of the PAFs of the
// encoded rows vanishes at every nonzero shift. Equivalent to
// verify_hadamard(goethals_seidel(circulants)) for circulant inputs.
bool paf_verify(const std::array<Block, 4>& blocks);

} // namespace skewhad
