#pragma once

#include <array>
#include <vector>

#include "skewhad/residue_ring.hpp"

// Blocks (subsets of Z_v), orbit index sets, supplementary difference sets,
// and their exhaustive verification. A quadruple of blocks is a
// 4-(v; k1..k4; lambda) SDS when every nonzero residue s occurs exactly
// lambda times among ordered within-block differences a - a', summed over
// the four blocks.

namespace skewhad {

struct Block {
    int n = 1;
    std::vector<int> elements; // sorted, distinct, in [0, n)

    int size() const { return static_cast<int>(elements.size()); }
    bool contains(int x) const;
    bool operator==(const Block&) const = default;

    // Sorts, checks range and distinctness.
    static Block of(int n, std::vector<int> elements);
};

using IndexSet = std::vector<int>; // sorted orbit indices

// Union of the named orbits.
Block expand(const OrbitIndexing& indexing, const IndexSet& indices);

// counts[s] = number of ordered pairs (a, a') with a != a', a - a' = s mod n,
// summed over blocks. counts[0] is always 0. All blocks must share a modulus.
std::vector<int> difference_counts(const std::vector<Block>& blocks);

struct SdsQuadruple {
    int v = 1;
    std::array<Block, 4> blocks;
    int lambda = 0;

    std::array<int, 4> cardinals() const;
};

struct VerificationReport {
    bool pass = false;
    int first_offending_residue = 0; // 0 when pass
    int observed_count = 0;          // count at that residue
    std::vector<int> counts;         // full table, only when requested
};

// Pass iff the difference table is constant and equal to q.lambda.
VerificationReport verify_sds(const SdsQuadruple& q, bool with_table = false);

// X is of skew type when X and -X are disjoint and cover Z_n \ {0}.
bool is_skew_type(const Block& b);

// Index-level counterpart: exactly one of {2i, 2i+1} present for each pair.
bool index_set_is_skew(const IndexSet& indices, int pair_count);

struct ParameterReport {
    bool counting_identity = false; // sum k_i(k_i-1) = lambda(v-1)
    bool lambda_relation = false;   // lambda = sum k_i - v
    std::array<int, 4> residuals{}; // v - 2 k_i
    long long square_sum = 0;
    bool sum_of_squares = false;    // square_sum == 4v
};

ParameterReport parameter_identities(const SdsQuadruple& q);

} // namespace skewhad
