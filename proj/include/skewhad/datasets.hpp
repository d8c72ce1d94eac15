#pragma once

#include <string_view>

#include "skewhad/sds_io.hpp"

// The six bundled reference cases: two supplementary difference sets on each
// of Z_109, Z_145 and Z_247 whose Goethals-Seidel matrices are the
// skew-Hadamard matrices of orders 436, 580 and 988. Each case carries both
// its orbit index sets and the explicit element lists; self_check() asserts
// the two agree, which guards the tables against transcription slips.

namespace skewhad {

struct ReferenceCase {
    std::string_view id; // "109A", "109B", "145A", "145B", "247A", "247B"
    int v;
    int subgroup_generator;
    OrbitOrder orbit_order;
    int lambda;
    std::array<int, 4> cardinals;
    std::array<int, 4> square_decomposition; // 4v = sum of these squared
    std::vector<int> subgroup;
    std::array<std::vector<int>, 4> index_sets;
    std::array<std::vector<int>, 4> blocks;
};

const std::vector<ReferenceCase>& reference_cases();
const ReferenceCase* find_case(std::string_view id); // nullptr if unknown

// Expands every case's index sets and compares against the stored explicit
// blocks (and the generator against the stored subgroup). Throws on any
// mismatch. Cheap; the CLI runs it at startup.
void self_check();

OrbitIndexing case_indexing(const ReferenceCase& c);
SdsQuadruple case_quadruple(const ReferenceCase& c);
SdsDocument to_sds_document(const ReferenceCase& c, bool orbit_form);

} // namespace skewhad
