#pragma once

#include <iosfwd>

#include "skewhad/sign_matrix.hpp"

// Two matrix encodings:
//  * text: "hadamard order=<m>\n" then m lines of m characters from {+,-},
//    no trailing spaces;
//  * binary: magic "HADB1", u32 little-endian order, then ceil(m^2/8) bytes
//    of row-major bits, LSB first within each byte, set bit == -1.

namespace skewhad {

void write_matrix_text(std::ostream& out, const SignMatrix& m);
SignMatrix read_matrix_text(std::istream& in);

void write_matrix_binary(std::ostream& out, const SignMatrix& m);
SignMatrix read_matrix_binary(std::istream& in);

// Dispatches on the leading bytes ("HADB1" vs "hadamard").
SignMatrix read_matrix_auto(std::istream& in);

} // namespace skewhad
