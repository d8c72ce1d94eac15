#pragma once

#include <array>
#include <iosfwd>
#include <optional>

#include "skewhad/difference_family.hpp"

// Line-oriented SDS text format, '#' starts a comment:
//
//   sds v=<n> lambda=<lambda>
//   H <elements...>              (optional; required for orbit lines)
//   indexing <ascending|units-first>   (optional; default ascending)
//   block <elements...>          (x4; or `orbits <indices...>`)
//   skew 1                       (optional; asserts block 1 is skew type)
//
// Reading then writing reproduces the input up to whitespace and comments;
// a stream may hold several documents back to back.

namespace skewhad {

struct SdsEntry {
    bool orbit_form = false;
    std::vector<int> values; // residues, or orbit indices
    bool operator==(const SdsEntry&) const = default;
};

struct SdsDocument {
    int v = 1;
    int lambda = 0;
    std::optional<std::vector<int>> subgroup; // H elements
    OrbitOrder orbit_order = OrbitOrder::ascending;
    std::array<SdsEntry, 4> entries;
    bool skew_flag = false;

    bool operator==(const SdsDocument&) const = default;
};

// Consumes exactly one document. Throws ParseError on malformed input
// (including an empty stream).
SdsDocument read_sds(std::istream& in);
void write_sds(std::ostream& out, const SdsDocument& doc);

// Resolves orbit-form entries through the subgroup's paired indexing.
SdsQuadruple resolve(const SdsDocument& doc);

// Same document with every entry in explicit element form.
SdsDocument expand_document(const SdsDocument& doc);

} // namespace skewhad
