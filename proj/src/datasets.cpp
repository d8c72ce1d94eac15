#include "skewhad/datasets.hpp"

namespace skewhad {

#include "datasets_tables.inc"

const std::vector<ReferenceCase>& reference_cases() {
    static const std::vector<ReferenceCase> cases = make_reference_cases();
    return cases;
}

const ReferenceCase* find_case(std::string_view id) {
    for (const ReferenceCase& c : reference_cases())
        if (c.id == id) return &c;
    return nullptr;
}

OrbitIndexing case_indexing(const ReferenceCase& c) {
    Subgroup h = Subgroup::cyclic(c.v, c.subgroup_generator);
    return paired_indexing(c.v, h, c.orbit_order);
}

SdsQuadruple case_quadruple(const ReferenceCase& c) {
    SdsQuadruple q;
    q.v = c.v;
    q.lambda = c.lambda;
    for (int b = 0; b < 4; ++b)
        q.blocks[static_cast<std::size_t>(b)] =
            Block::of(c.v, c.blocks[static_cast<std::size_t>(b)]);
    return q;
}

void self_check() {
    for (const ReferenceCase& c : reference_cases()) {
        Subgroup h = Subgroup::cyclic(c.v, c.subgroup_generator);
        if (h.elements != c.subgroup)
            throw Error(std::string(c.id) + ": generator does not produce the stored subgroup");
        OrbitIndexing idx = paired_indexing(c.v, h, c.orbit_order);
        for (int b = 0; b < 4; ++b) {
            Block expanded = expand(idx, c.index_sets[static_cast<std::size_t>(b)]);
            if (expanded.elements != c.blocks[static_cast<std::size_t>(b)])
                throw Error(std::string(c.id) + ": index set " + std::to_string(b + 1) +
                            " does not expand to the stored block");
            if (expanded.size() != c.cardinals[static_cast<std::size_t>(b)])
                throw Error(std::string(c.id) + ": stored cardinal mismatch");
        }
    }
}

SdsDocument to_sds_document(const ReferenceCase& c, bool orbit_form) {
    SdsDocument doc;
    doc.v = c.v;
    doc.lambda = c.lambda;
    doc.subgroup = c.subgroup;
    // the indexing rule only matters when orbit indices are on the wire
    doc.orbit_order = orbit_form ? c.orbit_order : OrbitOrder::ascending;
    for (int b = 0; b < 4; ++b) {
        SdsEntry& entry = doc.entries[static_cast<std::size_t>(b)];
        entry.orbit_form = orbit_form;
        entry.values = orbit_form ? c.index_sets[static_cast<std::size_t>(b)]
                                  : c.blocks[static_cast<std::size_t>(b)];
    }
    doc.skew_flag = true;
    return doc;
}

} // namespace skewhad
