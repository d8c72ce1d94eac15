#include "skewhad/sds_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace skewhad {

namespace {

// next non-blank line with comments stripped; false at end of stream
bool next_line(std::istream& in, std::string& out) {
    std::string line;
    while (std::getline(in, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream probe(line);
        std::string token;
        if (probe >> token) {
            out = line;
            return true;
        }
    }
    return false;
}

std::vector<int> parse_ints(std::istringstream& in, const char* what) {
    std::vector<int> out;
    std::string token;
    while (in >> token) {
        try {
            std::size_t used = 0;
            int value = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            out.push_back(value);
        } catch (const std::exception&) {
            throw ParseError(std::string("bad ") + what + " value '" + token + "'");
        }
    }
    return out;
}

} // namespace

SdsDocument read_sds(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) throw ParseError("empty input, expected 'sds' header");
    std::istringstream header(line);
    std::string keyword;
    header >> keyword;
    if (keyword != "sds")
        throw ParseError("expected 'sds' header, got '" + keyword + "'");

    SdsDocument doc;
    bool have_v = false, have_lambda = false;
    std::string field;
    while (header >> field) {
        std::size_t eq = field.find('=');
        if (eq == std::string::npos)
            throw ParseError("bad header field '" + field + "'");
        std::string key = field.substr(0, eq);
        std::string value = field.substr(eq + 1);
        int number;
        try {
            number = std::stoi(value);
        } catch (const std::exception&) {
            throw ParseError("bad header value '" + field + "'");
        }
        if (key == "v") {
            doc.v = number;
            have_v = true;
        } else if (key == "lambda") {
            doc.lambda = number;
            have_lambda = true;
        } else {
            throw ParseError("unknown header field '" + key + "'");
        }
    }
    if (!have_v || !have_lambda)
        throw ParseError("header needs both v= and lambda=");
    if (doc.v < 1) throw ParseError("v must be >= 1");

    int entries_read = 0;
    while (entries_read < 4) {
        if (!next_line(in, line))
            throw ParseError("expected 4 block/orbits lines, got " +
                             std::to_string(entries_read));
        std::istringstream fields(line);
        fields >> keyword;
        if (keyword == "H") {
            if (doc.subgroup) throw ParseError("duplicate H line");
            if (entries_read > 0) throw ParseError("H must precede the blocks");
            doc.subgroup = parse_ints(fields, "subgroup");
        } else if (keyword == "indexing") {
            std::string rule;
            fields >> rule;
            if (rule == "ascending")
                doc.orbit_order = OrbitOrder::ascending;
            else if (rule == "units-first")
                doc.orbit_order = OrbitOrder::units_first;
            else
                throw ParseError("unknown indexing rule '" + rule + "'");
        } else if (keyword == "block" || keyword == "orbits") {
            SdsEntry& entry = doc.entries[static_cast<std::size_t>(entries_read)];
            entry.orbit_form = keyword == "orbits";
            entry.values = parse_ints(fields, keyword.c_str());
            ++entries_read;
        } else {
            throw ParseError("unexpected line '" + keyword + "'");
        }
    }

    // optional trailing skew marker; stop before a following document
    std::streampos before = in.tellg();
    if (next_line(in, line)) {
        std::istringstream fields(line);
        fields >> keyword;
        if (keyword == "skew") {
            int flag = 0;
            fields >> flag;
            doc.skew_flag = flag != 0;
        } else if (keyword == "sds") {
            in.clear();
            in.seekg(before);
        } else {
            throw ParseError("unexpected trailing line '" + keyword + "'");
        }
    } else {
        in.clear(); // plain end of stream is fine
    }

    bool any_orbit_form = false;
    for (const SdsEntry& e : doc.entries) any_orbit_form |= e.orbit_form;
    if (any_orbit_form && !doc.subgroup)
        throw ParseError("orbit-form blocks need an H line");
    return doc;
}

void write_sds(std::ostream& out, const SdsDocument& doc) {
    out << "sds v=" << doc.v << " lambda=" << doc.lambda << '\n';
    if (doc.subgroup) {
        out << 'H';
        for (int e : *doc.subgroup) out << ' ' << e;
        out << '\n';
    }
    if (doc.orbit_order == OrbitOrder::units_first)
        out << "indexing units-first\n";
    for (const SdsEntry& entry : doc.entries) {
        out << (entry.orbit_form ? "orbits" : "block");
        for (int value : entry.values) out << ' ' << value;
        out << '\n';
    }
    if (doc.skew_flag) out << "skew 1\n";
}

SdsQuadruple resolve(const SdsDocument& doc) {
    SdsQuadruple q;
    q.v = doc.v;
    q.lambda = doc.lambda;

    bool any_orbit_form = false;
    for (const SdsEntry& e : doc.entries) any_orbit_form |= e.orbit_form;

    OrbitIndexing indexing;
    if (any_orbit_form) {
        if (!doc.subgroup) throw ParseError("orbit-form blocks need an H line");
        Subgroup h = Subgroup::from_elements(doc.v, *doc.subgroup);
        indexing = paired_indexing(doc.v, h, doc.orbit_order);
    }
    for (int b = 0; b < 4; ++b) {
        const SdsEntry& entry = doc.entries[static_cast<std::size_t>(b)];
        q.blocks[static_cast<std::size_t>(b)] =
            entry.orbit_form ? expand(indexing, entry.values)
                             : Block::of(doc.v, entry.values);
    }
    return q;
}

SdsDocument expand_document(const SdsDocument& doc) {
    SdsQuadruple q = resolve(doc);
    SdsDocument out = doc;
    out.orbit_order = OrbitOrder::ascending; // irrelevant once explicit
    for (int b = 0; b < 4; ++b) {
        out.entries[static_cast<std::size_t>(b)].orbit_form = false;
        out.entries[static_cast<std::size_t>(b)].values =
            q.blocks[static_cast<std::size_t>(b)].elements;
    }
    return out;
}

} // namespace skewhad
