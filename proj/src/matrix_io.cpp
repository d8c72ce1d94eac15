#include "skewhad/matrix_io.hpp"

#include <istream>
#include <ostream>
#include <string>

namespace skewhad {

namespace {
constexpr char kMagic[5] = {'H', 'A', 'D', 'B', '1'};
}

void write_matrix_text(std::ostream& out, const SignMatrix& m) {
    out << "hadamard order=" << m.order() << '\n';
    std::string row(static_cast<std::size_t>(m.order()), '+');
    for (int r = 0; r < m.order(); ++r) {
        for (int c = 0; c < m.order(); ++c)
            row[static_cast<std::size_t>(c)] = m.get(r, c) == 1 ? '+' : '-';
        out << row << '\n';
    }
}

SignMatrix read_matrix_text(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw ParseError("empty matrix input");
    const std::string prefix = "hadamard order=";
    if (header.rfind(prefix, 0) != 0)
        throw ParseError("expected 'hadamard order=<m>' header");
    int order;
    try {
        order = std::stoi(header.substr(prefix.size()));
    } catch (const std::exception&) {
        throw ParseError("bad order in matrix header");
    }
    if (order < 1) throw ParseError("matrix order must be >= 1");

    SignMatrix m(order);
    std::string row;
    for (int r = 0; r < order; ++r) {
        if (!std::getline(in, row))
            throw ParseError("truncated matrix: " + std::to_string(r) +
                             " of " + std::to_string(order) + " rows");
        if (static_cast<int>(row.size()) != order)
            throw ParseError("row " + std::to_string(r) + " has length " +
                             std::to_string(row.size()) + ", expected " +
                             std::to_string(order));
        for (int c = 0; c < order; ++c) {
            char ch = row[static_cast<std::size_t>(c)];
            if (ch == '-')
                m.set(r, c, -1);
            else if (ch != '+')
                throw ParseError(std::string("bad matrix character '") + ch + "'");
        }
    }
    return m;
}

void write_matrix_binary(std::ostream& out, const SignMatrix& m) {
    out.write(kMagic, sizeof kMagic);
    const std::uint32_t order = static_cast<std::uint32_t>(m.order());
    char size_bytes[4];
    for (int i = 0; i < 4; ++i)
        size_bytes[i] = static_cast<char>((order >> (8 * i)) & 0xffu);
    out.write(size_bytes, 4);

    const std::uint64_t total_bits =
        static_cast<std::uint64_t>(m.order()) * static_cast<std::uint64_t>(m.order());
    unsigned char byte = 0;
    int fill = 0;
    for (std::uint64_t t = 0; t < total_bits; ++t) {
        int r = static_cast<int>(t / static_cast<std::uint64_t>(m.order()));
        int c = static_cast<int>(t % static_cast<std::uint64_t>(m.order()));
        if (m.get(r, c) == -1) byte |= static_cast<unsigned char>(1u << fill);
        if (++fill == 8) {
            out.put(static_cast<char>(byte));
            byte = 0;
            fill = 0;
        }
    }
    if (fill > 0) out.put(static_cast<char>(byte));
}

SignMatrix read_matrix_binary(std::istream& in) {
    char magic[5];
    if (!in.read(magic, 5) || !std::equal(magic, magic + 5, kMagic))
        throw ParseError("bad binary matrix magic");
    char size_bytes[4];
    if (!in.read(size_bytes, 4)) throw ParseError("truncated binary header");
    std::uint32_t order = 0;
    for (int i = 0; i < 4; ++i)
        order |= static_cast<std::uint32_t>(static_cast<unsigned char>(size_bytes[i]))
                 << (8 * i);
    if (order < 1 || order > (1u << 24))
        throw ParseError("implausible matrix order " + std::to_string(order));

    SignMatrix m(static_cast<int>(order));
    const std::uint64_t total_bits =
        static_cast<std::uint64_t>(order) * static_cast<std::uint64_t>(order);
    std::uint64_t t = 0;
    while (t < total_bits) {
        int byte = in.get();
        if (byte == std::char_traits<char>::eof())
            throw ParseError("truncated binary matrix body");
        for (int bit = 0; bit < 8 && t < total_bits; ++bit, ++t) {
            if ((static_cast<unsigned>(byte) >> bit) & 1u) {
                int r = static_cast<int>(t / order);
                int c = static_cast<int>(t % order);
                m.set(r, c, -1);
            }
        }
    }
    return m;
}

SignMatrix read_matrix_auto(std::istream& in) {
    int first = in.peek();
    if (first == std::char_traits<char>::eof())
        throw ParseError("empty matrix input");
    if (static_cast<char>(first) == 'H') return read_matrix_binary(in);
    return read_matrix_text(in);
}

} // namespace skewhad
