#include "skewhad/reference.hpp"

namespace skewhad::ref {

ByteMatrix from_packed(const SignMatrix& m) {
    ByteMatrix out;
    out.order = m.order();
    out.entries.resize(static_cast<std::size_t>(out.order) *
                       static_cast<std::size_t>(out.order));
    for (int r = 0; r < out.order; ++r)
        for (int c = 0; c < out.order; ++c)
            out.set(r, c, m.get(r, c));
    return out;
}

bool verify_hadamard(const ByteMatrix& a) {
    const int m = a.order;
    const std::int8_t* data = a.entries.data();
    for (int r = 0; r < m; ++r) {
        for (int s = 0; s < m; ++s) {
            const std::int8_t* row_r = data + static_cast<std::size_t>(r) * static_cast<std::size_t>(m);
            const std::int8_t* row_s = data + static_cast<std::size_t>(s) * static_cast<std::size_t>(m);
            int dot = 0;
            for (int c = 0; c < m; ++c) dot += row_r[c] * row_s[c];
            if (dot != (r == s ? m : 0)) return false;
        }
    }
    return true;
}

bool verify_skew(const ByteMatrix& a) {
    const int m = a.order;
    for (int r = 0; r < m; ++r) {
        if (a.get(r, r) != 1) return false;
        for (int c = r + 1; c < m; ++c)
            if (a.get(r, c) != -a.get(c, r)) return false;
    }
    return true;
}

} // namespace skewhad::ref
