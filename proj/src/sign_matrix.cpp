#include "skewhad/sign_matrix.hpp"

#include <atomic>
#include <bit>

namespace skewhad {

SignVector::SignVector(int n, int fill) {
    if (n < 0) throw Error("vector length must be >= 0");
    if (fill != 1 && fill != -1) throw Error("entries must be +1 or -1");
    entries_.assign(static_cast<std::size_t>(n), static_cast<std::int8_t>(fill));
}

void SignVector::set(int i, int value) {
    if (value != 1 && value != -1) throw Error("entries must be +1 or -1");
    entries_.at(static_cast<std::size_t>(i)) = static_cast<std::int8_t>(value);
}

SignVector encode(const Block& b) {
    SignVector v(b.n, +1);
    for (int e : b.elements) v.set(e, -1);
    return v;
}

std::vector<long long> paf(const SignVector& a) {
    const int n = a.size();
    std::vector<long long> out(static_cast<std::size_t>(n), 0);
    for (int s = 0; s < n; ++s) {
        long long acc = 0;
        for (int j = 0; j < n; ++j) acc += a[j] * a[(j + s) % n];
        out[static_cast<std::size_t>(s)] = acc;
    }
    return out;
}

SignMatrix::SignMatrix(int order) {
    if (order < 0) throw Error("matrix order must be >= 0");
    order_ = order;
    words_ = (static_cast<std::size_t>(order) + 63) / 64;
    bits_.assign(words_ * static_cast<std::size_t>(order), 0); // all +1
}

void SignMatrix::set(int r, int c, int value) {
    if (r < 0 || r >= order_ || c < 0 || c >= order_)
        throw IndexOutOfRange("matrix index out of range");
    std::uint64_t& w =
        bits_[static_cast<std::size_t>(r) * words_ + (static_cast<unsigned>(c) >> 6)];
    const std::uint64_t mask = 1ULL << (static_cast<unsigned>(c) & 63u);
    if (value == -1)
        w |= mask;
    else if (value == 1)
        w &= ~mask;
    else
        throw Error("entries must be +1 or -1");
}

int SignMatrix::row_dot(int r, int s) const {
    const std::uint64_t* a = bits_.data() + static_cast<std::size_t>(r) * words_;
    const std::uint64_t* b = bits_.data() + static_cast<std::size_t>(s) * words_;
    int diff = 0;
    for (std::size_t w = 0; w < words_; ++w)
        diff += std::popcount(a[w] ^ b[w]);
    return order_ - 2 * diff;
}

SignMatrix circulant(const SignVector& first_row) {
    const int n = first_row.size();
    SignMatrix m(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            m.set(r, c, first_row[(c - r + n) % n]);
    return m;
}

std::vector<int> back_diagonal(int n) {
    if (n < 1) throw Error("order must be >= 1");
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = n - 1 - i;
    return perm;
}

SignMatrix reverse_columns(const SignMatrix& m) {
    const int n = m.order();
    SignMatrix out(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            out.set(r, c, m.get(r, n - 1 - c));
    return out;
}

SignMatrix goethals_seidel(const SignMatrix& p1, const SignMatrix& p2,
                           const SignMatrix& p3, const SignMatrix& p4) {
    const SignMatrix* p[4] = {&p1, &p2, &p3, &p4};
    const int n = p1.order();
    for (const SignMatrix* m : p)
        if (m->order() != n)
            throw OrderMismatch("all four blocks must share an order");

    enum Kind { plain, rev, t_rev }; // X, XR, X'R
    struct Cell {
        int block;
        int sign;
        Kind kind;
    };
    static const Cell layout[4][4] = {
        {{0, +1, plain}, {1, +1, rev}, {2, +1, rev}, {3, +1, rev}},
        {{1, -1, rev}, {0, +1, plain}, {3, -1, t_rev}, {2, +1, t_rev}},
        {{2, -1, rev}, {3, +1, t_rev}, {0, +1, plain}, {1, -1, t_rev}},
        {{3, -1, rev}, {2, -1, t_rev}, {1, +1, t_rev}, {0, +1, plain}},
    };

    SignMatrix out(4 * n);
    for (int bi = 0; bi < 4; ++bi) {
        for (int bj = 0; bj < 4; ++bj) {
            const Cell& cell = layout[bi][bj];
            const SignMatrix& src = *p[cell.block];
            for (int r = 0; r < n; ++r) {
                for (int c = 0; c < n; ++c) {
                    int value;
                    switch (cell.kind) {
                        case plain: value = src.get(r, c); break;
                        case rev: value = src.get(r, n - 1 - c); break;
                        default: value = src.get(n - 1 - c, r); break;
                    }
                    out.set(bi * n + r, bj * n + c, cell.sign * value);
                }
            }
        }
    }
    return out;
}

bool verify_hadamard(const SignMatrix& a) {
    const int m = a.order();
    std::atomic<bool> ok{true};
#pragma omp parallel for schedule(dynamic, 4)
    for (int r = 0; r < m - 1; ++r) {
        if (!ok.load(std::memory_order_relaxed)) continue;
        for (int s = r + 1; s < m; ++s) {
            if (a.row_dot(r, s) != 0) {
                ok.store(false, std::memory_order_relaxed);
                break;
            }
        }
    }
    return ok.load();
}

bool verify_skew(const SignMatrix& a) {
    const int m = a.order();
    for (int r = 0; r < m; ++r) {
        if (a.get(r, r) != 1) return false;
        for (int c = r + 1; c < m; ++c)
            if (a.get(r, c) != -a.get(c, r)) return false;
    }
    return true;
}

bool paf_verify(const std::array<Block, 4>& blocks) {
    const int n = blocks[0].n;
    for (const Block& b : blocks)
        if (b.n != n) throw ModulusMismatch("blocks use different moduli");
    std::vector<long long> total(static_cast<std::size_t>(n), 0);
    for (const Block& b : blocks) {
        std::vector<long long> p = paf(encode(b));
        for (int s = 0; s < n; ++s) total[static_cast<std::size_t>(s)] += p[static_cast<std::size_t>(s)];
    }
    for (int s = 1; s < n; ++s)
        if (total[static_cast<std::size_t>(s)] != 0) return false;
    return true;
}

} // namespace skewhad
