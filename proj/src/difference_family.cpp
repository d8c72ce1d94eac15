#include "skewhad/difference_family.hpp"

#include <algorithm>

namespace skewhad {

bool Block::contains(int x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
}

Block Block::of(int n, std::vector<int> elements) {
    if (n < 1) throw Error("modulus must be >= 1");
    std::sort(elements.begin(), elements.end());
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (elements[i] < 0 || elements[i] >= n)
            throw Error("block element " + std::to_string(elements[i]) +
                        " out of range for modulus " + std::to_string(n));
        if (i > 0 && elements[i] == elements[i - 1])
            throw Error("duplicate block element " + std::to_string(elements[i]));
    }
    Block b;
    b.n = n;
    b.elements = std::move(elements);
    return b;
}

Block expand(const OrbitIndexing& indexing, const IndexSet& indices) {
    std::vector<int> out;
    for (int j : indices) {
        const std::vector<int>& orb = indexing.orbit(j); // range-checks
        out.insert(out.end(), orb.begin(), orb.end());
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw Error("orbit indices overlap (repeated index?)");
    Block b;
    b.n = indexing.n;
    b.elements = std::move(out);
    return b;
}

std::vector<int> difference_counts(const std::vector<Block>& blocks) {
    if (blocks.empty()) throw Error("need at least one block");
    int n = blocks.front().n;
    for (const Block& b : blocks)
        if (b.n != n) throw ModulusMismatch("blocks use different moduli");
    std::vector<int> counts(n, 0);
    for (const Block& b : blocks) {
        for (int a : b.elements) {
            for (int a2 : b.elements) {
                if (a == a2) continue;
                counts[(a - a2 + n) % n] += 1;
            }
        }
    }
    return counts;
}

std::array<int, 4> SdsQuadruple::cardinals() const {
    return {blocks[0].size(), blocks[1].size(), blocks[2].size(),
            blocks[3].size()};
}

VerificationReport verify_sds(const SdsQuadruple& q, bool with_table) {
    std::vector<int> counts = difference_counts(
        {q.blocks.begin(), q.blocks.end()});
    VerificationReport report;
    report.pass = true;
    for (int s = 1; s < q.v; ++s) {
        if (counts[s] != q.lambda) {
            report.pass = false;
            report.first_offending_residue = s;
            report.observed_count = counts[s];
            break;
        }
    }
    if (with_table) report.counts = std::move(counts);
    return report;
}

bool is_skew_type(const Block& b) {
    if (b.size() * 2 != b.n - 1) return false;
    for (int x : b.elements)
        if (b.contains((b.n - x) % b.n)) return false;
    return true;
}

bool index_set_is_skew(const IndexSet& indices, int pair_count) {
    std::vector<char> in(2 * static_cast<std::size_t>(pair_count) + 2, 0);
    for (int j : indices)
        if (j >= 0 && j < 2 * pair_count) in[static_cast<std::size_t>(j)] = 1;
    for (int i = 0; i < pair_count; ++i)
        if (in[2 * static_cast<std::size_t>(i)] == in[2 * static_cast<std::size_t>(i) + 1])
            return false;
    return true;
}

ParameterReport parameter_identities(const SdsQuadruple& q) {
    ParameterReport r;
    std::array<int, 4> k = q.cardinals();
    long long pair_sum = 0, card_sum = 0;
    for (int i = 0; i < 4; ++i) {
        pair_sum += static_cast<long long>(k[static_cast<std::size_t>(i)]) *
                    (k[static_cast<std::size_t>(i)] - 1);
        card_sum += k[static_cast<std::size_t>(i)];
        int res = q.v - 2 * k[static_cast<std::size_t>(i)];
        r.residuals[static_cast<std::size_t>(i)] = res;
        r.square_sum += static_cast<long long>(res) * res;
    }
    r.counting_identity =
        pair_sum == static_cast<long long>(q.lambda) * (q.v - 1);
    r.lambda_relation = card_sum - q.v == q.lambda;
    r.sum_of_squares = r.square_sum == 4LL * q.v;
    return r;
}

} // namespace skewhad
