// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Golden files live under SKEWHAD_GOLDEN_DIR.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "skewhad/datasets.hpp"
#include "skewhad/equivalence.hpp"
#include "skewhad/reference.hpp"
#include "skewhad/search.hpp"
#include "skewhad/sign_matrix.hpp"

using namespace skewhad;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string golden_path(const std::string& name) {
    return std::string(SKEWHAD_GOLDEN_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("missing golden file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

SignMatrix assemble(const SdsQuadruple& q) {
    return goethals_seidel(
        circulant(encode(q.blocks[0])), circulant(encode(q.blocks[1])),
        circulant(encode(q.blocks[2])), circulant(encode(q.blocks[3])));
}

Block random_block(int n, std::mt19937_64& rng) {
    std::vector<int> elems;
    for (int x = 0; x < n; ++x)
        if (rng() & 1) elems.push_back(x);
    return Block::of(n, std::move(elems));
}

struct Criterion {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

// 1. all six bundled SDS verify with their published lambdas, < 100 ms total
Criterion criterion_fixtures() {
    Criterion c;
    const int expected_lambda[6] = {98, 125, 141, 141, 224, 224};
    Clock::time_point t0 = Clock::now();
    int i = 0;
    for (const ReferenceCase& rc : reference_cases()) {
        SdsQuadruple q = case_quadruple(rc);
        c.require(q.lambda == expected_lambda[i],
                  std::string(rc.id) + " lambda mismatch");
        c.require(verify_sds(q).pass, std::string(rc.id) + " verify_sds failed");
        ++i;
    }
    double dt = seconds_since(t0);
    c.require(dt < 0.1, "took " + std::to_string(dt) + " s (budget 0.1)");
    c.detail = "6 cases verified in " + std::to_string(dt * 1e3) + " ms";
    return c;
}

// 2. expanding the index sets reproduces the explicit listings byte-for-byte
Criterion criterion_golden_blocks() {
    Criterion c;
    for (const ReferenceCase& rc : reference_cases()) {
        OrbitIndexing idx = case_indexing(rc);
        std::ostringstream rendered;
        for (int b = 0; b < 4; ++b) {
            Block block = expand(idx, rc.index_sets[static_cast<std::size_t>(b)]);
            for (std::size_t e = 0; e < block.elements.size(); ++e)
                rendered << (e ? " " : "") << block.elements[e];
            rendered << '\n';
        }
        std::string golden = read_file(golden_path("sds_" + std::string(rc.id) + ".txt"));
        c.require(rendered.str() == golden,
                  std::string(rc.id) + " expansion differs from golden listing");
    }
    if (c.pass) c.detail = "6 golden listings match byte-for-byte";
    return c;
}

// 3. assembled matrices of orders 436/580/988 pass both checks within budget
Criterion criterion_matrices() {
    Criterion c;
    std::ostringstream detail;
    for (const ReferenceCase& rc : reference_cases()) {
        SdsQuadruple q = case_quadruple(rc);

        Clock::time_point t_paf = Clock::now();
        bool paf_ok = paf_verify(q.blocks);
        double paf_s = seconds_since(t_paf);
        c.require(paf_ok, std::string(rc.id) + " paf_verify failed");
        c.require(paf_s < 1.0, std::string(rc.id) + " paf path too slow");

        SignMatrix g = assemble(q);
        c.require(g.order() == 4 * rc.v, std::string(rc.id) + " wrong order");

        Clock::time_point t_mat = Clock::now();
        bool hadamard = verify_hadamard(g);
        bool skew = verify_skew(g);
        double mat_s = seconds_since(t_mat);
        c.require(hadamard, std::string(rc.id) + " not Hadamard");
        c.require(skew, std::string(rc.id) + " not skew");
        c.require(mat_s < 120.0, std::string(rc.id) + " product path too slow");

        if (rc.id == "247A") {
            // the naive serial O(m^3) reference must also fit the budget
            Clock::time_point t_ref = Clock::now();
            bool ref_ok = ref::verify_hadamard(ref::from_packed(g));
            double ref_s = seconds_since(t_ref);
            c.require(ref_ok, "reference product check failed at order 988");
            c.require(ref_s < 120.0, "reference product path too slow");
            detail << "order 988: paf " << paf_s * 1e3 << " ms, packed "
                   << mat_s * 1e3 << " ms, serial reference " << ref_s * 1e3
                   << " ms";
        }
    }
    if (c.pass) c.detail = detail.str();
    return c;
}

// 4. the printed square decompositions, exactly
Criterion criterion_squares() {
    Criterion c;
    for (const ReferenceCase& rc : reference_cases()) {
        SdsQuadruple q = case_quadruple(rc);
        ParameterReport r = parameter_identities(q);
        c.require(r.sum_of_squares && r.square_sum == 4LL * rc.v,
                  std::string(rc.id) + " square sum != 4v");
        std::array<int, 4> got;
        for (int i = 0; i < 4; ++i) {
            int res = r.residuals[static_cast<std::size_t>(i)];
            got[static_cast<std::size_t>(i)] = res < 0 ? -res : res;
        }
        std::array<int, 4> want = rc.square_decomposition;
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        c.require(got == want,
                  std::string(rc.id) + " decomposition differs from the printed one");
    }
    if (c.pass)
        c.detail = "436 = 1+19^2+7^2+5^2, 436 = 1+5^2+11^2+17^2, "
                   "580 = 1+13^2+11^2+17^2, 988 = 1+1+19^2+25^2";
    return c;
}

// 5. A2/B2 non-equivalence by exhaustive affine scan, < 5 s per modulus
Criterion criterion_nonequivalence() {
    Criterion c;
    std::ostringstream detail;
    for (int v : {145, 247}) {
        std::string a_id = std::to_string(v) + "A";
        std::string b_id = std::to_string(v) + "B";
        Block a2 = case_quadruple(*find_case(a_id)).blocks[1];
        Block b2 = case_quadruple(*find_case(b_id)).blocks[1];
        Clock::time_point t0 = Clock::now();
        std::optional<AffineMap> map = find_equivalence(a2, b2);
        double dt = seconds_since(t0);
        c.require(!map.has_value(), "unexpected equivalence at v=" + std::to_string(v));
        c.require(dt < 5.0, "scan too slow at v=" + std::to_string(v));
        detail << "v=" << v << ": " << unit_group_order(v) * v
               << " maps scanned in " << dt * 1e3 << " ms; ";
    }
    if (c.pass) c.detail = detail.str();
    return c;
}

// 6. the published orbit tables, even indices, byte-for-byte
Criterion criterion_orbit_tables() {
    Criterion c;
    struct Table {
        int n, gen;
        OrbitOrder order;
        const char* file;
    };
    for (const Table& s : {Table{145, 16, OrbitOrder::units_first, "orbits_145.txt"},
                           Table{247, 9, OrbitOrder::ascending, "orbits_247.txt"}}) {
        OrbitIndexing idx = paired_indexing(s.n, Subgroup::cyclic(s.n, s.gen), s.order);
        std::ostringstream rendered;
        for (int i = 0; i < idx.orbit_count(); i += 2) {
            rendered << "alpha_" << i << " =";
            for (int e : idx.orbit(i)) rendered << ' ' << e;
            rendered << '\n';
        }
        std::string golden = read_file(golden_path(s.file));
        c.require(rendered.str() == golden,
                  std::string(s.file) + " differs from computed table");
    }
    if (c.pass)
        c.detail = "145: 12 even orbits incl {29},{58}; 247: 15 even orbits incl "
                   "{19,57,171},{38,95,114}";
    return c;
}

// 7. unseeded searches at v in {3,5,7,9,11,13}, documented seed, determinism
Criterion criterion_search() {
    Criterion c;
    const std::uint64_t documented_seed = 42; // fixed for reproducibility
    double worst = 0;
    for (int v : {3, 5, 7, 9, 11, 13}) {
        SearchConfig cfg;
        cfg.v = v;
        cfg.subgroup_generator = 1;
        cfg.seed = documented_seed;
        cfg.max_restarts = 256;
        cfg.max_steps_per_restart = 2000;
        cfg.time_budget_seconds = 60.0;

        Clock::time_point t0 = Clock::now();
        std::vector<SearchResult> results = run_search(cfg);
        double dt = seconds_since(t0);
        worst = std::max(worst, dt);
        c.require(dt < 60.0, "v=" + std::to_string(v) + " exceeded 60 s");
        c.require(!results.empty(), "v=" + std::to_string(v) + " found nothing");
        if (results.empty()) continue;

        const SearchResult& r = results.front();
        c.require(r.verified && r.objective == 0,
                  "v=" + std::to_string(v) + " result not verified");
        c.require(is_skew_type(r.quadruple.blocks[0]),
                  "v=" + std::to_string(v) + " first block not skew");
        SignMatrix g = assemble(r.quadruple);
        c.require(g.order() == 4 * v, "v=" + std::to_string(v) + " wrong order");
        c.require(verify_hadamard(g), "v=" + std::to_string(v) + " not Hadamard");
        c.require(verify_skew(g), "v=" + std::to_string(v) + " not skew");

        std::vector<SearchResult> again = run_search(cfg);
        bool same = again.size() == results.size();
        for (std::size_t i = 0; same && i < again.size(); ++i)
            same = again[i].index_sets == results[i].index_sets &&
                   again[i].restart == results[i].restart &&
                   again[i].steps == results[i].steps;
        c.require(same, "v=" + std::to_string(v) + " is not deterministic");
    }
    if (c.pass) {
        std::ostringstream detail;
        detail << "seed " << documented_seed
               << ", all six orders found deterministically, slowest "
               << worst * 1e3 << " ms";
        c.detail = detail.str();
    }
    return c;
}

// 8. the three oracle suites
Criterion criterion_oracles() {
    Criterion c;

    // (a) paf_verify iff verify_hadamard(goethals_seidel(...)), 1000 instances
    {
        std::mt19937_64 rng(1001);
        int agreements = 0, passes = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            int n = 1 + static_cast<int>(rng() % 6);
            std::array<Block, 4> blocks = {random_block(n, rng),
                                           random_block(n, rng),
                                           random_block(n, rng),
                                           random_block(n, rng)};
            bool fast = paf_verify(blocks);
            bool full = verify_hadamard(assemble(SdsQuadruple{n, blocks, 0}));
            if (fast == full) ++agreements;
            if (fast) ++passes;
        }
        c.require(agreements == 1000, "paf/matrix oracle disagreed");
        c.require(passes > 0, "paf oracle never saw a passing instance");
    }

    // (b) incremental objective equals recomputation over 1000 random moves
    {
        std::mt19937_64 rng(1002);
        int checked = 0;
        while (checked < 1000) {
            int v = std::vector<int>{7, 9, 11, 13}[static_cast<std::size_t>(rng() % 4)];
            OrbitIndexing idx = paired_indexing(v, Subgroup::cyclic(v, 1));
            SearchState state(idx, true, std::nullopt, std::nullopt);
            state.randomize(rng);
            for (int step = 0; step < 50 && checked < 1000; ++step, ++checked) {
                state.apply_move(state.random_move(rng));
                std::array<IndexSet, 4> sets = state.index_sets();
                std::vector<Block> blocks;
                for (const IndexSet& s : sets) blocks.push_back(expand(idx, s));
                bool table_ok = state.difference_table() == difference_counts(blocks);
                bool obj_ok = state.current_objective() ==
                              objective(idx, sets, state.lambda());
                if (!table_ok || !obj_ok) {
                    c.require(false, "incremental update diverged");
                    checked = 1000;
                }
            }
        }
    }

    // (c) block skewness iff index-set skewness, exhaustive for n <= 9
    {
        int combinations = 0;
        for (int n : {3, 5, 7, 9}) {
            for (int g = 1; g < n; ++g) {
                if (gcd_int(g, n) != 1) continue;
                Subgroup h = Subgroup::cyclic(n, g);
                OrbitIndexing idx;
                try {
                    idx = paired_indexing(n, h);
                } catch (const SelfNegativeOrbit&) {
                    continue;
                }
                int k = idx.orbit_count();
                for (int mask = 0; mask < (1 << k); ++mask) {
                    IndexSet j;
                    for (int bit = 0; bit < k; ++bit)
                        if (mask & (1 << bit)) j.push_back(bit);
                    bool block_level = is_skew_type(expand(idx, j));
                    bool index_level = index_set_is_skew(j, idx.pair_count());
                    if (block_level != index_level) {
                        c.require(false, "skew equivalence broke at n=" + std::to_string(n));
                        break;
                    }
                    ++combinations;
                }
            }
        }
        c.require(combinations > 0, "no skew combinations enumerated");
        if (c.pass)
            c.detail = "1000 paf/matrix agreements, 1000 move updates, " +
                       std::to_string(combinations) + " exhaustive skew checks";
    }
    return c;
}

} // namespace

int main() {
    struct Entry {
        const char* name;
        Criterion (*run)();
    };
    const Entry entries[] = {
        {"fixture verification (lambda 98/125/141/141/224/224, <100 ms)", criterion_fixtures},
        {"explicit-listing golden diff", criterion_golden_blocks},
        {"end-to-end matrices 436/580/988 (Hadamard + skew)", criterion_matrices},
        {"sum-of-squares decompositions", criterion_squares},
        {"A2/B2 non-equivalence at v=145,247 (<5 s)", criterion_nonequivalence},
        {"published orbit tables", criterion_orbit_tables},
        {"search at v=3..13 with documented seed, deterministic", criterion_search},
        {"oracle suites (paf<->matrix, incremental, exhaustive skew)", criterion_oracles},
    };

    int failures = 0;
    int index = 1;
    for (const Entry& entry : entries) {
        Criterion result;
        try {
            result = entry.run();
        } catch (const std::exception& e) {
            result.pass = false;
            result.detail = std::string("exception: ") + e.what();
        }
        std::printf("criterion %d: %s — %s%s%s\n", index,
                    result.pass ? "PASS" : "FAIL", entry.name,
                    result.detail.empty() ? "" : ": ",
                    result.detail.c_str());
        if (!result.pass) ++failures;
        ++index;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
