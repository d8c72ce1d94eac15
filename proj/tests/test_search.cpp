#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "skewhad/datasets.hpp"
#include "skewhad/equivalence.hpp"
#include "skewhad/search.hpp"
#include "skewhad/sign_matrix.hpp"

using namespace skewhad;

namespace {

std::array<IndexSet, 4> sets_of(const ReferenceCase& c) {
    return {c.index_sets[0], c.index_sets[1], c.index_sets[2], c.index_sets[3]};
}

bool same_outputs(const std::vector<SearchResult>& a,
                  const std::vector<SearchResult>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].index_sets != b[i].index_sets) return false;
        if (a[i].objective != b[i].objective) return false;
        if (a[i].verified != b[i].verified) return false;
        if (a[i].restart != b[i].restart) return false;
        if (a[i].steps != b[i].steps) return false;
    }
    return true;
}

} // namespace

TEST_CASE("objective on known instances") {
    const ReferenceCase& c = *find_case("109A");
    OrbitIndexing idx = case_indexing(c);
    CHECK(objective(idx, sets_of(c), 98) == 0);

    std::array<IndexSet, 4> empty;
    CHECK(objective(idx, empty, 0) == 0);

    OrbitIndexing idx7 = paired_indexing(7, Subgroup::cyclic(7, 1));
    // {1,2,4} as singleton-orbit indices: element x sits at orbit_index_of[x]
    IndexSet j;
    for (int x : {1, 2, 4})
        j.push_back(idx7.orbit_index_of[static_cast<std::size_t>(x)]);
    std::sort(j.begin(), j.end());
    std::array<IndexSet, 4> sets = {j, {}, {}, {}};
    CHECK(objective(idx7, sets, 1) == 0);
    CHECK(objective(idx7, sets, 2) == 6); // six shifts, each (1-2)^2
}

TEST_CASE("block-1 pair flip preserves index-level skewness") {
    OrbitIndexing idx = paired_indexing(13, Subgroup::cyclic(13, 1));
    SearchState state(idx, true, std::nullopt, std::nullopt);
    std::mt19937_64 rng(1);
    state.randomize(rng);
    for (int step = 0; step < 200; ++step) {
        SearchState::Move m = state.random_move(rng);
        state.apply_move(m);
        CHECK(index_set_is_skew(state.index_sets()[0], idx.pair_count()));
    }
}

TEST_CASE("toggle on an empty block grows it by one orbit") {
    OrbitIndexing idx = paired_indexing(11, Subgroup::cyclic(11, 1));
    SearchState state(idx, true, std::nullopt, std::nullopt);
    state.set_index_sets({IndexSet{0, 3, 4, 7, 9}, {}, {}, {}});
    CHECK(state.cardinals()[1] == 0);
    state.apply_move(SearchState::Move{1, 6, -1});
    CHECK(state.index_sets()[1] == IndexSet{6});
    CHECK(state.cardinals()[1] == 1);
}

TEST_CASE("incremental table and objective equal recomputation on random moves") {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 10; ++round) {
        int v = std::vector<int>{7, 9, 11, 13, 109}[round % 5];
        int gen = v == 109 ? 45 : 1;
        OrbitIndexing idx = paired_indexing(v, Subgroup::cyclic(v, gen));
        SearchState state(idx, true, std::nullopt, std::nullopt);
        state.randomize(rng);
        for (int step = 0; step < 100; ++step) {
            SearchState::Move m = state.random_move(rng);
            long long predicted = state.objective_after(m);
            state.apply_move(m);

            std::array<IndexSet, 4> sets = state.index_sets();
            std::vector<Block> blocks;
            for (const IndexSet& s : sets) blocks.push_back(expand(idx, s));
            CHECK(state.difference_table() == difference_counts(blocks));
            long long scratch = objective(idx, sets, state.lambda());
            CHECK(state.current_objective() == scratch);
            CHECK(predicted == scratch);
        }
    }
}

TEST_CASE("run_search finds a verified skew SDS at v=7") {
    SearchConfig cfg;
    cfg.v = 7;
    cfg.subgroup_generator = 1;
    cfg.seed = 2024;
    cfg.max_restarts = 32;
    std::vector<SearchResult> results = run_search(cfg);
    REQUIRE(!results.empty());
    for (const SearchResult& r : results) {
        CHECK(r.verified);
        CHECK(r.objective == 0);
        CHECK(verify_sds(r.quadruple).pass);
        CHECK(is_skew_type(r.quadruple.blocks[0]));
        ParameterReport pr = parameter_identities(r.quadruple);
        CHECK(pr.lambda_relation);
        CHECK(pr.sum_of_squares);
        SignMatrix g = goethals_seidel(circulant(encode(r.quadruple.blocks[0])),
                                       circulant(encode(r.quadruple.blocks[1])),
                                       circulant(encode(r.quadruple.blocks[2])),
                                       circulant(encode(r.quadruple.blocks[3])));
        CHECK(g.order() == 28);
        CHECK(verify_hadamard(g));
        CHECK(verify_skew(g));
    }
}

TEST_CASE("run_search seeded with the 109A sets and zero steps returns them") {
    const ReferenceCase& c = *find_case("109A");
    SearchConfig cfg;
    cfg.v = 109;
    cfg.subgroup_generator = 45;
    cfg.seed = 5;
    cfg.max_restarts = 1;
    cfg.max_steps_per_restart = 0;
    cfg.initial_sets = sets_of(c);
    std::vector<SearchResult> results = run_search(cfg);
    REQUIRE(results.size() == 1);
    CHECK(results[0].verified);
    CHECK(results[0].steps == 0);
    CHECK(results[0].index_sets == sets_of(c));
    CHECK(results[0].quadruple.lambda == 98);
}

TEST_CASE("run_search solves the tiny v=3 space") {
    SearchConfig cfg;
    cfg.v = 3;
    cfg.seed = 1;
    cfg.max_restarts = 16;
    std::vector<SearchResult> results = run_search(cfg);
    REQUIRE(!results.empty());
    SignMatrix g =
        goethals_seidel(circulant(encode(results[0].quadruple.blocks[0])),
                        circulant(encode(results[0].quadruple.blocks[1])),
                        circulant(encode(results[0].quadruple.blocks[2])),
                        circulant(encode(results[0].quadruple.blocks[3])));
    CHECK(g.order() == 12);
    CHECK(verify_hadamard(g));
    CHECK(verify_skew(g));
}

TEST_CASE("run_search is deterministic for a fixed seed") {
    for (int v : {7, 11}) {
        SearchConfig cfg;
        cfg.v = v;
        cfg.seed = 77;
        cfg.max_restarts = 24;
        cfg.stop_on_success = false; // exercise the full restart schedule
        std::vector<SearchResult> first = run_search(cfg);
        std::vector<SearchResult> second = run_search(cfg);
        CHECK(same_outputs(first, second));
    }
}

TEST_CASE("results are deduplicated by blockwise affine equivalence") {
    SearchConfig cfg;
    cfg.v = 5;
    cfg.seed = 3;
    cfg.max_restarts = 40;
    cfg.stop_on_success = false;
    std::vector<SearchResult> results = run_search(cfg);
    REQUIRE(!results.empty());
    for (std::size_t i = 0; i < results.size(); ++i) {
        for (std::size_t j = i + 1; j < results.size(); ++j) {
            bool all_equivalent = true;
            for (int b = 0; b < 4; ++b)
                all_equivalent =
                    all_equivalent &&
                    find_equivalence(results[i].quadruple.blocks[static_cast<std::size_t>(b)],
                                     results[j].quadruple.blocks[static_cast<std::size_t>(b)])
                        .has_value();
            CHECK_FALSE(all_equivalent);
        }
    }
}

TEST_CASE("cardinal targets") {
    SUBCASE("infeasible targets throw") {
        SearchConfig cfg;
        cfg.v = 7;
        cfg.subgroup_generator = 2; // H = {1,2,4}, orbit sizes {3,3}
        cfg.skew_first_block = false;
        cfg.cardinal_targets = {{3, 3, 3, 4}}; // 4 is not a sum of 3s
        CHECK_THROWS_AS(run_search(cfg), InfeasibleCardinals);
    }
    SUBCASE("skew mode pins the first cardinal") {
        SearchConfig cfg;
        cfg.v = 13;
        cfg.cardinal_targets = {{5, 7, 4, 4}}; // must be 6
        CHECK_THROWS_AS(run_search(cfg), InfeasibleCardinals);
    }
    SUBCASE("feasible targets are hit exactly") {
        SearchConfig cfg;
        cfg.v = 13;
        cfg.seed = 11;
        cfg.max_restarts = 200;
        cfg.max_steps_per_restart = 4000;
        cfg.cardinal_targets = {{6, 7, 4, 4}}; // 52 = 1 + 1 + 25 + 25
        std::vector<SearchResult> results = run_search(cfg);
        REQUIRE(!results.empty());
        CHECK(results[0].quadruple.cardinals() == std::array<int, 4>{6, 7, 4, 4});
        CHECK(results[0].quadruple.lambda == 8);
    }
}

TEST_CASE("run_search without the skew constraint") {
    SearchConfig cfg;
    cfg.v = 9;
    cfg.seed = 3;
    cfg.skew_first_block = false;
    cfg.max_restarts = 32;
    std::vector<SearchResult> results = run_search(cfg);
    REQUIRE(!results.empty());
    for (const SearchResult& r : results) {
        CHECK(r.verified);
        CHECK(verify_sds(r.quadruple).pass);
        CHECK(parameter_identities(r.quadruple).sum_of_squares);
        CHECK(verify_hadamard(goethals_seidel(
            circulant(encode(r.quadruple.blocks[0])),
            circulant(encode(r.quadruple.blocks[1])),
            circulant(encode(r.quadruple.blocks[2])),
            circulant(encode(r.quadruple.blocks[3])))));
    }
}

TEST_CASE("pairing violations propagate") {
    SearchConfig cfg;
    cfg.v = 5;
    cfg.subgroup_generator = 4; // -1 in H
    CHECK_THROWS_AS(run_search(cfg), SelfNegativeOrbit);
}

TEST_CASE("invalid initial sets are rejected") {
    SearchConfig cfg;
    cfg.v = 7;
    cfg.seed = 1;
    cfg.initial_sets = {{IndexSet{0, 1}, {}, {}, {}}}; // both members of pair 0
    CHECK_THROWS(run_search(cfg));
}
