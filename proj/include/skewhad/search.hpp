#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>

#include "skewhad/difference_family.hpp"

// Heuristic search for 4-(v; k1..k4; lambda) supplementary difference sets
// whose blocks are unions of H-orbits, with the first block of skew type.
// Strategy: random restarts + steepest descent over single-orbit moves, with
// a bounded number of sideways moves on plateaus. Restarts are independent
// and run in fixed-size waves (parallel when built with OpenMP); identical
// (config, seed) give identical results regardless of worker count, as long
// as the wall-clock budget is not the binding limit.

namespace skewhad {

struct SearchConfig {
    int v = 0;
    int subgroup_generator = 1;
    OrbitOrder orbit_order = OrbitOrder::ascending;

    // Fixed lambda; when absent, lambda = sum k_i - v is recomputed per state
    // (the Hadamard-feasibility value).
    std::optional<int> lambda_target;

    // Fixed block sizes. Each must be reachable as a sum of distinct orbit
    // sizes; with skew_first_block the first is pinned to (v-1)/2.
    std::optional<std::array<int, 4>> cardinal_targets;

    bool skew_first_block = true;
    std::uint64_t seed = 0;

    int max_restarts = 64;
    long long max_steps_per_restart = 2000;
    double time_budget_seconds = 0.0; // 0 = unlimited
    int plateau_cap = 50;             // consecutive sideways moves allowed

    // Stop launching restarts once a wave has produced a verified result.
    bool stop_on_success = true;

    // Starting point for restart 0 (later restarts are random).
    std::optional<std::array<IndexSet, 4>> initial_sets;
};

struct SearchResult {
    std::array<IndexSet, 4> index_sets;
    SdsQuadruple quadruple;
    long long objective = 0;
    bool verified = false;
    int restart = 0;
    long long steps = 0;
    double elapsed_seconds = 0.0;
};

// sum over s in 1..v-1 of (T(s) - lambda)^2 with T the difference table of
// the expanded blocks. From-scratch path; SearchState maintains the same
// quantity incrementally and the two are differential-tested against each
// other.
long long objective(const OrbitIndexing& indexing,
                    const std::array<IndexSet, 4>& sets, int lambda);

// One candidate assignment of orbit index sets to the four blocks, with the
// difference table kept incrementally up to date under moves.
class SearchState {
public:
    // block 0 in skew mode: `index` is a pair index and the move flips the
    // chosen member of {2i, 2i+1}. Otherwise `index` is an orbit index to
    // toggle, or, when cardinals are pinned, `index` leaves and `index_in`
    // (same orbit size) enters.
    struct Move {
        int block = 0;
        int index = 0;
        int index_in = -1;
        bool operator==(const Move&) const = default;
    };

    SearchState(const OrbitIndexing& indexing, bool skew_first_block,
                std::optional<int> lambda_fixed,
                std::optional<std::array<int, 4>> cardinal_targets);

    void randomize(std::mt19937_64& rng);
    void set_index_sets(const std::array<IndexSet, 4>& sets);
    std::array<IndexSet, 4> index_sets() const;

    int lambda() const;
    long long current_objective() const;
    const std::vector<int>& difference_table() const { return table_; }
    std::array<int, 4> cardinals() const { return cardinals_; }

    std::vector<Move> moves() const; // canonical (block, index) order
    Move random_move(std::mt19937_64& rng) const; // uniform over moves()
    long long objective_after(const Move& m);     // evaluates, state unchanged
    void apply_move(const Move& m);

private:
    void add_orbit(int block, int orbit);
    void remove_orbit(int block, int orbit);
    void clear();

    const OrbitIndexing* indexing_;
    bool skew_;
    std::optional<int> lambda_fixed_;
    std::optional<std::array<int, 4>> targets_;

    std::array<std::vector<char>, 4> member_;     // orbit index -> in block
    std::array<std::vector<char>, 4> block_mask_; // residue -> in block
    std::array<int, 4> cardinals_{};
    std::vector<int> table_; // difference counts, maintained incrementally
};

using ProgressFn =
    std::function<void(int restart, long long step, long long objective)>;

// Results are in restart order, deduplicated (two results collapse when all
// four corresponding blocks are affine-equivalent), and every one is
// verified: SDS check, parameter identities and, in skew mode, the skew-type
// check on block 1.
std::vector<SearchResult> run_search(const SearchConfig& cfg,
                                     const ProgressFn& progress = {});

} // namespace skewhad
