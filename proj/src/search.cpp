#include "skewhad/search.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "skewhad/equivalence.hpp"

namespace skewhad {

long long objective(const OrbitIndexing& indexing,
                    const std::array<IndexSet, 4>& sets, int lambda) {
    std::vector<Block> blocks;
    blocks.reserve(4);
    for (const IndexSet& s : sets) blocks.push_back(expand(indexing, s));
    std::vector<int> counts = difference_counts(blocks);
    long long total = 0;
    for (int s = 1; s < indexing.n; ++s) {
        long long d = counts[static_cast<std::size_t>(s)] - lambda;
        total += d * d;
    }
    return total;
}

SearchState::SearchState(const OrbitIndexing& indexing, bool skew_first_block,
                         std::optional<int> lambda_fixed,
                         std::optional<std::array<int, 4>> cardinal_targets)
    : indexing_(&indexing),
      skew_(skew_first_block),
      lambda_fixed_(lambda_fixed),
      targets_(cardinal_targets) {
    clear();
}

void SearchState::clear() {
    const int k = indexing_->orbit_count();
    for (int b = 0; b < 4; ++b) {
        member_[static_cast<std::size_t>(b)].assign(static_cast<std::size_t>(k), 0);
        block_mask_[static_cast<std::size_t>(b)].assign(static_cast<std::size_t>(indexing_->n), 0);
        cardinals_[static_cast<std::size_t>(b)] = 0;
    }
    table_.assign(static_cast<std::size_t>(indexing_->n), 0);
}

void SearchState::add_orbit(int block, int orbit) {
    const int n = indexing_->n;
    const std::vector<int>& orb = indexing_->orbits[static_cast<std::size_t>(orbit)];
    std::vector<char>& mask = block_mask_[static_cast<std::size_t>(block)];
    for (int x : orb) {
        for (int y = 0; y < n; ++y) {
            if (!mask[static_cast<std::size_t>(y)]) continue;
            table_[static_cast<std::size_t>((x - y + n) % n)] += 1;
            table_[static_cast<std::size_t>((y - x + n) % n)] += 1;
        }
    }
    for (int x : orb)
        for (int x2 : orb)
            if (x != x2) table_[static_cast<std::size_t>((x - x2 + n) % n)] += 1;
    for (int x : orb) mask[static_cast<std::size_t>(x)] = 1;
    member_[static_cast<std::size_t>(block)][static_cast<std::size_t>(orbit)] = 1;
    cardinals_[static_cast<std::size_t>(block)] += static_cast<int>(orb.size());
}

void SearchState::remove_orbit(int block, int orbit) {
    const int n = indexing_->n;
    const std::vector<int>& orb = indexing_->orbits[static_cast<std::size_t>(orbit)];
    std::vector<char>& mask = block_mask_[static_cast<std::size_t>(block)];
    for (int x : orb) mask[static_cast<std::size_t>(x)] = 0;
    for (int x : orb) {
        for (int y = 0; y < n; ++y) {
            if (!mask[static_cast<std::size_t>(y)]) continue;
            table_[static_cast<std::size_t>((x - y + n) % n)] -= 1;
            table_[static_cast<std::size_t>((y - x + n) % n)] -= 1;
        }
    }
    for (int x : orb)
        for (int x2 : orb)
            if (x != x2) table_[static_cast<std::size_t>((x - x2 + n) % n)] -= 1;
    member_[static_cast<std::size_t>(block)][static_cast<std::size_t>(orbit)] = 0;
    cardinals_[static_cast<std::size_t>(block)] -= static_cast<int>(orb.size());
}

int SearchState::lambda() const {
    if (lambda_fixed_) return *lambda_fixed_;
    int sum = 0;
    for (int k : cardinals_) sum += k;
    return sum - indexing_->n;
}

long long SearchState::current_objective() const {
    const int lam = lambda();
    long long total = 0;
    for (int s = 1; s < indexing_->n; ++s) {
        long long d = table_[static_cast<std::size_t>(s)] - lam;
        total += d * d;
    }
    return total;
}

std::array<IndexSet, 4> SearchState::index_sets() const {
    std::array<IndexSet, 4> out;
    for (int b = 0; b < 4; ++b)
        for (int j = 0; j < indexing_->orbit_count(); ++j)
            if (member_[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)])
                out[static_cast<std::size_t>(b)].push_back(j);
    return out;
}

void SearchState::set_index_sets(const std::array<IndexSet, 4>& sets) {
    clear();
    for (int b = 0; b < 4; ++b) {
        for (int j : sets[static_cast<std::size_t>(b)]) {
            if (j < 0 || j >= indexing_->orbit_count())
                throw IndexOutOfRange("orbit index " + std::to_string(j));
            if (member_[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)])
                throw Error("repeated orbit index " + std::to_string(j));
            add_orbit(b, j);
        }
    }
    if (skew_ && !index_set_is_skew(sets[0], indexing_->pair_count()))
        throw Error("initial first block is not skew at the index level");
    if (targets_ && cardinals_ != *targets_)
        throw InfeasibleCardinals("initial sets do not match cardinal targets");
}

// Feasible random subset with the given size-sum; `sizes` entries are each
// usable once. Walks a subset-sum table, choosing a random branch wherever
// both stay feasible.
static std::vector<int> random_subset_with_sum(const std::vector<int>& sizes,
                                               int target,
                                               std::mt19937_64& rng) {
    const int k = static_cast<int>(sizes.size());
    std::vector<std::vector<char>> feasible(
        static_cast<std::size_t>(k) + 1,
        std::vector<char>(static_cast<std::size_t>(target) + 1, 0));
    feasible[static_cast<std::size_t>(k)][0] = 1;
    for (int i = k - 1; i >= 0; --i) {
        for (int s = 0; s <= target; ++s) {
            bool f = feasible[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(s)];
            if (!f && s >= sizes[static_cast<std::size_t>(i)])
                f = feasible[static_cast<std::size_t>(i) + 1]
                            [static_cast<std::size_t>(s - sizes[static_cast<std::size_t>(i)])];
            feasible[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)] = f;
        }
    }
    if (!feasible[0][static_cast<std::size_t>(target)])
        throw InfeasibleCardinals(
            "cardinal " + std::to_string(target) +
            " is not a sum of distinct orbit sizes");
    std::vector<int> chosen;
    int remaining = target;
    for (int i = 0; i < k; ++i) {
        bool can_skip = feasible[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(remaining)];
        bool can_take =
            remaining >= sizes[static_cast<std::size_t>(i)] &&
            feasible[static_cast<std::size_t>(i) + 1]
                    [static_cast<std::size_t>(remaining - sizes[static_cast<std::size_t>(i)])];
        bool take = can_take && (!can_skip || (rng() & 1));
        if (take) {
            chosen.push_back(i);
            remaining -= sizes[static_cast<std::size_t>(i)];
        }
    }
    return chosen;
}

void SearchState::randomize(std::mt19937_64& rng) {
    clear();
    const int pairs = indexing_->pair_count();
    const int orbit_count = indexing_->orbit_count();

    int first_free_block = 0;
    if (skew_) {
        for (int i = 0; i < pairs; ++i)
            add_orbit(0, 2 * i + static_cast<int>(rng() & 1));
        first_free_block = 1;
    }
    std::vector<int> sizes(static_cast<std::size_t>(orbit_count));
    for (int j = 0; j < orbit_count; ++j)
        sizes[static_cast<std::size_t>(j)] =
            static_cast<int>(indexing_->orbits[static_cast<std::size_t>(j)].size());

    for (int b = first_free_block; b < 4; ++b) {
        if (targets_) {
            for (int j : random_subset_with_sum(
                     sizes, (*targets_)[static_cast<std::size_t>(b)], rng))
                add_orbit(b, j);
        } else {
            for (int j = 0; j < orbit_count; ++j)
                if (rng() & 1) add_orbit(b, j);
        }
    }
}

std::vector<SearchState::Move> SearchState::moves() const {
    std::vector<Move> out;
    const int pairs = indexing_->pair_count();
    const int orbit_count = indexing_->orbit_count();
    for (int b = 0; b < 4; ++b) {
        if (b == 0 && skew_) {
            for (int i = 0; i < pairs; ++i) out.push_back(Move{0, i, -1});
        } else if (targets_) {
            for (int j_out = 0; j_out < orbit_count; ++j_out) {
                if (!member_[static_cast<std::size_t>(b)][static_cast<std::size_t>(j_out)]) continue;
                for (int j_in = 0; j_in < orbit_count; ++j_in) {
                    if (member_[static_cast<std::size_t>(b)][static_cast<std::size_t>(j_in)]) continue;
                    if (indexing_->orbits[static_cast<std::size_t>(j_in)].size() !=
                        indexing_->orbits[static_cast<std::size_t>(j_out)].size())
                        continue;
                    out.push_back(Move{b, j_out, j_in});
                }
            }
        } else {
            for (int j = 0; j < orbit_count; ++j) out.push_back(Move{b, j, -1});
        }
    }
    return out;
}

SearchState::Move SearchState::random_move(std::mt19937_64& rng) const {
    std::vector<Move> all = moves();
    if (all.empty()) throw Error("state has no legal moves");
    return all[static_cast<std::size_t>(rng() % all.size())];
}

void SearchState::apply_move(const Move& m) {
    if (m.block == 0 && skew_) {
        int even = 2 * m.index;
        if (member_[0][static_cast<std::size_t>(even)]) {
            remove_orbit(0, even);
            add_orbit(0, even + 1);
        } else {
            remove_orbit(0, even + 1);
            add_orbit(0, even);
        }
    } else if (m.index_in >= 0) {
        remove_orbit(m.block, m.index);
        add_orbit(m.block, m.index_in);
    } else if (member_[static_cast<std::size_t>(m.block)][static_cast<std::size_t>(m.index)]) {
        remove_orbit(m.block, m.index);
    } else {
        add_orbit(m.block, m.index);
    }
}

long long SearchState::objective_after(const Move& m) {
    apply_move(m);
    long long obj = current_objective();
    // undo: pair flips and toggles are involutions, exchanges reverse
    if (m.index_in >= 0)
        apply_move(Move{m.block, m.index_in, m.index});
    else
        apply_move(m);
    return obj;
}

namespace {

using Clock = std::chrono::steady_clock;

struct RestartOutcome {
    bool found = false;
    SearchResult result;
};

RestartOutcome run_restart(const SearchConfig& cfg, const OrbitIndexing& idx,
                           int restart, Clock::time_point t0,
                           const ProgressFn& progress) {
    std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(restart));
    SearchState state(idx, cfg.skew_first_block, cfg.lambda_target,
                      cfg.cardinal_targets);
    if (restart == 0 && cfg.initial_sets)
        state.set_index_sets(*cfg.initial_sets);
    else
        state.randomize(rng);

    auto over_budget = [&] {
        if (cfg.time_budget_seconds <= 0) return false;
        std::chrono::duration<double> dt = Clock::now() - t0;
        return dt.count() > cfg.time_budget_seconds;
    };

    long long obj = state.current_objective();
    long long steps = 0;
    int plateau = 0;
    if (progress) {
#pragma omp critical(skewhad_progress)
        progress(restart, steps, obj);
    }
    while (obj > 0 && steps < cfg.max_steps_per_restart && !over_budget()) {
        std::vector<SearchState::Move> all = state.moves();
        bool have_best = false;
        SearchState::Move best{};
        long long best_obj = 0;
        for (const SearchState::Move& m : all) {
            long long o = state.objective_after(m);
            if (!have_best || o < best_obj) { // first minimal wins ties
                have_best = true;
                best = m;
                best_obj = o;
            }
        }
        if (!have_best || best_obj > obj) break; // local minimum
        if (best_obj == obj) {
            if (++plateau > cfg.plateau_cap) break;
        } else {
            plateau = 0;
        }
        state.apply_move(best);
        ++steps;
        if (best_obj < obj && progress) {
#pragma omp critical(skewhad_progress)
            progress(restart, steps, best_obj);
        }
        obj = best_obj;
    }

    RestartOutcome out;
    if (obj != 0) return out;

    SearchResult res;
    res.index_sets = state.index_sets();
    res.objective = 0;
    res.restart = restart;
    res.steps = steps;
    res.quadruple.v = idx.n;
    for (int b = 0; b < 4; ++b)
        res.quadruple.blocks[static_cast<std::size_t>(b)] =
            expand(idx, res.index_sets[static_cast<std::size_t>(b)]);
    res.quadruple.lambda = state.lambda();

    ParameterReport pr = parameter_identities(res.quadruple);
    res.verified = verify_sds(res.quadruple).pass && pr.counting_identity &&
                   pr.lambda_relation && pr.sum_of_squares &&
                   (!cfg.skew_first_block || is_skew_type(res.quadruple.blocks[0]));
    std::chrono::duration<double> dt = Clock::now() - t0;
    res.elapsed_seconds = dt.count();
    if (res.verified) {
        out.found = true;
        out.result = std::move(res);
    }
    return out;
}

bool blocks_all_equivalent(const SearchResult& a, const SearchResult& b) {
    for (int i = 0; i < 4; ++i)
        if (!find_equivalence(a.quadruple.blocks[static_cast<std::size_t>(i)],
                              b.quadruple.blocks[static_cast<std::size_t>(i)]))
            return false;
    return true;
}

} // namespace

std::vector<SearchResult> run_search(const SearchConfig& cfg,
                                     const ProgressFn& progress) {
    if (cfg.v < 1) throw Error("v must be >= 1");
    if (cfg.max_restarts < 1) throw Error("max_restarts must be >= 1");
    Subgroup h = Subgroup::cyclic(cfg.v, cfg.subgroup_generator);
    OrbitIndexing idx = paired_indexing(cfg.v, h, cfg.orbit_order);

    if (cfg.cardinal_targets) {
        const std::array<int, 4>& k = *cfg.cardinal_targets;
        std::vector<int> sizes;
        for (const std::vector<int>& orb : idx.orbits)
            sizes.push_back(static_cast<int>(orb.size()));
        std::mt19937_64 probe(0);
        int first = 0;
        if (cfg.skew_first_block) {
            if (k[0] != (cfg.v - 1) / 2)
                throw InfeasibleCardinals(
                    "skew first block pins k1 to (v-1)/2 = " +
                    std::to_string((cfg.v - 1) / 2));
            first = 1;
        }
        for (int b = first; b < 4; ++b)
            random_subset_with_sum(sizes, k[static_cast<std::size_t>(b)], probe);
    }

    if (cfg.initial_sets) {
        // validate up front; restart workers must not throw
        SearchState probe(idx, cfg.skew_first_block, cfg.lambda_target,
                          cfg.cardinal_targets);
        probe.set_index_sets(*cfg.initial_sets);
    }

    const Clock::time_point t0 = Clock::now();
    const int wave = 8;
    std::vector<RestartOutcome> slots(static_cast<std::size_t>(cfg.max_restarts));
    int launched = 0;
    while (launched < cfg.max_restarts) {
        if (cfg.time_budget_seconds > 0) {
            std::chrono::duration<double> dt = Clock::now() - t0;
            if (dt.count() > cfg.time_budget_seconds) break;
        }
        const int begin = launched;
        const int end = std::min(cfg.max_restarts, begin + wave);
#pragma omp parallel for schedule(dynamic)
        for (int r = begin; r < end; ++r)
            slots[static_cast<std::size_t>(r)] =
                run_restart(cfg, idx, r, t0, progress);
        launched = end;
        if (cfg.stop_on_success) {
            bool any = false;
            for (int r = 0; r < end; ++r)
                if (slots[static_cast<std::size_t>(r)].found) any = true;
            if (any) break;
        }
    }

    std::vector<SearchResult> results;
    for (int r = 0; r < launched; ++r) {
        if (!slots[static_cast<std::size_t>(r)].found) continue;
        SearchResult& candidate = slots[static_cast<std::size_t>(r)].result;
        bool duplicate = false;
        for (const SearchResult& kept : results)
            if (blocks_all_equivalent(kept, candidate)) {
                duplicate = true;
                break;
            }
        if (!duplicate) results.push_back(std::move(candidate));
    }
    return results;
}

} // namespace skewhad
