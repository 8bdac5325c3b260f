#include "simplexfree/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <functional>
#include <map>
#include <memory>
#include <thread>
#include <tuple>

#include <nlohmann/json.hpp>

#include "simplexfree/simplex.hpp"

namespace simplexfree {

namespace {

struct Instance {
    int n = 0;
    int d = 1;
    int cap = 0;
    bool require_max = false;
    SetFamily universe;
    std::vector<std::vector<int>> edges;
    std::vector<std::vector<int>> by_item;
    std::vector<char> is_top;     // popcount == cap
    int top_total = 0;
    int forced_item = -1;         // representative mandatory member, or -1
    std::vector<int> seed_items;  // star construction inside the universe
};

int universe_index(const Instance& inst, Mask m) {
    auto it = std::lower_bound(inst.universe.members.begin(), inst.universe.members.end(), m);
    if (it == inst.universe.members.end() || *it != m) return -1;
    return static_cast<int>(it - inst.universe.members.begin());
}

// The star construction is feasible, so its complement bounds the number
// of deletions the descending-target loop must ever try.
void build_seed(Instance& inst) {
    int k = inst.n - inst.cap;
    SetFamily star = build_star_family(inst.n, 0, inst.d, k);
    for (Mask m : star.members) {
        if (set_size(m) > inst.cap) continue;
        int idx = universe_index(inst, m);
        if (idx >= 0) inst.seed_items.push_back(idx);
    }
    std::vector<char> in_seed(inst.universe.members.size(), 0);
    for (int v : inst.seed_items) in_seed[static_cast<std::size_t>(v)] = 1;
    for (const auto& e : inst.edges) {
        bool all = true;
        for (int v : e) all = all && in_seed[static_cast<std::size_t>(v)];
        if (all) throw std::logic_error("star seed contains a simplex; hypergraph is inconsistent");
    }
}

Instance build_instance(const SearchProblem& prob, const SearchConfig& cfg, bool forced_rep) {
    if (prob.n < 1 || prob.n > kMaxPowerSet)
        throw std::invalid_argument("search needs 1 <= n <= 16 (power-set universe)");
    if (prob.d < 1) throw std::invalid_argument("d must be >= 1");
    int cap = prob.size_cap.value_or(prob.n);
    if (cap > prob.n)
        throw std::invalid_argument("inconsistent constraints: size_cap exceeds n");
    if (prob.require_max && cap < 0)
        throw std::invalid_argument("inconsistent constraints: require_max with empty universe");

    Instance inst;
    inst.n = prob.n;
    inst.d = prob.d;
    inst.cap = cap;
    inst.require_max = prob.require_max;
    inst.universe.n = prob.n;
    for (Mask m = 0; m < (Mask{1} << prob.n); ++m)
        if (set_size(m) <= cap) inst.universe.members.push_back(m);

    inst.edges = simplex_index_tuples(inst.universe, prob.d, {cfg.tuple_budget});
    inst.by_item.assign(inst.universe.members.size(), {});
    for (std::size_t e = 0; e < inst.edges.size(); ++e)
        for (int v : inst.edges[e]) inst.by_item[static_cast<std::size_t>(v)].push_back(static_cast<int>(e));

    inst.is_top.assign(inst.universe.members.size(), 0);
    for (std::size_t i = 0; i < inst.universe.members.size(); ++i) {
        if (set_size(inst.universe.members[i]) == cap) {
            inst.is_top[i] = 1;
            ++inst.top_total;
        }
    }

    if (prob.require_max && forced_rep) {
        // Any member of maximum size can be mapped to the lexicographically
        // least one by a relabeling, so one mandatory representative
        // suffices for the optimum value.
        inst.forced_item = universe_index(inst, full_mask(cap));
        if (inst.forced_item < 0) throw std::logic_error("missing top-level representative");
    }

    if (!inst.universe.members.empty()) build_seed(inst);

    // Deep complements explode; unlocking them is an explicit choice.
    std::uint64_t m_ub = inst.universe.members.size() - inst.seed_items.size();
    if (prob.d >= 2 && m_ub > 12 && !cfg.long_running && !prob.target)
        throw std::invalid_argument(
            "complement depth " + std::to_string(m_ub) +
            " exceeds the default gate; pass --long-running to attempt it");
    return inst;
}

struct Shared {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> abort{false};
    std::uint64_t node_budget = 0;
};

struct Snapshot {
    std::vector<int> dels;
    std::vector<int> forbids;
    bool solved = false;
};

class Solver {
public:
    Solver(const Instance& inst, std::shared_ptr<Shared> shared)
        : inst_(inst), shared_(std::move(shared)) {
        std::size_t u = inst_.universe.members.size();
        deleted_.assign(u, 0);
        forbidden_.assign(u, 0);
        stamp_.assign(u, 0);
        del_cnt_.assign(inst_.edges.size(), 0);
        cand_cnt_.resize(inst_.edges.size());
        for (std::size_t e = 0; e < inst_.edges.size(); ++e)
            cand_cnt_[e] = static_cast<int>(inst_.edges[e].size());
        uncovered_ = static_cast<int>(inst_.edges.size());
        if (inst_.forced_item >= 0) forbid(inst_.forced_item);
    }

    // emit receives the complete deletion set; returning true stops the walk.
    using Emit = std::function<bool(const std::vector<int>&)>;

    std::uint64_t nodes = 0;
    std::uint64_t prunes = 0;

    void apply(const Snapshot& s) {
        for (int v : s.dels) {
            del(v);
            del_stack_.push_back(v);
        }
        for (int v : s.forbids) forbid(v);
    }

    void unapply(const Snapshot& s) {
        for (auto it = s.forbids.rbegin(); it != s.forbids.rend(); ++it) unforbid(*it);
        for (auto it = s.dels.rbegin(); it != s.dels.rend(); ++it) {
            del_stack_.pop_back();
            undel(*it);
        }
    }

    int root_matching_lb() { return matching_lb(); }

    // Exhaustive decision/enumeration of hitting sets of size <= m.
    bool search(int m, bool enumerate, const Emit& emit) {
        enumerate_ = enumerate;
        emit_ = &emit;
        return dfs(m, static_cast<int>(del_stack_.size()));
    }

    // Mirrors one dfs step to split the tree into deterministic subtrees.
    // Returns false if the node is a leaf (solved snapshots keep solved=true).
    bool expand_children(int m, const Snapshot& node, std::vector<Snapshot>& out) {
        apply(node);
        int used = static_cast<int>(del_stack_.size());
        bump();
        bool is_leaf = true;
        if (uncovered_ == 0) {
            Snapshot s = node;
            s.solved = true;
            out.push_back(std::move(s));
        } else if (used < m) {
            auto [best, dead] = select_edge();
            if (!dead && used + matching_lb() <= m) {
                is_leaf = false;
                Snapshot child = node;
                for (int v : inst_.edges[static_cast<std::size_t>(best)]) {
                    if (deleted_[static_cast<std::size_t>(v)] || forbidden_[static_cast<std::size_t>(v)])
                        continue;
                    child.dels.push_back(v);
                    out.push_back(child);
                    child.dels.pop_back();
                    child.forbids.push_back(v);
                }
            } else {
                ++prunes;
            }
        } else {
            ++prunes;
        }
        unapply(node);
        return !is_leaf;
    }

    // Emits every completion of an already-covered node up to m deletions.
    bool finish_solved(int m, const Emit& emit) {
        enumerate_ = true;
        emit_ = &emit;
        return emit_solution(m, static_cast<int>(del_stack_.size()));
    }

private:
    const Instance& inst_;
    std::shared_ptr<Shared> shared_;
    std::vector<char> deleted_, forbidden_;
    std::vector<int> del_cnt_, cand_cnt_;
    std::vector<int> stamp_;
    int epoch_ = 0;
    int uncovered_ = 0;
    std::vector<int> del_stack_;
    std::vector<int> completion_;
    bool enumerate_ = false;
    const Emit* emit_ = nullptr;
    std::uint64_t tick_ = 0;

    void bump() {
        ++nodes;
        if ((++tick_ & 1023) == 0) {
            if (shared_->nodes.fetch_add(1024, std::memory_order_relaxed) + 1024 >
                shared_->node_budget)
                shared_->abort.store(true, std::memory_order_relaxed);
            if (shared_->abort.load(std::memory_order_relaxed))
                throw BudgetExceededError("search node budget exceeded", nodes);
        }
    }

    void del(int v) {
        deleted_[static_cast<std::size_t>(v)] = 1;
        for (int e : inst_.by_item[static_cast<std::size_t>(v)]) {
            if (del_cnt_[static_cast<std::size_t>(e)]++ == 0) --uncovered_;
            --cand_cnt_[static_cast<std::size_t>(e)];
        }
    }

    void undel(int v) {
        deleted_[static_cast<std::size_t>(v)] = 0;
        for (int e : inst_.by_item[static_cast<std::size_t>(v)]) {
            if (--del_cnt_[static_cast<std::size_t>(e)] == 0) ++uncovered_;
            ++cand_cnt_[static_cast<std::size_t>(e)];
        }
    }

    void forbid(int v) {
        forbidden_[static_cast<std::size_t>(v)] = 1;
        for (int e : inst_.by_item[static_cast<std::size_t>(v)]) --cand_cnt_[static_cast<std::size_t>(e)];
    }

    void unforbid(int v) {
        forbidden_[static_cast<std::size_t>(v)] = 0;
        for (int e : inst_.by_item[static_cast<std::size_t>(v)]) ++cand_cnt_[static_cast<std::size_t>(e)];
    }

    // Uncovered edge with the fewest deletable members; {-1, true} when some
    // uncovered edge has none (dead branch).
    std::pair<int, bool> select_edge() {
        int best = -1;
        int best_c = INT_MAX;
        for (std::size_t e = 0; e < inst_.edges.size(); ++e) {
            if (del_cnt_[e] != 0) continue;
            int c = cand_cnt_[e];
            if (c == 0) return {-1, true};
            if (c < best_c) {
                best_c = c;
                best = static_cast<int>(e);
                if (c == 1) break;  // first index is already the tie-break winner
            }
        }
        return {best, false};
    }

    // Greedy member-disjoint uncovered edges: each needs its own deletion.
    int matching_lb() {
        ++epoch_;
        int cnt = 0;
        for (std::size_t e = 0; e < inst_.edges.size(); ++e) {
            if (del_cnt_[e] != 0) continue;
            bool free = true;
            for (int v : inst_.edges[e])
                if (stamp_[static_cast<std::size_t>(v)] == epoch_) {
                    free = false;
                    break;
                }
            if (!free) continue;
            ++cnt;
            for (int v : inst_.edges[e]) stamp_[static_cast<std::size_t>(v)] = epoch_;
        }
        return cnt;
    }

    bool final_emit() {
        if (inst_.require_max && inst_.forced_item < 0) {
            // Enumeration runs unanchored; drop deletion sets that wipe out
            // the entire top level.
            int top_deleted = 0;
            for (int v : del_stack_) top_deleted += inst_.is_top[static_cast<std::size_t>(v)];
            for (int v : completion_) top_deleted += inst_.is_top[static_cast<std::size_t>(v)];
            if (top_deleted == inst_.top_total) return false;
        }
        if (completion_.empty()) return (*emit_)(del_stack_);
        std::vector<int> full = del_stack_;
        full.insert(full.end(), completion_.begin(), completion_.end());
        return (*emit_)(full);
    }

    // In enumeration mode a node can be covered with deletions to spare;
    // every completion from the still-deletable items is a distinct
    // optimal family (cannot happen when m is the proven minimum).
    bool complete_rest(int m, int used, int from) {
        if (used == m) return final_emit();
        for (int v = from; v < static_cast<int>(inst_.universe.members.size()); ++v) {
            if (deleted_[static_cast<std::size_t>(v)] || forbidden_[static_cast<std::size_t>(v)])
                continue;
            completion_.push_back(v);
            bool stop = complete_rest(m, used + 1, v + 1);
            completion_.pop_back();
            if (stop) return true;
        }
        return false;
    }

    bool emit_solution(int m, int used) {
        if (!enumerate_ || used == m) return final_emit();
        return complete_rest(m, used, 0);
    }

    bool dfs(int m, int used) {
        bump();
        if (uncovered_ == 0) return emit_solution(m, used);
        if (used == m) {
            ++prunes;
            return false;
        }
        auto [best, dead] = select_edge();
        if (dead) {
            ++prunes;
            return false;
        }
        if (used + matching_lb() > m) {
            ++prunes;
            return false;
        }
        bool stop = false;
        std::vector<int> forbids_here;
        for (int v : inst_.edges[static_cast<std::size_t>(best)]) {
            if (deleted_[static_cast<std::size_t>(v)] || forbidden_[static_cast<std::size_t>(v)])
                continue;
            del(v);
            del_stack_.push_back(v);
            stop = dfs(m, used + 1);
            del_stack_.pop_back();
            undel(v);
            if (stop) break;
            forbid(v);
            forbids_here.push_back(v);
        }
        for (auto it = forbids_here.rbegin(); it != forbids_here.rend(); ++it) unforbid(*it);
        return stop;
    }
};

struct LevelOutcome {
    bool feasible = false;
    std::vector<int> solution;             // decision mode: first hit in DFS order
    std::vector<std::vector<int>> all;     // enumeration mode
    std::uint64_t nodes = 0;
    std::uint64_t prunes = 0;
};

// One deletion budget, explored exhaustively.  With threads > 1 the first
// branching levels are unrolled into an ordered frontier whose subtrees
// are solved independently; merging in frontier order reproduces the
// sequential DFS result bit for bit.
LevelOutcome run_level(const Instance& inst, const SearchConfig& cfg, int m, bool enumerate,
                       std::uint64_t list_budget) {
    auto shared = std::make_shared<Shared>();
    shared->node_budget = cfg.node_budget;
    LevelOutcome out;

    int threads = std::max(1, cfg.threads);
    if (threads == 1) {
        Solver solver(inst, shared);
        std::uint64_t emitted = 0;
        Solver::Emit emit = [&](const std::vector<int>& dels) {
            if (enumerate) {
                if (++emitted > list_budget)
                    throw BudgetExceededError("enumeration list budget exceeded", emitted);
                std::vector<int> sorted = dels;
                std::sort(sorted.begin(), sorted.end());
                out.all.push_back(std::move(sorted));
                return false;
            }
            out.feasible = true;
            out.solution = dels;
            std::sort(out.solution.begin(), out.solution.end());
            return true;
        };
        bool stopped = solver.search(m, enumerate, emit);
        out.nodes = solver.nodes;
        out.prunes = solver.prunes;
        if (!enumerate) out.feasible = stopped;
        if (enumerate) out.feasible = !out.all.empty();
        return out;
    }

    // Build the frontier in DFS order.
    std::vector<Snapshot> frontier{Snapshot{}};
    {
        Solver scout(inst, shared);
        std::size_t target = static_cast<std::size_t>(threads) * 8;
        bool grew = true;
        int depth = 0;
        while (grew && frontier.size() < target && depth < m) {
            grew = false;
            std::vector<Snapshot> next;
            for (const auto& node : frontier) {
                if (node.solved) {
                    next.push_back(node);
                    continue;
                }
                if (scout.expand_children(m, node, next)) grew = true;
            }
            frontier = std::move(next);
            ++depth;
        }
        out.nodes += scout.nodes;
        out.prunes += scout.prunes;
    }

    struct WorkerSlot {
        bool feasible = false;
        std::vector<int> solution;
        std::vector<std::vector<int>> all;
    };
    std::vector<WorkerSlot> slots(frontier.size());
    std::vector<std::uint64_t> w_nodes(static_cast<std::size_t>(threads), 0);
    std::vector<std::uint64_t> w_prunes(static_cast<std::size_t>(threads), 0);
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
    std::atomic<std::uint64_t> emitted{0};

    auto work = [&](int w) {
        try {
            Solver solver(inst, shared);
            for (std::size_t i = static_cast<std::size_t>(w); i < frontier.size();
                 i += static_cast<std::size_t>(threads)) {
                const Snapshot& node = frontier[i];
                WorkerSlot& slot = slots[i];
                Solver::Emit emit = [&](const std::vector<int>& dels) {
                    if (enumerate) {
                        if (emitted.fetch_add(1) + 1 > list_budget)
                            throw BudgetExceededError("enumeration list budget exceeded",
                                                      emitted.load());
                        std::vector<int> sorted = dels;
                        std::sort(sorted.begin(), sorted.end());
                        slot.all.push_back(std::move(sorted));
                        return false;
                    }
                    slot.feasible = true;
                    slot.solution = dels;
                    std::sort(slot.solution.begin(), slot.solution.end());
                    return true;
                };
                solver.apply(node);
                if (node.solved) {
                    if (enumerate)
                        solver.finish_solved(m, emit);
                    else
                        emit(node.dels);
                } else {
                    solver.search(m, enumerate, emit);
                }
                solver.unapply(node);
            }
            w_nodes[static_cast<std::size_t>(w)] = solver.nodes;
            w_prunes[static_cast<std::size_t>(w)] = solver.prunes;
        } catch (...) {
            errors[static_cast<std::size_t>(w)] = std::current_exception();
            shared->abort.store(true, std::memory_order_relaxed);
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);

    for (std::uint64_t v : w_nodes) out.nodes += v;
    for (std::uint64_t v : w_prunes) out.prunes += v;
    for (auto& slot : slots) {
        if (enumerate) {
            for (auto& d : slot.all) out.all.push_back(std::move(d));
        } else if (slot.feasible && !out.feasible) {
            out.feasible = true;
            out.solution = std::move(slot.solution);
        }
    }
    if (enumerate) out.feasible = !out.all.empty();
    return out;
}

SetFamily family_from_deletions(const Instance& inst, const std::vector<int>& dels) {
    std::vector<char> gone(inst.universe.members.size(), 0);
    for (int v : dels) gone[static_cast<std::size_t>(v)] = 1;
    SetFamily fam;
    fam.n = inst.n;
    for (std::size_t i = 0; i < inst.universe.members.size(); ++i)
        if (!gone[i]) fam.members.push_back(inst.universe.members[i]);
    return fam;
}

SetFamily family_from_items(const Instance& inst, const std::vector<int>& items) {
    SetFamily fam;
    fam.n = inst.n;
    for (int v : items) fam.members.push_back(inst.universe.members[static_cast<std::size_t>(v)]);
    std::sort(fam.members.begin(), fam.members.end());
    return fam;
}

void assert_sound(const Instance& inst, const SetFamily& fam) {
    for (Mask m : fam.members)
        if (set_size(m) > inst.cap) throw std::logic_error("witness violates the size cap");
    if (inst.require_max && !fam.members.empty()) {
        bool has_top = false;
        for (Mask m : fam.members) has_top = has_top || set_size(m) == inst.cap;
        if (!has_top) throw std::logic_error("witness violates require_max");
    }
    if (find_simplex(fam, inst.d).has_value())
        throw std::logic_error("witness contains a simplex");
}

} // namespace

SearchOutcome max_simplex_free(const SearchProblem& prob, const SearchConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    Instance inst = build_instance(prob, cfg, /*forced_rep=*/true);
    SearchOutcome out;
    out.stats.universe = inst.universe.members.size();
    out.stats.simplices = inst.edges.size();
    std::uint64_t u = inst.universe.members.size();

    auto finish = [&](SearchOutcome& o) {
        o.stats.wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        return o;
    };

    if (prob.target) {
        std::uint64_t target = *prob.target;
        if (target > u) {
            out.decision = false;
            return finish(out);
        }
        int m = static_cast<int>(u - target);
        LevelOutcome lvl = run_level(inst, cfg, m, /*enumerate=*/false, cfg.list_budget);
        out.stats.nodes = lvl.nodes;
        out.stats.prunes = lvl.prunes;
        out.stats.levels = 1;
        out.decision = lvl.feasible;
        if (lvl.feasible) {
            out.optimum = u - lvl.solution.size();
            out.witness = family_from_deletions(inst, lvl.solution);
            assert_sound(inst, out.witness);
        }
        return finish(out);
    }

    if (inst.edges.empty()) {
        out.optimum = u;
        out.witness = inst.universe;
        assert_sound(inst, out.witness);
        return finish(out);
    }

    int m_ub = static_cast<int>(u - inst.seed_items.size());
    int lb0 = Solver(inst, std::make_shared<Shared>()).root_matching_lb();
    for (int m = lb0; m < m_ub; ++m) {
        ++out.stats.levels;
        LevelOutcome lvl = run_level(inst, cfg, m, /*enumerate=*/false, cfg.list_budget);
        out.stats.nodes += lvl.nodes;
        out.stats.prunes += lvl.prunes;
        if (lvl.feasible) {
            out.optimum = u - lvl.solution.size();
            out.witness = family_from_deletions(inst, lvl.solution);
            assert_sound(inst, out.witness);
            return finish(out);
        }
    }
    // Every strictly smaller deletion budget is exhausted: the star seed
    // is optimal.
    out.optimum = inst.seed_items.size();
    out.witness = family_from_items(inst, inst.seed_items);
    assert_sound(inst, out.witness);
    return finish(out);
}

EnumerateResult enumerate_optimal(const SearchProblem& prob, const SearchConfig& cfg) {
    if (prob.target)
        throw std::invalid_argument("enumerate_optimal takes no target (it enumerates optima)");
    EnumerateResult res;
    res.outcome = max_simplex_free(prob, cfg);
    auto t0 = std::chrono::steady_clock::now();

    // Re-run unanchored so optima that avoid the forced representative are
    // not lost; require_max is enforced per emitted solution instead.
    Instance inst = build_instance(prob, cfg, /*forced_rep=*/false);
    std::uint64_t u = inst.universe.members.size();
    int m_star = static_cast<int>(u - res.outcome.optimum);

    LevelOutcome lvl = run_level(inst, cfg, m_star, /*enumerate=*/true, cfg.list_budget);
    res.outcome.stats.nodes += lvl.nodes;
    res.outcome.stats.prunes += lvl.prunes;
    ++res.outcome.stats.levels;

    res.families.reserve(lvl.all.size());
    for (const auto& dels : lvl.all) {
        SetFamily fam = family_from_deletions(inst, dels);
        assert_sound(inst, fam);
        if (fam.size() != res.outcome.optimum) throw std::logic_error("enumerated family has wrong size");
        res.families.push_back(std::move(fam));
    }
    std::sort(res.families.begin(), res.families.end(), family_less);
    res.outcome.optimal_count = res.families.size();

    if (inst.n <= kMaxCanonical) {
        res.orbit_reps.reserve(res.families.size());
        for (const auto& fam : res.families) res.orbit_reps.push_back(canonical_form(fam));
        std::sort(res.orbit_reps.begin(), res.orbit_reps.end(), family_less);
        res.orbit_reps.erase(std::unique(res.orbit_reps.begin(), res.orbit_reps.end()),
                             res.orbit_reps.end());
        res.outcome.orbit_count = res.orbit_reps.size();
    }
    res.outcome.stats.wall_ms +=
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

ConjectureReport verify_conjecture(int n_max, int d, const SearchConfig& cfg) {
    if (d < 2) throw std::invalid_argument("the conjecture sweep needs d >= 2");
    if (n_max > kMaxPowerSet) throw std::invalid_argument("n_max must be <= 16");
    ConjectureReport rep;
    rep.d = d;
    rep.n_max = n_max;
    for (int n = d + 2; n <= n_max; ++n) {
        for (int k = 1; k <= n - d - 1; ++k) {
            SearchProblem prob{n, d, n - k, false, std::nullopt};
            ConjectureCell cell;
            cell.n = n;
            cell.k = k;
            cell.conjectured = star_value(n, d, k).value;
            try {
                EnumerateResult er = enumerate_optimal(prob, cfg);
                cell.exact = er.outcome.optimum;
                cell.match = (uint128{cell.exact} == cell.conjectured);
                cell.optimal_count = er.families.size();
                std::vector<SetFamily> stars;
                for (int x = 0; x < n; ++x) stars.push_back(build_star_family(n, x, d, k));
                std::sort(stars.begin(), stars.end(), family_less);
                stars.erase(std::unique(stars.begin(), stars.end()), stars.end());
                cell.unique_star = (er.families == stars);
            } catch (const BudgetExceededError&) {
                rep.complete = false;
                return rep;
            }
            rep.cells.push_back(cell);
        }
    }
    return rep;
}

FOracle exact_oracle(const SearchConfig& cfg) {
    auto memo = std::make_shared<std::map<std::tuple<int, int, int>, BoundValue>>();
    return [memo, cfg](int n, int d, int k) -> BoundValue {
        if (n < 0 || d < 1 || k < 0) throw std::invalid_argument("bad oracle query");
        if (n == 0)
            return k == 0 ? BoundValue{1, Status::proven, "empty ground set"}
                          : BoundValue{0, Status::proven, "empty size constraint"};
        if (k > n) return BoundValue{0, Status::proven, "empty size constraint"};
        if (d == 1) return k == 0 ? star_value(n, 1, 0) : f_d1(n, k);
        auto key = std::make_tuple(n, d, k);
        if (auto it = memo->find(key); it != memo->end()) return it->second;
        SearchProblem prob{n, d, n - k, false, std::nullopt};
        SearchOutcome out = max_simplex_free(prob, cfg);
        BoundValue v{out.optimum, Status::exact_by_search, "exhaustive complement search"};
        memo->emplace(key, v);
        return v;
    };
}

std::string serialize_outcome(const SearchOutcome& out, bool with_stats) {
    nlohmann::ordered_json j;
    j["schema"] = "simplexfree.search/1";
    if (out.decision.has_value()) j["decision"] = *out.decision;
    if (!out.decision.has_value() || *out.decision) {
        j["optimum"] = out.optimum;
        nlohmann::ordered_json w;
        w["n"] = out.witness.n;
        nlohmann::ordered_json sets = nlohmann::ordered_json::array();
        for (Mask m : out.witness.members) sets.push_back(elements_of(m));
        w["sets"] = sets;
        j["witness"] = w;
    }
    if (out.optimal_count.has_value()) j["optimal_count"] = *out.optimal_count;
    if (out.orbit_count.has_value()) j["orbit_count"] = *out.orbit_count;
    if (with_stats) {
        j["stats"] = {{"universe", out.stats.universe},
                      {"simplices", out.stats.simplices},
                      {"levels", out.stats.levels},
                      {"nodes", out.stats.nodes},
                      {"prunes", out.stats.prunes},
                      {"wall_ms", out.stats.wall_ms}};
    }
    return j.dump() + "\n";
}

} // namespace simplexfree
