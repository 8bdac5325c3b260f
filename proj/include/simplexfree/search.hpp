#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "simplexfree/family.hpp"
#include "simplexfree/formulas.hpp"

namespace simplexfree {

// f(n,d,k)-style instance: maximum d-simplex-free family over subsets of
// size <= size_cap (default n).  require_max additionally demands a member
// of size exactly size_cap (the g quantities).  target switches to
// decision mode: is there such a family of size >= target?
struct SearchProblem {
    int n = 0;
    int d = 1;
    std::optional<int> size_cap;
    bool require_max = false;
    std::optional<std::uint64_t> target;
};

struct SearchStats {
    std::uint64_t universe = 0;   // constrained universe size
    std::uint64_t simplices = 0;  // hyperedges of the constraint hypergraph
    std::uint64_t nodes = 0;
    std::uint64_t prunes = 0;
    int levels = 0;               // deletion budgets tried
    double wall_ms = 0.0;
};

struct SearchConfig {
    int threads = 1;
    std::uint64_t node_budget = 100'000'000;
    std::uint64_t tuple_budget = 100'000'000;
    std::uint64_t list_budget = 1'000'000;  // enumeration output cap
    bool long_running = false;              // unlocks deep complements (d >= 2)
};

// Exact outcome; budget exhaustion throws BudgetExceededError instead of
// ever returning an unproven number.
struct SearchOutcome {
    std::uint64_t optimum = 0;
    SetFamily witness;
    std::optional<bool> decision;  // set in target mode
    std::optional<std::uint64_t> optimal_count;
    std::optional<std::uint64_t> orbit_count;
    SearchStats stats;
};

// Complement hitting-set branch and bound: enumerate every d-simplex over
// the constrained universe, then decide, for descending family sizes
// seeded by the star construction, whether deleting |universe| - size
// subsets can hit every simplex.  The first feasible size is the optimum
// and each smaller deletion budget has been exhausted.
SearchOutcome max_simplex_free(const SearchProblem& prob, const SearchConfig& cfg = {});

struct EnumerateResult {
    SearchOutcome outcome;
    std::vector<SetFamily> families;    // every optimal family, sorted
    std::vector<SetFamily> orbit_reps;  // distinct canonical forms (n <= 8)
};

// All families achieving the optimum, each re-verified simplex-free.
EnumerateResult enumerate_optimal(const SearchProblem& prob, const SearchConfig& cfg = {});

struct ConjectureCell {
    int n = 0;
    int k = 0;
    std::uint64_t exact = 0;
    uint128 conjectured = 0;
    bool match = false;
    bool unique_star = false;           // optimal families == star families
    std::uint64_t optimal_count = 0;
};

struct ConjectureReport {
    int d = 0;
    int n_max = 0;
    std::vector<ConjectureCell> cells;
    bool complete = true;  // false when a budget ran out mid-sweep
};

// Sweeps 1 <= k <= n-d-1 for every n <= n_max, comparing exact search
// values against the star formula.  Reports only the checked grid.
ConjectureReport verify_conjecture(int n_max, int d, const SearchConfig& cfg = {});

// Memoized exact f(n,d,k) supplier for lemma_bound: d = 1 cells use the
// proven closed form, d >= 2 cells run the complement search.
FOracle exact_oracle(const SearchConfig& cfg = {});

// Versioned JSON rendering of an outcome (stats block optional so output
// can be byte-reproducible).
std::string serialize_outcome(const SearchOutcome& out, bool with_stats);

} // namespace simplexfree
