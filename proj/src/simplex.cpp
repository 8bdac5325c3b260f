#include "simplexfree/simplex.hpp"

#include <algorithm>

#include "simplexfree/bignum.hpp"

namespace simplexfree {

bool is_simplex(std::span<const Mask> sets, int d) {
    if (d < 1) throw std::invalid_argument("simplex dimension d must be >= 1");
    if (static_cast<int>(sets.size()) != d + 1)
        throw std::invalid_argument("a d-simplex needs exactly d+1 sets, got " +
                                    std::to_string(sets.size()));

    // Repeated sets never form a simplex.
    std::vector<Mask> sorted(sets.begin(), sets.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;

    std::size_t m = sorted.size();
    std::vector<Mask> prefix(m + 1), suffix(m + 1);
    prefix[0] = ~Mask{0};
    for (std::size_t i = 0; i < m; ++i) prefix[i + 1] = prefix[i] & sorted[i];
    suffix[m] = ~Mask{0};
    for (std::size_t i = m; i-- > 0;) suffix[i] = suffix[i + 1] & sorted[i];

    if (prefix[m] != 0) return false;  // total intersection must be empty
    for (std::size_t j = 0; j < m; ++j)
        if ((prefix[j] & suffix[j + 1]) == 0) return false;  // drop-one must be nonempty
    return true;
}

namespace {

// DFS over ascending member-index tuples.  A prefix of at most d sets whose
// running intersection is already empty cannot complete (any unused index
// of the final tuple would have an empty drop-one intersection), and
// neither the empty set nor the full ground set lies in any simplex, so
// both cuts are exact.
struct SimplexScan {
    const std::vector<Mask>& members;
    Mask full;
    int d;
    std::uint64_t nodes = 0;
    std::uint64_t node_budget = ~std::uint64_t{0};
    std::vector<int> chosen;
    std::vector<Mask> run;  // run[j] = intersection of first j chosen sets

    // Returns true to stop the walk (first hit wins for find mode).
    template <typename Emit>
    bool walk(int next_from, Emit&& emit) {
        int depth = static_cast<int>(chosen.size());
        int remaining = d + 1 - depth;
        int last = static_cast<int>(members.size()) - remaining;
        if (depth < d) {
            for (int i = next_from; i <= last; ++i) {
                Mask m = members[static_cast<std::size_t>(i)];
                if (m == 0 || m == full) continue;
                if (++nodes > node_budget)
                    throw BudgetExceededError("simplex enumeration budget exceeded", nodes);
                Mask r = run[static_cast<std::size_t>(depth)] & m;
                if (r == 0) continue;  // cannot complete
                chosen.push_back(i);
                run[static_cast<std::size_t>(depth) + 1] = r;
                if (walk(i + 1, emit)) return true;
                chosen.pop_back();
            }
            return false;
        }

        // Final position: the prefix holds d sets with nonempty running
        // intersection; the last set must empty it while meeting every
        // drop-one intersection of the prefix.
        std::vector<Mask> drop(static_cast<std::size_t>(d));
        {
            std::vector<Mask> suffix(static_cast<std::size_t>(d) + 1, ~Mask{0});
            for (int j = d; j-- > 0;)
                suffix[static_cast<std::size_t>(j)] =
                    suffix[static_cast<std::size_t>(j) + 1] &
                    members[static_cast<std::size_t>(chosen[static_cast<std::size_t>(j)])];
            for (int j = 0; j < d; ++j)
                drop[static_cast<std::size_t>(j)] =
                    run[static_cast<std::size_t>(j)] & suffix[static_cast<std::size_t>(j) + 1];
        }
        for (int i = next_from; i <= last; ++i) {
            Mask m = members[static_cast<std::size_t>(i)];
            if (m == 0 || m == full) continue;
            if (++nodes > node_budget)
                throw BudgetExceededError("simplex enumeration budget exceeded", nodes);
            if ((run[static_cast<std::size_t>(d)] & m) != 0) continue;
            bool ok = true;
            for (int j = 0; j < d && ok; ++j)
                ok = (drop[static_cast<std::size_t>(j)] & m) != 0;
            if (!ok) continue;
            chosen.push_back(i);
            bool stop = emit(chosen);
            chosen.pop_back();
            if (stop) return true;
        }
        return false;
    }
};

SimplexScan make_scan(const SetFamily& fam, int d) {
    if (d < 1) throw std::invalid_argument("simplex dimension d must be >= 1");
    SimplexScan scan{fam.members, full_mask(fam.n), d};
    scan.run.assign(static_cast<std::size_t>(d) + 1, ~Mask{0});
    scan.chosen.reserve(static_cast<std::size_t>(d) + 1);
    return scan;
}

} // namespace

std::optional<SimplexWitness> find_simplex(const SetFamily& fam, int d) {
    if (static_cast<int>(fam.members.size()) < d + 1) return std::nullopt;
    SimplexScan scan = make_scan(fam, d);
    std::optional<SimplexWitness> hit;
    scan.walk(0, [&](const std::vector<int>& idx) {
        SimplexWitness w{d, {}};
        w.sets.reserve(idx.size());
        for (int i : idx) w.sets.push_back(fam.members[static_cast<std::size_t>(i)]);
        hit = std::move(w);
        return true;
    });
    return hit;
}

std::vector<std::vector<int>> simplex_index_tuples(const SetFamily& universe, int d,
                                                   EnumerationBudget budget) {
    if (binomial(static_cast<int>(universe.members.size()), d + 1) > budget.max_tuples)
        throw BudgetExceededError("tuple space exceeds the enumeration budget", 0);
    std::vector<std::vector<int>> out;
    if (static_cast<int>(universe.members.size()) < d + 1) return out;
    SimplexScan scan = make_scan(universe, d);
    scan.node_budget = budget.max_tuples;
    scan.walk(0, [&](const std::vector<int>& idx) {
        out.push_back(idx);
        return false;
    });
    return out;  // DFS order is ascending-lexicographic, hence sorted
}

std::vector<SimplexWitness> enumerate_simplices(const SetFamily& universe, int d,
                                                EnumerationBudget budget) {
    std::vector<SimplexWitness> out;
    for (const auto& idx : simplex_index_tuples(universe, d, budget)) {
        SimplexWitness w{d, {}};
        w.sets.reserve(idx.size());
        for (int i : idx) w.sets.push_back(universe.members[static_cast<std::size_t>(i)]);
        out.push_back(std::move(w));
    }
    return out;
}

std::string serialize_witness(const SimplexWitness& w) {
    std::string out = "{\"d\":" + std::to_string(w.d) + ",\"sets\":[";
    bool first_set = true;
    for (Mask m : w.sets) {
        if (!first_set) out += ',';
        first_set = false;
        out += '[';
        bool first_el = true;
        for (int e : elements_of(m)) {
            if (!first_el) out += ',';
            first_el = false;
            out += std::to_string(e);
        }
        out += ']';
    }
    out += "]}\n";
    return out;
}

} // namespace simplexfree
