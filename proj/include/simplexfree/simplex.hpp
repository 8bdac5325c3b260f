#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "simplexfree/family.hpp"

namespace simplexfree {

// d+1 distinct sets whose total intersection is empty while every
// drop-one intersection is nonempty.  Sets are stored ascending.
struct SimplexWitness {
    int d = 0;
    std::vector<Mask> sets;

    bool operator==(const SimplexWitness&) const = default;
};

// Order-insensitive test of the defining property over exactly d+1 sets.
// Throws on wrong arity or d < 1.
bool is_simplex(std::span<const Mask> sets, int d);

// Lexicographically least d-simplex among the members of fam, under the
// family's deterministic member order; nullopt if fam is d-simplex-free.
std::optional<SimplexWitness> find_simplex(const SetFamily& fam, int d);

class BudgetExceededError : public std::runtime_error {
public:
    BudgetExceededError(const std::string& what, std::uint64_t spent)
        : std::runtime_error(what), spent_(spent) {}
    std::uint64_t spent() const { return spent_; }

private:
    std::uint64_t spent_ = 0;
};

struct EnumerationBudget {
    std::uint64_t max_tuples = 100'000'000;
};

// Every d-simplex whose members lie in universe, sorted by member tuple.
// The search prunes (empty running intersection cannot complete; the empty
// set and the full set lie in no simplex) are exact: no witness is missed.
// Exceeding the tuple budget throws BudgetExceededError so callers can
// fall back to lazy detection.
std::vector<SimplexWitness> enumerate_simplices(const SetFamily& universe, int d,
                                                EnumerationBudget budget = {});

// Same enumeration as index tuples into universe.members; the constraint
// hypergraph consumed by the search module.
std::vector<std::vector<int>> simplex_index_tuples(const SetFamily& universe, int d,
                                                   EnumerationBudget budget = {});

// {"d":d,"sets":[...]} using the family element-list convention.
std::string serialize_witness(const SimplexWitness& w);

} // namespace simplexfree
