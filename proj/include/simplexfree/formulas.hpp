#pragma once

#include <functional>
#include <string>
#include <utility>

#include "simplexfree/bignum.hpp"
#include "simplexfree/family.hpp"

namespace simplexfree {

// Every numeric result carries its proof status; presenting a conjecture
// as ground truth is a bug.
enum class Status {
    proven,
    conjectured,
    upper_bound,
    lower_bound,
    exact_by_search,
};

const char* status_name(Status s);

// proven > exact-by-search > upper/lower bound > conjectured; arithmetic
// over BoundValues keeps the weakest ingredient.
Status weakest_status(Status a, Status b);

struct BoundValue {
    uint128 value = 0;
    Status status = Status::conjectured;
    std::string provenance;
};

// Size of the star family with a capped containing-element part:
//   2^(n-1) + sum_{i<d} C(n-1,i) - sum_{i<k} C(n-1,i).
// Exact maximum for d <= 3 with k <= 1 and for every d = 1 cell; the
// conjectured maximum on 1 <= k <= n-d-1; a bare formula value elsewhere.
BoundValue star_value(int n, int d, int k = 0);

// d = 1 exact values: f(n,1,k) = g(n,1,k) = 2^(n-1) - sum_{j=1}^{k-1} C(n-1,j).
BoundValue f_d1(int n, int k);

// Triangle-free size-cap results: f(n,2,1) exactly, f(n,2,2) and f(n,2,3)
// as upper bounds.
struct MilnerBounds {
    BoundValue exact_k1;
    BoundValue cap_k2;
    BoundValue cap_k3;
};
MilnerBounds milner_bounds(int n);

// f-value supplier for the link-decomposition bound; k = 0 means the
// unrestricted f(n,d).  Implementations may mix proven, conjectured and
// search-exact values and must throw if a requested cell is unavailable.
using FOracle = std::function<BoundValue(int n, int d, int k)>;

// Link-decomposition bound on g(n,d,k):
//   f(n-k,d) + sum_{i=1}^{k} C(k,i) * f(n-k,d-1,i),
// purely arithmetic over the supplied oracle.
BoundValue lemma_bound(int n, int d, int k, const FOracle& oracle);

// Closed-form chain of the d = 2 link bound:
//   g(n,2,k) <= 2^(n-1) + C(n-k-1,0) + C(n-k-1,1) * (1 - C(k,2)).
BoundValue lemma_bound_d2(int n, int k);

// The two d = 4 comparison expressions; first exceeds second iff n >= 8.
std::pair<uint128, uint128> d4_gap(int n);

// The extremal construction: all sets containing x of size <= n-k plus
// all subsets of X \ {x} of size <= d-1.  |result| = star_value(n,d,k).
SetFamily build_star_family(int n, int x, int d, int k);

// Formula-backed total oracle (star_value plus the degenerate cells
// f(0,d) = 1, f(n,d,k) = 0 for k > n).
FOracle star_oracle();

} // namespace simplexfree
