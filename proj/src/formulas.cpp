#include "simplexfree/formulas.hpp"

#include <stdexcept>

namespace simplexfree {

const char* status_name(Status s) {
    switch (s) {
        case Status::proven: return "proven";
        case Status::conjectured: return "conjectured";
        case Status::upper_bound: return "upper-bound";
        case Status::lower_bound: return "lower-bound";
        case Status::exact_by_search: return "exact-by-search";
    }
    return "?";
}

namespace {

int strength(Status s) {
    switch (s) {
        case Status::proven: return 4;
        case Status::exact_by_search: return 3;
        case Status::upper_bound: return 2;
        case Status::lower_bound: return 2;
        case Status::conjectured: return 1;
    }
    return 0;
}

uint128 binom_prefix_sum(int n, int upto) {
    // sum_{i=0}^{upto-1} C(n, i); empty for upto <= 0
    uint128 s = 0;
    for (int i = 0; i < upto; ++i) s = checked_add(s, binomial(n, i));
    return s;
}

void check_star_args(int n, int d, int k) {
    if (n < 1 || n > kMaxGround) throw std::invalid_argument("n must be in [1, 64]");
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    if (k < 0 || k > n) throw std::invalid_argument("k must be in [0, n]");
}

} // namespace

Status weakest_status(Status a, Status b) { return strength(a) <= strength(b) ? a : b; }

BoundValue star_value(int n, int d, int k) {
    check_star_args(n, d, k);
    uint128 v = checked_add(pow2(n - 1), binom_prefix_sum(n - 1, d));
    v = checked_sub(v, binom_prefix_sum(n - 1, k));

    bool proven = (d == 1) || (d <= 3 && k <= 1);
    std::string tag;
    if (proven) {
        tag = "d=" + std::to_string(d) + " exact value";
    } else if (k <= 1) {
        tag = "conjectured extremal value; proven for all sufficiently large n";
    } else if (k <= n - d - 1) {
        tag = "conjectured extremal value";
    } else {
        tag = "formula value outside conjectured range";
    }
    return BoundValue{v, proven ? Status::proven : Status::conjectured, std::move(tag)};
}

BoundValue f_d1(int n, int k) {
    if (n < 1 || n > kMaxGround) throw std::invalid_argument("n must be in [1, 64]");
    if (k < 1 || k > n) throw std::invalid_argument("k must be in [1, n]");
    uint128 v = checked_sub(pow2(n - 1), checked_sub(binom_prefix_sum(n - 1, k), 1));
    return BoundValue{v, Status::proven, "d=1 exact value"};
}

MilnerBounds milner_bounds(int n) {
    if (n < 1 || n > kMaxGround) throw std::invalid_argument("n must be in [1, 64]");
    auto flag = [n](int k, std::string tag) {
        if (k > n) tag += "; k exceeds n (size constraint empty)";
        return tag;
    };
    MilnerBounds b;
    b.exact_k1 = BoundValue{checked_add(pow2(n - 1), binomial(n - 1, 1)), Status::proven,
                            flag(1, "d=2 exact value")};
    b.cap_k2 = BoundValue{checked_add(pow2(n - 1), 1), Status::upper_bound,
                          flag(2, "d=2 size-cap upper bound (k=2)")};
    b.cap_k3 = BoundValue{pow2(n - 1), Status::upper_bound,
                          flag(3, "d=2 size-cap upper bound (k=3)")};
    return b;
}

BoundValue lemma_bound(int n, int d, int k, const FOracle& oracle) {
    if (k < 1 || k > n) throw std::invalid_argument("lemma_bound needs n >= k >= 1");
    if (d < 2) throw std::invalid_argument("lemma_bound needs d >= 2");
    BoundValue head = oracle(n - k, d, 0);
    uint128 v = head.value;
    Status st = head.status;
    for (int i = 1; i <= k; ++i) {
        BoundValue part = oracle(n - k, d - 1, i);
        v = checked_add(v, checked_mul(binomial(k, i), part.value));
        st = weakest_status(st, part.status);
    }
    return BoundValue{v, st, "link-decomposition upper bound"};
}

BoundValue lemma_bound_d2(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("lemma_bound_d2 needs n >= k >= 1");
    __int128 v = static_cast<__int128>(pow2(n - 1)) + static_cast<__int128>(binomial(n - k - 1, 0)) +
                 static_cast<__int128>(binomial(n - k - 1, 1)) *
                     (static_cast<__int128>(1) - static_cast<__int128>(binomial(k, 2)));
    if (v < 0) throw OverflowError("d=2 chain bound became negative");
    return BoundValue{static_cast<uint128>(v), Status::upper_bound, "d=2 chain upper bound"};
}

std::pair<uint128, uint128> d4_gap(int n) {
    if (n < 4 || n > kMaxGround) throw std::invalid_argument("n must be in [4, 64]");
    uint128 first = pow2(n - 1);
    first = checked_add(first, binomial(n - 1, 2));
    first = checked_add(first, binomial(n - 1, 3));
    first = checked_add(first, binomial(n - 3, 2));
    uint128 second = pow2(n - 1);
    second = checked_add(second, binomial(n - 1, 1));
    second = checked_add(second, binomial(n - 1, 2));
    second = checked_add(second, binomial(n - 1, 3));
    return {first, second};
}

SetFamily build_star_family(int n, int x, int d, int k) {
    check_star_args(n, d, k);
    if (k > n - 1) throw std::invalid_argument("k must be in [0, n-1]");
    if (x < 0 || x >= n) throw std::invalid_argument("x must be in [0, n)");
    if (n > kMaxPowerSet)
        throw std::invalid_argument("build_star_family enumerates the power set; n must be <= 16");
    Mask xbit = Mask{1} << x;
    SetFamily fam;
    fam.n = n;
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
        int size = set_size(m);
        if ((m & xbit) != 0 ? size <= n - k : size <= d - 1) fam.members.push_back(m);
    }
    return fam;
}

FOracle star_oracle() {
    return [](int n, int d, int k) -> BoundValue {
        if (n < 0 || d < 1 || k < 0) throw std::invalid_argument("bad oracle query");
        if (n == 0)
            return k == 0 ? BoundValue{1, Status::proven, "empty ground set"}
                          : BoundValue{0, Status::proven, "empty size constraint"};
        if (k > n) return BoundValue{0, Status::proven, "empty size constraint"};
        return star_value(n, d, k);
    };
}

} // namespace simplexfree
