#pragma once

// Test-only brute-force oracles.  These stay deliberately independent of
// the library's detection and search paths: straight transliterations of
// the definitions, no pruning, no shared code.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "simplexfree/family.hpp"

namespace oracle {

using simplexfree::Mask;

inline bool is_simplex_naive(const std::vector<Mask>& sets, int d) {
    if (static_cast<int>(sets.size()) != d + 1) return false;
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if (sets[i] == sets[j]) return false;
    Mask total = ~Mask{0};
    for (Mask s : sets) total &= s;
    if (total != 0) return false;
    for (std::size_t j = 0; j < sets.size(); ++j) {
        Mask inter = ~Mask{0};
        for (std::size_t i = 0; i < sets.size(); ++i)
            if (i != j) inter &= sets[i];
        if (inter == 0) return false;
    }
    return true;
}

inline bool has_simplex_naive(const std::vector<Mask>& members, int d) {
    int m = static_cast<int>(members.size());
    if (m < d + 1) return false;
    std::vector<int> idx(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) idx[static_cast<std::size_t>(i)] = i;
    std::vector<Mask> tuple(static_cast<std::size_t>(d) + 1);
    while (true) {
        for (int i = 0; i <= d; ++i)
            tuple[static_cast<std::size_t>(i)] = members[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        if (is_simplex_naive(tuple, d)) return true;
        int pos = d;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - (d + 1 - pos)) --pos;
        if (pos < 0) return false;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i <= d; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i) - 1] + 1;
    }
}

// Every simplex over the universe, as a bitmask of universe indices.
inline std::vector<std::uint32_t> simplex_index_masks_naive(const std::vector<Mask>& universe,
                                                            int d) {
    if (universe.size() > 32) throw std::invalid_argument("oracle universe too large");
    std::vector<std::uint32_t> out;
    int m = static_cast<int>(universe.size());
    if (m < d + 1) return out;
    std::vector<int> idx(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) idx[static_cast<std::size_t>(i)] = i;
    std::vector<Mask> tuple(static_cast<std::size_t>(d) + 1);
    while (true) {
        std::uint32_t im = 0;
        for (int i = 0; i <= d; ++i) {
            tuple[static_cast<std::size_t>(i)] = universe[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            im |= std::uint32_t{1} << idx[static_cast<std::size_t>(i)];
        }
        if (is_simplex_naive(tuple, d)) out.push_back(im);
        int pos = d;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - (d + 1 - pos)) --pos;
        if (pos < 0) return out;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i <= d; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i) - 1] + 1;
    }
}

struct BruteResult {
    std::uint64_t optimum = 0;
    std::uint64_t count = 0;                            // families achieving the optimum
    std::vector<std::vector<Mask>> optima;              // member lists, sorted
};

// Enumerates every subfamily of the constrained universe directly.
// cap < 0 means no size cap; require_max demands a member of size == cap.
inline BruteResult brute_max_family(int n, int d, int cap = -1, bool require_max = false) {
    if (cap < 0) cap = n;
    std::vector<Mask> universe;
    for (Mask m = 0; m < (Mask{1} << n); ++m)
        if (simplexfree::set_size(m) <= cap) universe.push_back(m);
    if (universe.size() > 22) throw std::invalid_argument("brute force universe too large");

    std::vector<std::uint32_t> simplices = simplex_index_masks_naive(universe, d);
    std::uint32_t top = 0;
    for (std::size_t i = 0; i < universe.size(); ++i)
        if (simplexfree::set_size(universe[i]) == cap) top |= std::uint32_t{1} << i;

    BruteResult res;
    std::uint32_t fam_count = std::uint32_t{1} << universe.size();
    for (std::uint32_t fam = 0; fam < fam_count; ++fam) {
        if (require_max && (fam & top) == 0) continue;
        bool ok = true;
        for (std::uint32_t s : simplices)
            if ((s & fam) == s) {
                ok = false;
                break;
            }
        if (!ok) continue;
        auto size = static_cast<std::uint64_t>(std::popcount(fam));
        if (size > res.optimum) {
            res.optimum = size;
            res.count = 1;
            res.optima.clear();
        } else if (size == res.optimum) {
            ++res.count;
        } else {
            continue;
        }
        std::vector<Mask> members;
        for (std::size_t i = 0; i < universe.size(); ++i)
            if ((fam >> i) & 1u) members.push_back(universe[i]);
        res.optima.push_back(std::move(members));
        if (res.optima.size() > 100000) throw std::runtime_error("too many optima to collect");
    }
    std::sort(res.optima.begin(), res.optima.end());
    return res;
}

// Deterministic random families for the property suites.
inline simplexfree::SetFamily random_family(std::mt19937& rng, int max_n = 8, int max_members = 20) {
    std::uniform_int_distribution<int> n_dist(1, max_n);
    int n = n_dist(rng);
    std::uniform_int_distribution<int> size_dist(0, max_members);
    int want = size_dist(rng);
    std::uniform_int_distribution<std::uint64_t> mask_dist(0, (Mask{1} << n) - 1);
    std::vector<Mask> members;
    for (int i = 0; i < want; ++i) members.push_back(mask_dist(rng));
    return simplexfree::SetFamily::make(n, std::move(members));
}

inline std::vector<int> random_perm(std::mt19937& rng, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

} // namespace oracle
