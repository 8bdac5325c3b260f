#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace simplexfree {

// A subset of the ground set {0..n-1} as a characteristic bit vector.
// Element i is present iff bit i is set; n <= 64.
using Mask = std::uint64_t;

constexpr int kMaxGround = 64;      // membership / detection operations
constexpr int kMaxPowerSet = 16;    // anything enumerating the full power set
constexpr int kMaxCanonical = 8;    // factorial relabeling enumeration

inline Mask full_mask(int n) {
    return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline int set_size(Mask m) { return std::popcount(m); }

Mask mask_from_elements(std::span<const int> elements, int n);
std::vector<int> elements_of(Mask m);

// Duplicate-free family of subsets of {0..n-1}; members strictly ascending
// by integer value of the mask, so iteration order is deterministic.
struct SetFamily {
    int n = 0;
    std::vector<Mask> members;

    bool operator==(const SetFamily&) const = default;
    std::size_t size() const { return members.size(); }
    bool contains(Mask m) const;

    // Validates the ground size and every member, sorts, and deduplicates.
    static SetFamily make(int n, std::vector<Mask> masks);
};

// Deterministic total order: by ground size, then member sequence.
bool family_less(const SetFamily& a, const SetFamily& b);

SetFamily power_set(int n);  // n <= kMaxPowerSet

enum class ParseErrorKind {
    malformed_syntax,
    element_out_of_range,
    ground_out_of_range,
};

class FamilyParseError : public std::runtime_error {
public:
    FamilyParseError(ParseErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}
    ParseErrorKind kind() const { return kind_; }

private:
    ParseErrorKind kind_;
};

struct ParsedFamily {
    SetFamily family;
    int duplicates_dropped = 0;
};

// Family file format: a UTF-8 JSON object with exactly the keys "n" and
// "sets", where "sets" is an array of arrays of strictly increasing
// 0-based element indices.
ParsedFamily parse_family(std::string_view text);

// Emits the canonical form of the format: members sorted by mask value,
// elements ascending, no whitespace, newline-terminated.  Bit-exact
// round-trip with parse_family.
std::string serialize_family(const SetFamily& fam);

// Relabels every member elementwise through perm (a bijection on 0..n-1).
SetFamily apply_permutation(const SetFamily& fam, std::span<const int> perm);

// Lexicographically least relabeling of fam over all n! permutations,
// comparing the sorted member sequences.  Idempotent, constant on orbits.
// Requires n <= kMaxCanonical.
SetFamily canonical_form(const SetFamily& fam);

// Splits fam by each member's trace outside the pivot Y: part W holds
// {A & Y : A in fam, A & ~Y == W}.  Part sizes always sum to |fam|.
struct LinkDecomposition {
    Mask pivot = 0;
    std::map<Mask, SetFamily> parts;
};

LinkDecomposition decompose_by_outside(const SetFamily& fam, Mask pivot);

} // namespace simplexfree
