#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "simplexfree/family.hpp"
#include "simplexfree/formulas.hpp"
#include "simplexfree/simplex.hpp"

using namespace simplexfree;

namespace {

SetFamily fam_of(int n, std::vector<Mask> masks) { return SetFamily::make(n, std::move(masks)); }

} // namespace

TEST_CASE("parse_family reads the documented examples") {
    ParsedFamily p = parse_family(R"({"n":3,"sets":[[0],[0,1],[]]})");
    CHECK(p.family.n == 3);
    CHECK(p.family.members == std::vector<Mask>{0b000, 0b001, 0b011});
    CHECK(p.duplicates_dropped == 0);

    ParsedFamily dup = parse_family(R"({"n":2,"sets":[[0],[0]]})");
    CHECK(dup.family.members == std::vector<Mask>{0b01});
    CHECK(dup.duplicates_dropped == 1);
}

TEST_CASE("parse_family rejects each malformed input with its own diagnostic") {
    auto kind_of = [](const char* text) {
        try {
            parse_family(text);
        } catch (const FamilyParseError& e) {
            return e.kind();
        }
        throw std::runtime_error("expected a parse error");
    };
    CHECK(kind_of(R"({"n":2,"sets":[[5]]})") == ParseErrorKind::element_out_of_range);
    CHECK(kind_of(R"({"n":2,"sets":[[-1]]})") == ParseErrorKind::element_out_of_range);
    CHECK(kind_of(R"({"n":0,"sets":[]})") == ParseErrorKind::ground_out_of_range);
    CHECK(kind_of(R"({"n":65,"sets":[]})") == ParseErrorKind::ground_out_of_range);
    CHECK(kind_of(R"({"n":2,"sets":[[0,)") == ParseErrorKind::malformed_syntax);
    CHECK(kind_of(R"({"n":2,"sets":[[1,0]]})") == ParseErrorKind::malformed_syntax);
    CHECK(kind_of(R"({"n":2,"sets":[[0,0]]})") == ParseErrorKind::malformed_syntax);
    CHECK(kind_of(R"({"n":2,"sets":[],"x":1})") == ParseErrorKind::malformed_syntax);
    CHECK(kind_of(R"({"n":2})") == ParseErrorKind::malformed_syntax);
    CHECK(kind_of(R"([1,2])") == ParseErrorKind::malformed_syntax);
}

TEST_CASE("serialize_family emits the canonical byte form") {
    CHECK(serialize_family(fam_of(2, {0b00, 0b01})) == "{\"n\":2,\"sets\":[[],[0]]}\n");
    CHECK(serialize_family(fam_of(3, {})) == "{\"n\":3,\"sets\":[]}\n");
    // serialize . parse canonically reorders unsorted input
    ParsedFamily p = parse_family(R"({"n":3,"sets":[[1,2],[0],[]]})");
    CHECK(serialize_family(p.family) == "{\"n\":3,\"sets\":[[],[0],[1,2]]}\n");
}

TEST_CASE("parse . serialize is the identity on valid families") {
    std::mt19937 rng(20240901);
    for (int iter = 0; iter < 4000; ++iter) {
        SetFamily fam = oracle::random_family(rng);
        ParsedFamily back = parse_family(serialize_family(fam));
        CHECK(back.family == fam);
        CHECK(back.duplicates_dropped == 0);
    }
}

TEST_CASE("apply_permutation relabels and composes") {
    SetFamily fam = fam_of(2, {0b01, 0b11});
    std::vector<int> swap01{1, 0};
    CHECK(apply_permutation(fam, swap01) == fam_of(2, {0b10, 0b11}));
    std::vector<int> id{0, 1};
    CHECK(apply_permutation(fam, id) == fam);

    std::mt19937 rng(7);
    for (int iter = 0; iter < 3000; ++iter) {
        SetFamily f = oracle::random_family(rng);
        std::vector<int> perm = oracle::random_perm(rng, f.n);
        std::vector<int> inv(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i)
            inv[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
        SetFamily g = apply_permutation(f, perm);
        CHECK(apply_permutation(g, inv) == f);
        CHECK(g.size() == f.size());
        // member sizes as a multiset are preserved
        std::vector<int> sa, sb;
        for (Mask m : f.members) sa.push_back(set_size(m));
        for (Mask m : g.members) sb.push_back(set_size(m));
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        CHECK(sa == sb);
    }

    std::vector<int> not_bij{0, 0};
    CHECK_THROWS_AS(apply_permutation(fam, not_bij), std::invalid_argument);
    std::vector<int> wrong_size{0};
    CHECK_THROWS_AS(apply_permutation(fam, wrong_size), std::invalid_argument);
}

TEST_CASE("relabeling preserves simplex existence") {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 1500; ++iter) {
        SetFamily f = oracle::random_family(rng, 6, 12);
        std::vector<int> perm = oracle::random_perm(rng, f.n);
        SetFamily g = apply_permutation(f, perm);
        for (int d = 1; d <= 3; ++d)
            CHECK(find_simplex(f, d).has_value() == find_simplex(g, d).has_value());
    }
}

TEST_CASE("canonical_form picks the least relabeling and is idempotent") {
    SetFamily fam = fam_of(2, {0b10, 0b11});
    CHECK(canonical_form(fam) == fam_of(2, {0b01, 0b11}));

    std::mt19937 rng(13);
    for (int iter = 0; iter < 800; ++iter) {
        SetFamily f = oracle::random_family(rng, 5, 12);
        SetFamily c = canonical_form(f);
        CHECK(canonical_form(c) == c);
        std::vector<int> perm = oracle::random_perm(rng, f.n);
        CHECK(canonical_form(apply_permutation(f, perm)) == c);
        CHECK(c.members <= f.members);
    }

    SetFamily big = fam_of(9, {0b1, 0b11});
    CHECK_THROWS_AS(canonical_form(big), std::invalid_argument);
}

TEST_CASE("star families around different centers share one canonical form") {
    SetFamily c0 = canonical_form(build_star_family(4, 0, 3, 0));
    for (int x = 1; x < 4; ++x)
        CHECK(canonical_form(build_star_family(4, x, 3, 0)) == c0);
}

TEST_CASE("decompose_by_outside splits the cube example") {
    SetFamily cube = power_set(3);
    LinkDecomposition dec = decompose_by_outside(cube, 0b011);
    REQUIRE(dec.parts.size() == 2);
    CHECK(dec.parts.at(0b000).members == power_set(2).members);
    CHECK(dec.parts.at(0b100).members == power_set(2).members);
    CHECK(dec.parts.at(0b000).size() + dec.parts.at(0b100).size() == cube.size());

    // pivot = X collapses to a single part equal to the family
    LinkDecomposition whole = decompose_by_outside(cube, full_mask(3));
    REQUIRE(whole.parts.size() == 1);
    CHECK(whole.parts.at(0).members == cube.members);

    CHECK_THROWS_AS(decompose_by_outside(cube, Mask{1} << 5), std::invalid_argument);
}

TEST_CASE("link parts of the n=5 extremal family") {
    // Decomposing by a largest proper member: the trace family at W = {}
    // inherits 3-simplex-freeness from the whole family, while each
    // nonempty W yields a triangle-free part.  (The W = {} part does
    // contain plain triangles; only the d-level claim holds there.)
    SetFamily star = build_star_family(5, 0, 3, 0);
    LinkDecomposition dec = decompose_by_outside(star, 0b01111);

    std::size_t total = 0;
    for (const auto& [w, part] : dec.parts) total += part.size();
    CHECK(total == star.size());

    const SetFamily& inner = dec.parts.at(0b00000);
    CHECK_FALSE(find_simplex(inner, 3).has_value());
    CHECK(find_simplex(inner, 2).has_value());
    const SetFamily& lifted = dec.parts.at(0b10000);
    CHECK_FALSE(find_simplex(lifted, 2).has_value());
}

TEST_CASE("part sizes always sum to the family size") {
    for (int n = 1; n <= 3; ++n) {
        int u = 1 << n;
        for (std::uint32_t pick = 0; pick < (1u << u); ++pick) {
            std::vector<Mask> members;
            for (int i = 0; i < u; ++i)
                if ((pick >> i) & 1u) members.push_back(static_cast<Mask>(i));
            SetFamily fam = fam_of(n, std::move(members));
            for (Mask pivot = 0; pivot < (Mask{1} << n); ++pivot) {
                LinkDecomposition dec = decompose_by_outside(fam, pivot);
                std::size_t total = 0;
                for (const auto& [w, part] : dec.parts) {
                    total += part.size();
                    for (Mask m : part.members) CHECK((m & ~pivot) == 0);
                }
                CHECK(total == fam.size());
            }
        }
    }
    std::mt19937 rng(17);
    for (int iter = 0; iter < 2000; ++iter) {
        SetFamily fam = oracle::random_family(rng);
        std::uniform_int_distribution<std::uint64_t> mask_dist(0, full_mask(fam.n));
        Mask pivot = mask_dist(rng);
        LinkDecomposition dec = decompose_by_outside(fam, pivot);
        std::size_t total = 0;
        for (const auto& [w, part] : dec.parts) total += part.size();
        CHECK(total == fam.size());
    }
}

TEST_CASE("SetFamily::make validates, sorts and deduplicates") {
    SetFamily fam = SetFamily::make(3, {0b101, 0b001, 0b101});
    CHECK(fam.members == std::vector<Mask>{0b001, 0b101});
    CHECK_THROWS_AS(SetFamily::make(2, {0b100}), FamilyParseError);
    CHECK_THROWS_AS(SetFamily::make(0, {}), FamilyParseError);
    CHECK(power_set(4).size() == 16);
}
