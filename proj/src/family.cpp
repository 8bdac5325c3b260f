#include "simplexfree/family.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

namespace simplexfree {

namespace {

void check_ground(int n) {
    if (n < 1 || n > kMaxGround)
        throw FamilyParseError(ParseErrorKind::ground_out_of_range,
                               "ground size n must be in [1, 64], got " + std::to_string(n));
}

} // namespace

Mask mask_from_elements(std::span<const int> elements, int n) {
    Mask m = 0;
    for (int e : elements) {
        if (e < 0 || e >= n)
            throw FamilyParseError(ParseErrorKind::element_out_of_range,
                                   "element " + std::to_string(e) + " out of range for n=" +
                                       std::to_string(n));
        m |= Mask{1} << e;
    }
    return m;
}

std::vector<int> elements_of(Mask m) {
    std::vector<int> out;
    while (m != 0) {
        int e = std::countr_zero(m);
        out.push_back(e);
        m &= m - 1;
    }
    return out;
}

bool SetFamily::contains(Mask m) const {
    return std::binary_search(members.begin(), members.end(), m);
}

SetFamily SetFamily::make(int n, std::vector<Mask> masks) {
    check_ground(n);
    Mask full = full_mask(n);
    for (Mask m : masks) {
        if ((m & ~full) != 0)
            throw FamilyParseError(ParseErrorKind::element_out_of_range,
                                   "member has an element beyond the ground set");
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    return SetFamily{n, std::move(masks)};
}

bool family_less(const SetFamily& a, const SetFamily& b) {
    if (a.n != b.n) return a.n < b.n;
    return a.members < b.members;
}

SetFamily power_set(int n) {
    check_ground(n);
    if (n > kMaxPowerSet)
        throw std::invalid_argument("power_set: n must be <= 16");
    SetFamily fam;
    fam.n = n;
    fam.members.resize(std::size_t{1} << n);
    for (Mask m = 0; m < (Mask{1} << n); ++m) fam.members[m] = m;
    return fam;
}

ParsedFamily parse_family(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FamilyParseError(ParseErrorKind::malformed_syntax,
                               std::string("malformed family JSON: ") + e.what());
    }
    if (!doc.is_object() || doc.size() != 2 || !doc.contains("n") || !doc.contains("sets"))
        throw FamilyParseError(ParseErrorKind::malformed_syntax,
                               "family object must have exactly the keys \"n\" and \"sets\"");
    if (!doc["n"].is_number_integer())
        throw FamilyParseError(ParseErrorKind::malformed_syntax, "\"n\" must be an integer");
    long long n_raw = doc["n"].get<long long>();
    if (n_raw < 1 || n_raw > kMaxGround)
        throw FamilyParseError(ParseErrorKind::ground_out_of_range,
                               "ground size n must be in [1, 64], got " + std::to_string(n_raw));
    int n = static_cast<int>(n_raw);
    if (!doc["sets"].is_array())
        throw FamilyParseError(ParseErrorKind::malformed_syntax, "\"sets\" must be an array");

    std::vector<Mask> masks;
    for (const auto& set_node : doc["sets"]) {
        if (!set_node.is_array())
            throw FamilyParseError(ParseErrorKind::malformed_syntax,
                                   "every set must be an array of element indices");
        Mask m = 0;
        long long prev = -1;
        for (const auto& el : set_node) {
            if (!el.is_number_integer())
                throw FamilyParseError(ParseErrorKind::malformed_syntax,
                                       "set elements must be integers");
            long long e = el.get<long long>();
            if (e < 0 || e >= n)
                throw FamilyParseError(ParseErrorKind::element_out_of_range,
                                       "element " + std::to_string(e) + " out of range for n=" +
                                           std::to_string(n));
            if (e <= prev)
                throw FamilyParseError(ParseErrorKind::malformed_syntax,
                                       "set elements must be strictly increasing");
            prev = e;
            m |= Mask{1} << e;
        }
        masks.push_back(m);
    }

    std::size_t raw = masks.size();
    SetFamily fam = SetFamily::make(n, std::move(masks));
    return ParsedFamily{std::move(fam), static_cast<int>(raw - fam.members.size())};
}

std::string serialize_family(const SetFamily& fam) {
    std::string out = "{\"n\":" + std::to_string(fam.n) + ",\"sets\":[";
    bool first_set = true;
    for (Mask m : fam.members) {
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

namespace {

Mask remap(Mask m, std::span<const int> perm) {
    Mask out = 0;
    while (m != 0) {
        int e = std::countr_zero(m);
        m &= m - 1;
        out |= Mask{1} << perm[static_cast<std::size_t>(e)];
    }
    return out;
}

} // namespace

SetFamily apply_permutation(const SetFamily& fam, std::span<const int> perm) {
    if (static_cast<int>(perm.size()) != fam.n)
        throw std::invalid_argument("permutation size does not match ground size");
    Mask seen = 0;
    for (int p : perm) {
        if (p < 0 || p >= fam.n || (seen & (Mask{1} << p)) != 0)
            throw std::invalid_argument("permutation is not a bijection on 0..n-1");
        seen |= Mask{1} << p;
    }
    std::vector<Mask> mapped;
    mapped.reserve(fam.members.size());
    for (Mask m : fam.members) mapped.push_back(remap(m, perm));
    std::sort(mapped.begin(), mapped.end());
    return SetFamily{fam.n, std::move(mapped)};
}

SetFamily canonical_form(const SetFamily& fam) {
    if (fam.n > kMaxCanonical)
        throw std::invalid_argument("canonical_form: n must be <= 8 (factorial enumeration)");
    std::vector<int> perm(static_cast<std::size_t>(fam.n));
    for (int i = 0; i < fam.n; ++i) perm[static_cast<std::size_t>(i)] = i;

    std::vector<Mask> best = fam.members;
    std::vector<Mask> cur(fam.members.size());
    while (std::next_permutation(perm.begin(), perm.end())) {
        for (std::size_t i = 0; i < fam.members.size(); ++i) cur[i] = remap(fam.members[i], perm);
        std::sort(cur.begin(), cur.end());
        if (cur < best) best = cur;
    }
    return SetFamily{fam.n, std::move(best)};
}

LinkDecomposition decompose_by_outside(const SetFamily& fam, Mask pivot) {
    if ((pivot & ~full_mask(fam.n)) != 0)
        throw std::invalid_argument("pivot has an element beyond the ground set");
    Mask outside = full_mask(fam.n) & ~pivot;
    LinkDecomposition dec;
    dec.pivot = pivot;
    for (Mask a : fam.members) {
        Mask w = a & outside;
        auto [it, inserted] = dec.parts.try_emplace(w, SetFamily{fam.n, {}});
        it->second.members.push_back(a & pivot);
    }
    // A = W | (A & pivot) with disjoint bits, so within a part the traces
    // are distinct and inherit the ascending member order.
    return dec;
}

} // namespace simplexfree
