#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace simplexfree {

// All extremal values are exact integers; 2^(n-1) growth with n <= 64 needs
// 128-bit headroom.  Overflow throws, never wraps.
using uint128 = unsigned __int128;

class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

inline uint128 checked_add(uint128 a, uint128 b) {
    uint128 s = a + b;
    if (s < a) throw OverflowError("integer overflow in addition");
    return s;
}

inline uint128 checked_sub(uint128 a, uint128 b) {
    if (b > a) throw OverflowError("integer underflow in subtraction");
    return a - b;
}

inline uint128 checked_mul(uint128 a, uint128 b) {
    if (a != 0 && b > ~uint128{0} / a) throw OverflowError("integer overflow in multiplication");
    return a * b;
}

inline uint128 pow2(int e) {
    if (e < 0 || e >= 128) throw OverflowError("2^e out of 128-bit range");
    return uint128{1} << e;
}

// binomial(n, r) with the total convention: 0 whenever r < 0 or r > n.
inline uint128 binomial(int n, int r) {
    if (r < 0 || r > n || n < 0) return 0;
    if (r > n - r) r = n - r;
    uint128 c = 1;
    for (int i = 1; i <= r; ++i) {
        c = checked_mul(c, static_cast<uint128>(n - r + i));
        c /= static_cast<uint128>(i);
    }
    return c;
}

inline std::string to_decimal(uint128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v != 0) {
        s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    return {s.rbegin(), s.rend()};
}

inline std::uint64_t to_u64(uint128 v) {
    if (v > ~std::uint64_t{0}) throw OverflowError("value exceeds 64 bits");
    return static_cast<std::uint64_t>(v);
}

} // namespace simplexfree
