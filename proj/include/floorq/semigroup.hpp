// semigroup.hpp
//
// The numerical semigroup M_a(d) of a-floor multiples of d: O(1) membership,
// minimal generators gamma_j = j(ad+1) + d, Frobenius number (d-1)(ad+1),
// genus (d-1)(ad+2)/2, and the counting function sigma_{a,d}(x).

#pragma once

#include <limits>
#include <vector>

#include "core.hpp"

namespace floorq {

namespace detail {

inline u64 narrow_u64(u128 v, const char* what) {
    if (v > std::numeric_limits<u64>::max())
        throw std::overflow_error(std::string(what) + " exceeds 64 bits");
    return static_cast<u64>(v);
}

} // namespace detail

// n in M_a(d) iff, writing n = k*d + j with 0 <= j < d, a*j < k.
// Coincides with is_a_floor_quotient(a, d, n) on every input.
inline bool is_member(u64 a, u64 d, u64 n) {
    require_positive(a, "a");
    require_positive(d, "d");
    require_positive(n, "n");
    const u64 k = n / d;
    const u64 j = n % d;
    return static_cast<u128>(a) * j < k;
}

struct FloorMultipleSemigroup {
    u64 a = 1;
    u64 d = 1;
    std::vector<u64> generators;   // gamma_j = j(ad+1) + d, strictly increasing
    u64 frobenius = 0;             // largest non-member; 0 at d = 1 (no positive gaps)
    u64 genus = 0;                 // number of positive non-members
};

inline FloorMultipleSemigroup floor_multiple_semigroup(u64 a, u64 d) {
    require_positive(a, "a");
    require_positive(d, "d");
    if (d > (u64{1} << 22))
        throw std::invalid_argument("floor_multiple_semigroup: d too large to materialize generators");

    FloorMultipleSemigroup sg;
    sg.a = a;
    sg.d = d;
    const u128 g = static_cast<u128>(a) * d + 1;      // gamma step ad+1
    sg.frobenius = detail::narrow_u64(static_cast<u128>(d - 1) * g, "frobenius");
    sg.genus = detail::narrow_u64((static_cast<u128>(d - 1) * g + (d - 1)) / 2, "genus");
    sg.generators.reserve(d);
    for (u64 j = 0; j < d; ++j)
        sg.generators.push_back(detail::narrow_u64(static_cast<u128>(j) * g + d, "generator"));
    return sg;
}

// sigma_{a,d}(x) = sum_{j=0}^{d-1} max(floor((x - j(ad+1))/d), 0)
// = |{ n <= x : d <=_a n }|. O(d); terms vanish once j(ad+1) > x.
inline u64 sigma(u64 a, u64 d, u64 x) {
    require_positive(a, "a");
    require_positive(d, "d");
    const u128 g = static_cast<u128>(a) * d + 1;
    u64 total = 0;
    u128 jg = 0;                                       // j * g
    for (u64 j = 0; j < d && jg <= x; ++j, jg += g)
        total += static_cast<u64>((x - jg) / d);
    return total;
}

// O(x) oracle path: count memberships directly.
inline u64 sigma_brute(u64 a, u64 d, u64 x) {
    require_positive(a, "a");
    require_positive(d, "d");
    u64 total = 0;
    for (u64 n = 1; n <= x; ++n)
        if (is_member(a, d, n)) ++total;
    return total;
}

} // namespace floorq
