// core.hpp
//
// The a-floor quotient relation d <=_a n on the positive integers:
// membership predicates (each of the six equivalent characterizations),
// cutting-length sets, quotient discrepancy, and scaling sets.
//
// All inputs are 64-bit unsigned; every intermediate product (a*n, a*d, k*a*d)
// is computed in unsigned __int128, so the full 64-bit input range is exact.

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace floorq {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline void require_positive(u64 v, const char* name) {
    if (v == 0) throw std::invalid_argument(std::string(name) + " must be a positive integer");
}

// Largest s with s*s <= n, exact for all u64.
inline u64 isqrt(u64 n) {
    if (n == 0) return 0;
    u64 s = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (s > 0 && s > n / s) --s;        // s*s > n
    while (s + 1 <= n / (s + 1)) ++s;      // (s+1)*(s+1) <= n
    return s;
}

// delta(d,n) = n - d*floor(n/d), the remainder of n mod d.
// 0 <= delta < d; zero exactly when d | n; delta < floor(n/d) exactly when
// d is a 1-floor quotient of n.
inline u64 quotient_discrepancy(u64 d, u64 n) {
    require_positive(d, "d");
    require_positive(n, "n");
    return n % d;
}

// d <=_a n, decided by reciprocal duality: a*d == floor(a*n / floor(n/d)).
// O(1). d > n is defined as false (forced by d <=_a n => d <= n).
inline bool is_a_floor_quotient(u64 a, u64 d, u64 n) {
    require_positive(a, "a");
    require_positive(d, "d");
    require_positive(n, "n");
    if (d > n) return false;
    const u64 q = n / d;
    return static_cast<u128>(a) * d == static_cast<u128>(a) * n / q;
}

// a=1 special case: d = floor(n/k) for some k.
inline bool is_floor_quotient(u64 d, u64 n) { return is_a_floor_quotient(1, d, n); }

// K_a(d,n) = { k : floor(an/(ad+1)) < k <= floor(n/d) }, the set of witnesses
// with a*d = floor(a*n/k). Nonempty exactly when d <=_a n.
struct CuttingLengthSet {
    u64 lo_exclusive = 0;
    u64 hi_inclusive = 0;

    bool empty() const { return lo_exclusive >= hi_inclusive; }
    u64 size() const { return empty() ? 0 : hi_inclusive - lo_exclusive; }
    bool contains(u64 k) const { return k > lo_exclusive && k <= hi_inclusive; }
};

inline CuttingLengthSet cutting_lengths(u64 a, u64 d, u64 n) {
    require_positive(a, "a");
    require_positive(d, "d");
    require_positive(n, "n");
    CuttingLengthSet k;
    k.lo_exclusive = static_cast<u64>(static_cast<u128>(a) * n / (static_cast<u128>(a) * d + 1));
    k.hi_inclusive = d <= n ? n / d : 0;
    return k;
}

// The six equivalent characterizations of d <=_a n, evaluated independently.
// Agreement of all six is a theorem; the suite exposes the individual verdicts
// so a disagreement surfaces as a test failure rather than a hidden assert.
struct SixCharacterizations {
    bool cutting = false;            // exists k with a*d = floor(a*n/k)
    bool covering = false;           // exists k with k*[d, d+1/a) covering [n, n+1/a)
    bool intersection = false;       // exists k with k*[d, d+1/a) meeting [n, n+1/a)
    bool strong_remainder = false;   // n = d*k + r with 0 <= r < min(d, k/a)
    bool tipping_point = false;      // floor(n/d) > floor(n/(d + 1/a))
    bool reciprocal_duality = false; // a*d = floor(a*n / floor(n/d))

    bool all_agree() const {
        return cutting == covering && covering == intersection &&
               intersection == strong_remainder && strong_remainder == tipping_point &&
               tipping_point == reciprocal_duality;
    }
};

// The existential searches in (1)-(3) run over 1 <= k <= n in exact integer
// arithmetic. All three conditions force k*a*d <= a*n, i.e. k <= n/d, so the
// scan stops there; larger k cannot satisfy any of them.
inline SixCharacterizations characterization_suite(u64 a, u64 d, u64 n) {
    require_positive(a, "a");
    require_positive(d, "d");
    require_positive(n, "n");
    SixCharacterizations c;

    const u128 an = static_cast<u128>(a) * n;
    const u128 ad = static_cast<u128>(a) * d;
    const u64 kmax = d <= n ? n / d : 0;
    for (u64 k = 1; k <= kmax; ++k) {
        if (an / k == ad) c.cutting = true;
        const u128 kad = k * ad;                      // <= an by k <= n/d
        if (kad <= an && an + 1 <= kad + k) c.covering = true;
        if (kad <= an && an < kad + k) c.intersection = true;
        if (c.cutting && c.covering && c.intersection) break;
    }

    if (d <= n) {
        const u64 k = n / d;
        const u64 r = n % d;                          // r < d by construction
        c.strong_remainder = static_cast<u128>(a) * r < k;
        c.tipping_point = k > static_cast<u64>(an / (ad + 1));
        c.reciprocal_duality = ad == an / k;
    }
    return c;
}

// S(d,n) = { a : d <=_a n }: all of N+, an initial segment {1..bound}, or empty.
enum class ScalingKind { All, Initial, Empty };

struct ScalingSet {
    ScalingKind kind = ScalingKind::Empty;
    u64 bound = 0;   // a~(d,n), meaningful only when kind == Initial

    bool contains(u64 a) const {
        switch (kind) {
            case ScalingKind::All: return true;
            case ScalingKind::Initial: return a >= 1 && a <= bound;
            default: return false;
        }
    }
};

// Trichotomy: divisors give All; 1-floor quotients that are not divisors give
// the initial segment up to the largest integer strictly below floor(n/d)/delta,
// computed exactly as (q-1)/delta; everything else (including d > n) is Empty.
inline ScalingSet scaling_set(u64 d, u64 n) {
    require_positive(d, "d");
    require_positive(n, "n");
    if (d > n) return {ScalingKind::Empty, 0};
    const u64 q = n / d;
    const u64 delta = n % d;
    if (delta == 0) return {ScalingKind::All, 0};
    if (delta >= q) return {ScalingKind::Empty, 0};   // d is not a 1-floor quotient of n
    return {ScalingKind::Initial, (q - 1) / delta};
}

} // namespace floorq
