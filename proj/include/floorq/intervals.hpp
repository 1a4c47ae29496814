// intervals.hpp
//
// Order intervals Q_a[d,n] with their incidence relation, the small/large
// decomposition Q_a^-(n) / Q_a^+(n), the floor-reciprocal map J_n, and the
// set- and poset-stabilization thresholds toward the divisor order.

#pragma once

#include <algorithm>
#include <cassert>
#include <vector>

#include "core.hpp"

namespace floorq {

// Exact divisor set of n, by trial division up to sqrt(n).
inline std::vector<u64> divisors(u64 n) {
    require_positive(n, "n");
    std::vector<u64> small, large;
    for (u64 d = 1; d <= n / d; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// J_n(k) = floor(n/k). An involution on Q_1[1,n]; defined for 1 <= k <= n.
inline u64 floor_reciprocal(u64 n, u64 k) {
    require_positive(n, "n");
    if (k == 0 || k > n) throw std::invalid_argument("floor_reciprocal: k must satisfy 1 <= k <= n");
    return n / k;
}

// Q_a[1,n], sorted ascending. Candidates are the floor quotients of n:
// {1..s} union {floor(n/k) : k <= s} with s = floor(sqrt(n)), at most 2s+1
// values, each tested in O(1).
inline std::vector<u64> floor_quotients_initial(u64 a, u64 n) {
    require_positive(a, "a");
    require_positive(n, "n");
    const u64 s = isqrt(n);
    std::vector<u64> out;
    out.reserve(2 * static_cast<size_t>(s));
    for (u64 d = 1; d <= s; ++d)
        if (is_a_floor_quotient(a, d, n)) out.push_back(d);
    u64 prev = 0;
    for (u64 k = s; k >= 1; --k) {       // floor(n/k) ascends as k descends
        const u64 v = n / k;
        if (v == prev || v <= s) continue;
        prev = v;
        if (is_a_floor_quotient(a, v, n)) out.push_back(v);
    }
    return out;
}

// |Q_a[1,n]| without materializing the set.
inline u64 count_floor_quotients_initial(u64 a, u64 n) {
    require_positive(a, "a");
    require_positive(n, "n");
    const u64 s = isqrt(n);
    u64 cnt = 0;
    for (u64 d = 1; d <= s; ++d)
        if (is_a_floor_quotient(a, d, n)) ++cnt;
    u64 prev = 0;
    for (u64 k = s; k >= 1; --k) {
        const u64 v = n / k;
        if (v == prev || v <= s) continue;
        prev = v;
        if (is_a_floor_quotient(a, v, n)) ++cnt;
    }
    return cnt;
}

// The interval Q_a[d,n] = { e : d <=_a e and e <=_a n } together with the
// full incidence relation restricted to its elements. Empty (elements = [])
// exactly when NOT d <=_a n; an empty interval is a value, not an error.
// Incidence is a dense row-major bit matrix: leq(i,j) <=> elements[i] <=_a elements[j].
struct OrderInterval {
    u64 a = 1;
    u64 lo = 1;
    u64 hi = 1;
    std::vector<u64> elements;
    std::vector<bool> incidence;

    size_t size() const { return elements.size(); }
    bool empty() const { return elements.empty(); }
    bool leq(size_t i, size_t j) const { return incidence[i * elements.size() + j]; }
};

inline OrderInterval interval(u64 a, u64 d, u64 n) {
    OrderInterval iv;
    iv.a = a;
    iv.lo = d;
    iv.hi = n;
    if (!is_a_floor_quotient(a, d, n)) return iv;
    for (u64 e : floor_quotients_initial(a, n))
        if (is_a_floor_quotient(a, d, e)) iv.elements.push_back(e);
    const size_t m = iv.elements.size();
    iv.incidence.assign(m * m, false);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i; j < m; ++j)   // e_i <=_a e_j needs e_i <= e_j
            iv.incidence[i * m + j] = is_a_floor_quotient(a, iv.elements[i], iv.elements[j]);
    return iv;
}

// Q_a^-(n) = { d in Q_a[1,n] : d <= sqrt(n) },
// Q_a^+(n) = { d in Q_a[1,n] : floor(n/d) <= sqrt(n) }.
// Union is Q_a[1,n]; overlap is at most the single element floor(sqrt(n)).
struct InitialDecomposition {
    u64 a = 1;
    u64 n = 1;
    std::vector<u64> minus;
    std::vector<u64> plus;
};

inline InitialDecomposition decomposition(u64 a, u64 n) {
    InitialDecomposition dec;
    dec.a = a;
    dec.n = n;
    const u64 s = isqrt(n);
    for (u64 d : floor_quotients_initial(a, n)) {
        if (d <= s) dec.minus.push_back(d);
        if (n / d <= s) dec.plus.push_back(d);
    }
    return dec;
}

namespace detail {

// Shared scan for the two stabilization thresholds. Linear in a from 1 with
// floor(n/2) as a hard stop; stabilization by then is a theorem, so running
// past the cap is a defect.
template <typename Accept>
u64 stabilization_scan(u64 n, Accept&& accept) {
    const u64 cap = std::max<u64>(1, n / 2);
    for (u64 a = 1; a <= cap; ++a)
        if (accept(a)) return a;
    assert(false && "Q_a[1,n] failed to stabilize by a = floor(n/2)");
    throw std::logic_error("stabilization threshold exceeded floor(n/2)");
}

} // namespace detail

// Smallest a with Q_a[1,n] equal to the divisors of n as a set.
inline u64 set_stabilization_threshold(u64 n) {
    require_positive(n, "n");
    const auto div = divisors(n);
    return detail::stabilization_scan(n, [&](u64 a) {
        return floor_quotients_initial(a, n) == div;
    });
}

// Smallest a with Q_a[1,n] equal to D[1,n] as a poset: same element set and
// no incidence beyond divisibility.
inline u64 poset_stabilization_threshold(u64 n) {
    require_positive(n, "n");
    const auto div = divisors(n);
    return detail::stabilization_scan(n, [&](u64 a) {
        if (floor_quotients_initial(a, n) != div) return false;
        for (size_t i = 0; i < div.size(); ++i)
            for (size_t j = i + 1; j < div.size(); ++j)
                if (div[j] % div[i] != 0 && is_a_floor_quotient(a, div[i], div[j]))
                    return false;
        return true;
    });
}

} // namespace floorq
