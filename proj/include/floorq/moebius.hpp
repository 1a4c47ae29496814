// moebius.hpp
//
// Zeta and Moebius functions of the a-floor quotient orders on finite
// intervals, plus the classical Moebius function for the a -> infinity
// comparison (mu_D(d,n) = mu(n/d) if d | n, else 0).

#pragma once

#include <vector>

#include "intervals.hpp"

namespace floorq {

// Incidence indicator of <=_a.
inline int zeta(u64 a, u64 d, u64 n) { return is_a_floor_quotient(a, d, n) ? 1 : 0; }

// Classical Moebius function, by trial-division factorization.
inline int classical_moebius(u64 m) {
    require_positive(m, "m");
    int sign = 1;
    for (u64 p = 2; p <= m / p; ++p) {
        if (m % p != 0) continue;
        m /= p;
        if (m % p == 0) return 0;   // square factor
        sign = -sign;
    }
    if (m > 1) sign = -sign;
    return sign;
}

namespace detail {

inline i64 checked_add_i64(i64 x, i64 y) {
    i64 r;
    if (__builtin_add_overflow(x, y, &r))
        throw std::overflow_error("moebius value exceeds 64 bits");
    return r;
}

// mu(lo, e) for every element of the interval, by the defining recursion
// mu(lo,lo) = 1, mu(lo,m) = -sum_{lo <= e < m} mu(lo,e) over incident e.
// Ascending element order is a topological order since d <=_a e implies d <= e.
inline std::vector<i64> mu_row(const OrderInterval& iv, size_t row) {
    const size_t m = iv.size();
    std::vector<i64> mu(m, 0);
    mu[row] = 1;
    for (size_t j = row + 1; j < m; ++j) {
        if (!iv.leq(row, j)) continue;
        i64 acc = 0;
        for (size_t e = row; e < j; ++e)
            if (iv.leq(e, j)) acc = checked_add_i64(acc, mu[e]);
        mu[j] = checked_add_i64(0, -acc);
    }
    return mu;
}

} // namespace detail

// Moebius values over an interval. mu[i] = mu_a(lo, elements[i]); full_mu,
// when requested, is the whole m*m matrix mu_a(e_i, e_j) (the convolution
// inverse of the incidence matrix).
struct MoebiusTable {
    OrderInterval interval;
    std::vector<i64> mu;
    std::vector<i64> full_mu;

    bool has_full() const { return !full_mu.empty() || interval.empty(); }
    i64 full(size_t i, size_t j) const { return full_mu[i * interval.size() + j]; }
};

inline MoebiusTable moebius_table(u64 a, u64 d, u64 n, bool with_full = false) {
    MoebiusTable t;
    t.interval = interval(a, d, n);
    if (t.interval.empty()) return t;
    t.mu = detail::mu_row(t.interval, 0);
    if (with_full) {
        const size_t m = t.interval.size();
        t.full_mu.assign(m * m, 0);
        for (size_t i = 0; i < m; ++i) {
            const auto row = detail::mu_row(t.interval, i);
            for (size_t j = i; j < m; ++j) t.full_mu[i * m + j] = row[j];
        }
    }
    return t;
}

// mu_a(d, n); zero for incomparable pairs (Rota's convention).
inline i64 moebius_value(u64 a, u64 d, u64 n) {
    if (!is_a_floor_quotient(a, d, n)) return 0;
    const auto t = moebius_table(a, d, n);
    return t.mu.back();
}

} // namespace floorq
