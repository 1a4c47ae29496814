// analytics.hpp
//
// Aggregate quantities over the a-floor quotient orders: the summatory
// interval size sum_{n<=x} |Q_a[1,n]| by two independent routes (direct
// enumeration and the sigma identity), the averaged-size report against
// (4/3)sqrt(x/a), the three-region split of the sigma sum, the small/large
// median split, per-n survey rows for figure data, and the seeded
// random-acceptance model behind the size heuristic.
//
// Integer outputs are exact; double-valued outputs carry no exactness claims.

#pragma once

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <random>
#include <thread>
#include <vector>

#include "intervals.hpp"
#include "semigroup.hpp"

namespace floorq {

inline constexpr u64 kDefaultMaxX = 1000000;        // soft cap for summatory sweeps
inline constexpr u64 kDefaultMaxSurveyN = 100000;   // soft cap for survey length

namespace detail {

inline void check_cap(u64 x, u64 cap, const char* what) {
    if (x > cap)
        throw std::invalid_argument(std::string(what) + " exceeds the soft cap (" +
                                    std::to_string(cap) + "); raise FLOORQ_MAX_X to override");
}

// Visit every element of Q_a[1,n] in ascending order, allocation-free.
template <typename Fn>
void for_each_floor_quotient(u64 a, u64 n, Fn&& fn) {
    const u64 s = isqrt(n);
    for (u64 d = 1; d <= s; ++d)
        if (is_a_floor_quotient(a, d, n)) fn(d);
    u64 prev = 0;
    for (u64 k = s; k >= 1; --k) {
        const u64 v = n / k;
        if (v == prev || v <= s) continue;
        prev = v;
        if (is_a_floor_quotient(a, v, n)) fn(v);
    }
}

} // namespace detail

// sum_{n=1}^{x} |Q_a[1,n]|, direct route: O(sqrt n) per term.
inline u64 interval_size_sum(u64 a, u64 x, u64 max_x = kDefaultMaxX) {
    require_positive(a, "a");
    require_positive(x, "x");
    detail::check_cap(x, max_x, "x");
    u64 total = 0;
    for (u64 n = 1; n <= x; ++n)
        total += count_floor_quotients_initial(a, n);
    return total;
}

// Same quantity through the key identity sum_d sigma_{a,d}(x); an independent
// implementation path that must agree exactly with the direct route.
inline u64 interval_size_sum_via_sigma(u64 a, u64 x, u64 max_x = kDefaultMaxX) {
    require_positive(a, "a");
    require_positive(x, "x");
    detail::check_cap(x, max_x, "x");
    u64 total = 0;
    for (u64 d = 1; d <= x; ++d)
        total += sigma(a, d, x);
    return total;
}

struct AverageSizeReport {
    double average = 0;          // interval_size_sum(a,x) / x
    double predicted = 0;        // (4/3) sqrt(x/a)
    double relative_error = 0;   // |average/predicted - 1|
};

inline AverageSizeReport average_size_report(u64 a, u64 x, u64 max_x = kDefaultMaxX) {
    AverageSizeReport r;
    r.average = static_cast<double>(interval_size_sum(a, x, max_x)) / static_cast<double>(x);
    r.predicted = (4.0 / 3.0) * std::sqrt(static_cast<double>(x) / static_cast<double>(a));
    r.relative_error = std::abs(r.average / r.predicted - 1.0);
    return r;
}

// Expected counts from the three-region heuristic; total = 2 sqrt(n/a).
struct HeuristicEstimate {
    double e_small = 0;    // sqrt(n/a)
    double e_medium = 0;   // (1/sqrt(a) - 1/a) sqrt(n)
    double e_large = 0;    // (1/a) sqrt(n)
    double total = 0;
};

inline HeuristicEstimate heuristic_estimate(u64 a, u64 n) {
    require_positive(a, "a");
    require_positive(n, "n");
    HeuristicEstimate h;
    const double sa = std::sqrt(static_cast<double>(a));
    const double sn = std::sqrt(static_cast<double>(n));
    h.e_small = sn / sa;
    h.e_medium = (1.0 / sa - 1.0 / a) * sn;
    h.e_large = sn / a;
    h.total = h.e_small + h.e_medium + h.e_large;
    return h;
}

// sum_n |Q_a[1,n] intersect [1, sqrt(n/a)]| (d counted below iff a*d*d <= n)
// and its complement within the full interval size sum.
struct MedianSplitSums {
    u64 below = 0;
    u64 above = 0;
};

inline MedianSplitSums median_split_sums(u64 a, u64 x, u64 max_x = kDefaultMaxX) {
    require_positive(a, "a");
    require_positive(x, "x");
    detail::check_cap(x, max_x, "x");
    MedianSplitSums ms;
    for (u64 n = 1; n <= x; ++n)
        detail::for_each_floor_quotient(a, n, [&](u64 d) {
            if (static_cast<u128>(a) * d * d <= n) ++ms.below; else ++ms.above;
        });
    return ms;
}

// Three-way split of sum_d sigma_{a,d}(x) at d = sqrt(x/a) and d = sqrt(x),
// computed through the identity sum_{d<=y} sigma_{a,d}(x) = sum_n |Q_a[1,n] cap [1,y]|.
struct RegionSums {
    u64 small = 0;    // a*d*d <= x
    u64 medium = 0;   // a*d*d > x, d*d <= x
    u64 large = 0;    // d*d > x
};

inline RegionSums region_sums(u64 a, u64 x, u64 max_x = kDefaultMaxX) {
    require_positive(a, "a");
    require_positive(x, "x");
    detail::check_cap(x, max_x, "x");
    RegionSums rs;
    for (u64 n = 1; n <= x; ++n)
        detail::for_each_floor_quotient(a, n, [&](u64 d) {
            const u128 dd = static_cast<u128>(d) * d;
            if (static_cast<u128>(a) * dd <= x) ++rs.small;
            else if (dd <= x) ++rs.medium;
            else ++rs.large;
        });
    return rs;
}

// One per-n record for figure/CSV emission. Unrequested columns stay zero.
struct SurveyRow {
    u64 n = 0;
    u64 size_minus = 0;
    u64 size_plus = 0;
    u64 size_total = 0;
    u64 set_threshold = 0;
    u64 poset_threshold = 0;
    double sim_minus = 0;   // filled only by the seeded simulation
    double sim_plus = 0;
};

// Section-5.2 random-acceptance model: each cutting length k in the medium
// and large regions is accepted with probability 1/a via an independently
// drawn residue. Reported for comparison plots, never asserted.
struct SimulatedDecomposition {
    double sim_minus = 0;   // floor(sqrt(n/a)) + accepted medium-region k
    double sim_plus = 0;    // accepted large-region k
};

inline SimulatedDecomposition simulate_random_quotients(u64 a, u64 n, u64 seed) {
    require_positive(a, "a");
    require_positive(n, "n");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<u64> residue(0, a - 1);
    const u64 s = isqrt(n);
    const u64 san = isqrt(detail::narrow_u64(static_cast<u128>(a) * n, "a*n in simulation"));
    u64 accepted_medium = 0, accepted_large = 0;
    for (u64 k = s; k < san; ++k)                 // sqrt(n) <= k < sqrt(a*n)
        if (residue(rng) == 0) ++accepted_medium;
    for (u64 k = 1; k <= s; ++k)                  // 1 <= k <= sqrt(n)
        if (residue(rng) == 0) ++accepted_large;
    SimulatedDecomposition sim;
    sim.sim_minus = static_cast<double>(isqrt(n / a) + accepted_medium);
    sim.sim_plus = static_cast<double>(accepted_large);
    return sim;
}

struct SurveyOptions {
    bool sizes = true;
    bool thresholds = true;
    unsigned jobs = 1;
    bool simulate = false;
    u64 seed = 0;            // per-row stream seeded with seed ^ n
    u64 max_n = kDefaultMaxSurveyN;
};

// One row per n in [1, n_max]; deterministic output for fixed inputs
// regardless of the worker count.
inline std::vector<SurveyRow> survey(u64 a, u64 n_max, const SurveyOptions& opt = {}) {
    require_positive(a, "a");
    require_positive(n_max, "n_max");
    detail::check_cap(n_max, opt.max_n, "n_max");

    std::vector<SurveyRow> rows(n_max);
    const unsigned jobs = std::max(1u, opt.jobs);

    auto fill_row = [&](u64 n) {
        SurveyRow& row = rows[n - 1];
        row.n = n;
        if (opt.sizes) {
            const auto dec = decomposition(a, n);
            row.size_minus = dec.minus.size();
            row.size_plus = dec.plus.size();
            row.size_total = count_floor_quotients_initial(a, n);
        }
        if (opt.thresholds) {
            row.set_threshold = set_stabilization_threshold(n);
            row.poset_threshold = poset_stabilization_threshold(n);
        }
        if (opt.simulate) {
            const auto sim = simulate_random_quotients(a, n, opt.seed ^ n);
            row.sim_minus = sim.sim_minus;
            row.sim_plus = sim.sim_plus;
        }
    };

    if (jobs == 1 || n_max < 64) {
        for (u64 n = 1; n <= n_max; ++n) fill_row(n);
        return rows;
    }

    constexpr u64 kBlock = 64;
    std::atomic<u64> next_block{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        try {
            for (;;) {
                const u64 b = next_block.fetch_add(1, std::memory_order_relaxed);
                const u64 lo = b * kBlock + 1;
                if (lo > n_max) return;
                const u64 hi = std::min(n_max, lo + kBlock - 1);
                for (u64 n = lo; n <= hi; ++n) fill_row(n);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return rows;
}

} // namespace floorq
