/*
   Copyright 2026 The z4codes Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <atomic>
#include <chrono>
#include <climits>
#include <optional>
#include <thread>
#include <vector>

#include "swe.hpp"

namespace z4 {

enum class DistanceStatus { exact, timed_out, skipped };
enum class DistanceMethod { direct, dual_macwilliams };

struct DistanceResult {
    DistanceStatus status = DistanceStatus::skipped;
    std::optional<int> d;  // present iff status == exact
    DistanceMethod method = DistanceMethod::direct;
    double elapsed_seconds = 0.0;
};

/// Dispatch policy for minimum-distance runs. Lengths at or below
/// length_cutoff run with no time limit; above it, runs whose smaller
/// enumeration side min(2k1+k2, 2n-2k1-k2) is at most complexity_cutoff get
/// the time limit, and everything else is skipped.
struct DistancePolicy {
    int length_cutoff = 61;
    int complexity_cutoff = 60;
    double time_limit_seconds = 60.0;
    uint64_t enumeration_budget = kDefaultEnumerationBudget;
};

struct DistancePlan {
    enum class Arm { no_limit, time_limited, skip };
    DistanceMethod method;
    Arm arm;
    int side_log2;  // enumeration side of the chosen engine
};

inline DistancePlan plan_min_lee(int n, int k1, int k2, const DistancePolicy& policy) {
    int direct_side = 2 * k1 + k2;
    int dual_side = 2 * n - direct_side;
    DistancePlan p;
    p.method = dual_side < direct_side ? DistanceMethod::dual_macwilliams : DistanceMethod::direct;
    p.side_log2 = std::min(direct_side, dual_side);
    if (n <= policy.length_cutoff)
        p.arm = DistancePlan::Arm::no_limit;
    else if (p.side_log2 <= policy.complexity_cutoff)
        p.arm = DistancePlan::Arm::time_limited;
    else
        p.arm = DistancePlan::Arm::skip;
    return p;
}

namespace detail {

using Clock = std::chrono::steady_clock;

inline double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Minimum Lee weight over one message-space partition; INT_MAX if the
// partition holds no nonzero word. Sets `expired` and aborts on deadline.
inline int min_lee_partition(const Z4Code& c, const PackedRows& rows, int first_digit, bool contains_zero_word,
                             std::optional<Clock::time_point> deadline, std::atomic<bool>& expired) {
    int best = INT_MAX;
    uint64_t steps = 0;
    bool skip_first = contains_zero_word;
    walk_codewords_packed(c, rows, first_digit, [&](const PackedZ4& w) {
        if ((++steps & 0xFFFF) == 0) {
            if (expired.load(std::memory_order_relaxed)) return false;
            if (deadline && Clock::now() >= *deadline) {
                expired.store(true, std::memory_order_relaxed);
                return false;
            }
        }
        if (skip_first) {
            skip_first = false;
            return true;
        }
        int l = w.lee();
        if (l < best) best = l;
        return true;
    });
    return best;
}

}  // namespace detail

/// Exact minimum Lee weight by direct codeword enumeration. Partitions the
/// message space on the first symbol; partition minima merge by min-reduction,
/// so the result is independent of the worker count. A hit time limit discards
/// any partial bound; only completed runs report exact.
inline DistanceResult min_lee_direct(const Z4Code& c, std::optional<double> time_limit = {},
                                     uint64_t budget = kDefaultEnumerationBudget, int workers = 1) {
    if (c.is_zero_code()) throw std::domain_error("min_lee_direct: zero code has no nonzero codeword");
    check_enumeration_budget(c.size_log2(), budget);
    auto t0 = detail::Clock::now();
    std::optional<detail::Clock::time_point> deadline;
    if (time_limit) deadline = t0 + std::chrono::duration_cast<detail::Clock::duration>(
                                        std::chrono::duration<double>(*time_limit));

    auto rows = detail::PackedRows::of(c);
    const int parts = partition_count(c);
    std::atomic<bool> expired{false};
    std::vector<int> mins(static_cast<size_t>(parts), INT_MAX);

    if (workers <= 1 || parts <= 1) {
        for (int p = 0; p < parts && !expired; ++p)
            mins[static_cast<size_t>(p)] = detail::min_lee_partition(c, rows, p, p == 0, deadline, expired);
    } else {
        std::atomic<int> next{0};
        auto work = [&] {
            for (int p = next.fetch_add(1); p < parts; p = next.fetch_add(1))
                mins[static_cast<size_t>(p)] = detail::min_lee_partition(c, rows, p, p == 0, deadline, expired);
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < std::min(workers, parts); ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    DistanceResult r;
    r.method = DistanceMethod::direct;
    r.elapsed_seconds = detail::seconds_since(t0);
    if (expired) {
        r.status = DistanceStatus::timed_out;
        return r;
    }
    int best = INT_MAX;
    for (int m : mins) best = std::min(best, m);
    r.status = DistanceStatus::exact;
    r.d = best;
    return r;
}

/// Exact minimum Lee weight via the dual side: enumerate the dual code, apply
/// the MacWilliams transform, and take the smallest b + 2c over the nonzero
/// compositions of the recovered enumerator.
inline DistanceResult min_lee_via_dual(const Z4Code& c, uint64_t budget = kDefaultEnumerationBudget,
                                       std::optional<double> time_limit = {}) {
    if (c.is_zero_code()) throw std::domain_error("min_lee_via_dual: zero code has no nonzero codeword");
    auto t0 = detail::Clock::now();
    std::optional<detail::Clock::time_point> deadline;
    if (time_limit) deadline = t0 + std::chrono::duration_cast<detail::Clock::duration>(
                                        std::chrono::duration<double>(*time_limit));

    Z4Code d = dual(c);
    check_enumeration_budget(d.size_log2(), budget);

    DistanceResult r;
    r.method = DistanceMethod::dual_macwilliams;

    // enumerate the dual, with cooperative deadline checks
    std::vector<uint64_t> raw(static_cast<size_t>(c.n + 1) * static_cast<size_t>(c.n + 1), 0);
    auto rows = detail::PackedRows::of(d);
    bool aborted = false;
    uint64_t steps = 0;
    walk_codewords_packed(d, rows, -1, [&](const PackedZ4& w) {
        if ((++steps & 0xFFFF) == 0 && deadline && detail::Clock::now() >= *deadline) {
            aborted = true;
            return false;
        }
        raw[static_cast<size_t>(w.units()) * static_cast<size_t>(c.n + 1) + static_cast<size_t>(w.twos())] += 1;
        return true;
    });
    if (aborted) {
        r.status = DistanceStatus::timed_out;
        r.elapsed_seconds = detail::seconds_since(t0);
        return r;
    }
    SymmetrizedWeightEnumerator swe_dual(c.n);
    for (int b = 0; b <= c.n; ++b)
        for (int k = 0; k + b <= c.n; ++k) {
            uint64_t v = raw[static_cast<size_t>(b) * static_cast<size_t>(c.n + 1) + static_cast<size_t>(k)];
            if (v) swe_dual.at(b, k) = v;
        }

    SymmetrizedWeightEnumerator swe_c = macwilliams_swe(swe_dual, BigInt(1) << d.size_log2());
    if (swe_c.at(0, 0) != 1 || swe_c.total() != (BigInt(1) << c.size_log2()))
        throw std::runtime_error("min_lee_via_dual: transformed enumerator fails sanity checks");

    int best = INT_MAX;
    swe_c.for_each_nonzero([&](int, int b, int k, const BigInt&) {
        if (b == 0 && k == 0) return;  // the zero word
        best = std::min(best, b + 2 * k);
    });
    r.status = DistanceStatus::exact;
    r.d = best;
    r.elapsed_seconds = detail::seconds_since(t0);
    return r;
}

/// Policy dispatch: picks the engine with the smaller enumeration side,
/// applies the length/complexity thresholds, and returns skipped (a value,
/// not an error) when the chosen side exceeds the threshold or the
/// enumeration budget.
inline DistanceResult min_lee(const Z4Code& c, const DistancePolicy& policy = {}, int workers = 1) {
    if (c.is_zero_code()) throw std::domain_error("min_lee: zero code has no nonzero codeword");
    DistancePlan plan = plan_min_lee(c.n, c.k1, c.k2, policy);
    DistanceResult r;
    r.method = plan.method;
    if (plan.arm == DistancePlan::Arm::skip) return r;
    if (plan.side_log2 >= 64 || (uint64_t(1) << plan.side_log2) > policy.enumeration_budget) return r;

    std::optional<double> limit;
    if (plan.arm == DistancePlan::Arm::time_limited) limit = policy.time_limit_seconds;
    if (plan.method == DistanceMethod::direct)
        return min_lee_direct(c, limit, policy.enumeration_budget, workers);
    return min_lee_via_dual(c, policy.enumeration_budget, limit);
}

}  // namespace z4
