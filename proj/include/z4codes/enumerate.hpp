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

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "code.hpp"

// Codeword enumeration kernel. Words are bit-packed into two planes (low and
// high bit of each Z4 symbol), so adding a generator row and reading off the
// Lee weight are a handful of word operations regardless of length (n <= 128).
// Messages are walked in mixed-radix Gray order, one generator row added or
// subtracted per codeword.

namespace z4 {

struct BudgetError : std::runtime_error {
    explicit BudgetError(int size_log2, uint64_t budget)
        : std::runtime_error("enumeration refused: code size 2^" + std::to_string(size_log2) +
                             " exceeds the budget of " + std::to_string(budget) + " words") {}
};

inline constexpr uint64_t kDefaultEnumerationBudget = uint64_t(1) << 26;

inline void check_enumeration_budget(int size_log2, uint64_t budget) {
    if (size_log2 >= 64 || (uint64_t(1) << size_log2) > budget) throw BudgetError(size_log2, budget);
}

struct PackedZ4 {
    uint64_t lo[2]{0, 0};
    uint64_t hi[2]{0, 0};

    static PackedZ4 pack(std::span<const uint8_t> v) {
        if (v.size() > 128) throw std::invalid_argument("PackedZ4: length > 128");
        PackedZ4 p;
        for (size_t i = 0; i < v.size(); ++i) {
            p.lo[i >> 6] |= uint64_t(v[i] & 1) << (i & 63);
            p.hi[i >> 6] |= uint64_t((v[i] >> 1) & 1) << (i & 63);
        }
        return p;
    }

    std::vector<uint8_t> unpack(int n) const {
        std::vector<uint8_t> v(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            v[static_cast<size_t>(i)] =
                static_cast<uint8_t>(((lo[i >> 6] >> (i & 63)) & 1) | (((hi[i >> 6] >> (i & 63)) & 1) << 1));
        return v;
    }

    void add(const PackedZ4& r) {
        uint64_t c0 = lo[0] & r.lo[0], c1 = lo[1] & r.lo[1];
        lo[0] ^= r.lo[0];
        lo[1] ^= r.lo[1];
        hi[0] ^= r.hi[0] ^ c0;
        hi[1] ^= r.hi[1] ^ c1;
    }

    PackedZ4 negated() const {
        PackedZ4 t = *this;
        t.hi[0] ^= t.lo[0];
        t.hi[1] ^= t.lo[1];
        return t;
    }

    bool is_zero() const { return lo[0] == 0 && lo[1] == 0 && hi[0] == 0 && hi[1] == 0; }

    int lee() const {
        return std::popcount(lo[0]) + std::popcount(lo[1]) +
               2 * (std::popcount(hi[0] & ~lo[0]) + std::popcount(hi[1] & ~lo[1]));
    }
    /// Number of coordinates in {1,3}.
    int units() const { return std::popcount(lo[0]) + std::popcount(lo[1]); }
    /// Number of coordinates equal to 2.
    int twos() const { return std::popcount(hi[0] & ~lo[0]) + std::popcount(hi[1] & ~lo[1]); }
};

/// Loopless reflected Gray walk over a mixed-radix message space
/// Z4^k1 x Z2^k2. Each step changes one digit by +-1.
class GrayMessageWalk {
   public:
    GrayMessageWalk(int k1, int k2) : k_(k1 + k2), k1_(k1) {
        digit_.assign(static_cast<size_t>(k_), 0);
        dir_.assign(static_cast<size_t>(k_), 1);
        focus_.resize(static_cast<size_t>(k_) + 1);
        for (int i = 0; i <= k_; ++i) focus_[static_cast<size_t>(i)] = i;
    }

    struct Step {
        int digit;
        int delta;  // +1 or -1
    };

    /// Next transition, or digit == -1 when the space is exhausted.
    Step next() {
        int j = focus_[0];
        focus_[0] = 0;
        if (j == k_) return {-1, 0};
        int delta = dir_[static_cast<size_t>(j)];
        digit_[static_cast<size_t>(j)] += delta;
        int radix = j < k1_ ? 4 : 2;
        if (digit_[static_cast<size_t>(j)] == 0 || digit_[static_cast<size_t>(j)] == radix - 1) {
            dir_[static_cast<size_t>(j)] = -delta;
            focus_[static_cast<size_t>(j)] = focus_[static_cast<size_t>(j) + 1];
            focus_[static_cast<size_t>(j) + 1] = j + 1;
        }
        return {j, delta};
    }

   private:
    int k_, k1_;
    std::vector<int> digit_, dir_;
    std::vector<int> focus_;
};

namespace detail {

struct PackedRows {
    std::vector<PackedZ4> row, neg;
    static PackedRows of(const Z4Code& c) {
        PackedRows pr;
        for (int r = 0; r < c.rank_rows(); ++r) {
            PackedZ4 p = PackedZ4::pack(c.gen.row(static_cast<size_t>(r)));
            pr.row.push_back(p);
            pr.neg.push_back(p.negated());
        }
        return pr;
    }
};

}  // namespace detail

/// Visit every codeword exactly once, in standard-form coordinates, with the
/// first message digit fixed to `first_digit`. Pass first_digit = -1 to walk
/// the whole message space. The visitor returns true to continue, false to
/// abort the walk early.
template <class Visitor>
void walk_codewords_packed(const Z4Code& c, const detail::PackedRows& rows, int first_digit, Visitor&& visit) {
    const int k = c.rank_rows();
    if (k == 0) {
        visit(PackedZ4{});
        return;
    }
    PackedZ4 w{};
    int kf = 0;
    if (first_digit >= 0) {
        for (int t = 0; t < first_digit; ++t) w.add(rows.row[0]);
        kf = 1;
    }
    if (!visit(w)) return;
    GrayMessageWalk walk(c.k1 >= kf ? c.k1 - kf : 0, c.k1 >= kf ? c.k2 : c.k2 - kf);
    for (;;) {
        auto [digit, delta] = walk.next();
        if (digit < 0) break;
        size_t r = static_cast<size_t>(digit + kf);
        w.add(delta > 0 ? rows.row[r] : rows.neg[r]);
        if (!visit(w)) return;
    }
}

/// Number of sub-streams the message space splits into when the first message
/// symbol is fixed (4 for a free symbol, 2 for an order-2 symbol, 1 for the
/// zero code).
inline int partition_count(const Z4Code& c) {
    if (c.rank_rows() == 0) return 1;
    return c.k1 > 0 ? 4 : 2;
}

/// Enumerate all codewords in original coordinates, subject to the budget.
template <class Visitor>
void enumerate_codewords(const Z4Code& c, uint64_t budget, Visitor&& visit) {
    check_enumeration_budget(c.size_log2(), budget);
    auto rows = detail::PackedRows::of(c);
    walk_codewords_packed(c, rows, -1, [&](const PackedZ4& w) {
        visit(c.to_original(w.unpack(c.n)));
        return true;
    });
}

inline std::vector<std::vector<uint8_t>> all_codewords(const Z4Code& c, uint64_t budget = kDefaultEnumerationBudget) {
    std::vector<std::vector<uint8_t>> out;
    out.reserve(c.size_log2() < 30 ? (size_t(1) << c.size_log2()) : 0);
    enumerate_codewords(c, budget, [&](std::vector<uint8_t> w) { out.push_back(std::move(w)); });
    return out;
}

}  // namespace z4
