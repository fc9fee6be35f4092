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

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <vector>

#include "enumerate.hpp"

namespace z4 {

using BigInt = boost::multiprecision::cpp_int;

/// Codeword census by symbol composition: counts[(a,b,c)] words with a
/// coordinates equal to 0, b in {1,3} and c equal to 2, a + b + c = n.
/// Counts are big integers because the MacWilliams transform produces the
/// enumerator of codes far beyond enumeration size.
class SymmetrizedWeightEnumerator {
   public:
    explicit SymmetrizedWeightEnumerator(int n)
        : n_(n), counts_(static_cast<size_t>(n + 1) * static_cast<size_t>(n + 1)) {
        if (n < 0) throw std::invalid_argument("SymmetrizedWeightEnumerator: negative length");
    }

    int length() const { return n_; }

    BigInt& at(int b, int c) { return counts_[static_cast<size_t>(b) * static_cast<size_t>(n_ + 1) + static_cast<size_t>(c)]; }
    const BigInt& at(int b, int c) const {
        return counts_[static_cast<size_t>(b) * static_cast<size_t>(n_ + 1) + static_cast<size_t>(c)];
    }

    BigInt total() const {
        BigInt t = 0;
        for (const auto& v : counts_) t += v;
        return t;
    }

    template <class F>
    void for_each_nonzero(F&& fn) const {
        for (int b = 0; b <= n_; ++b)
            for (int c = 0; c + b <= n_; ++c)
                if (at(b, c) != 0) fn(n_ - b - c, b, c, at(b, c));
    }

    friend bool operator==(const SymmetrizedWeightEnumerator& x, const SymmetrizedWeightEnumerator& y) {
        return x.n_ == y.n_ && x.counts_ == y.counts_;
    }

   private:
    int n_;
    std::vector<BigInt> counts_;
};

/// Exact enumerator by full codeword enumeration (refused beyond the budget).
inline SymmetrizedWeightEnumerator swe_by_enumeration(const Z4Code& c, uint64_t budget = kDefaultEnumerationBudget) {
    check_enumeration_budget(c.size_log2(), budget);
    std::vector<uint64_t> raw(static_cast<size_t>(c.n + 1) * static_cast<size_t>(c.n + 1), 0);
    auto rows = detail::PackedRows::of(c);
    walk_codewords_packed(c, rows, -1, [&](const PackedZ4& w) {
        raw[static_cast<size_t>(w.units()) * static_cast<size_t>(c.n + 1) + static_cast<size_t>(w.twos())] += 1;
        return true;
    });
    SymmetrizedWeightEnumerator s(c.n);
    for (int b = 0; b <= c.n; ++b)
        for (int k = 0; k + b <= c.n; ++k) {
            uint64_t v = raw[static_cast<size_t>(b) * static_cast<size_t>(c.n + 1) + static_cast<size_t>(k)];
            if (v) s.at(b, k) = v;
        }
    return s;
}

/// MacWilliams transform of a symmetrized weight enumerator: the enumerator of
/// the dual code, computed as
///     swe_dual(X, Y, Z) = swe(X + 2Y + Z, X - Z, X - 2Y + Z) / codeSize
/// by trinomial-expansion convolution over the composition lattice. All
/// resulting counts must come out as nonnegative integers; anything else
/// signals an inconsistent input or a bug and throws.
inline SymmetrizedWeightEnumerator macwilliams_swe(const SymmetrizedWeightEnumerator& s, const BigInt& code_size) {
    const int n = s.length();
    if (code_size <= 0) throw std::invalid_argument("macwilliams_swe: nonpositive code size");
    if (s.total() != code_size) throw std::invalid_argument("macwilliams_swe: counts do not sum to the code size");

    // Pascal table up to n.
    std::vector<std::vector<BigInt>> bin(static_cast<size_t>(n + 1));
    for (int i = 0; i <= n; ++i) {
        bin[static_cast<size_t>(i)].assign(static_cast<size_t>(i + 1), 1);
        for (int j = 1; j < i; ++j)
            bin[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                bin[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
                bin[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
    }
    std::vector<BigInt> pow2(static_cast<size_t>(n + 1));
    for (int i = 0; i <= n; ++i) pow2[static_cast<size_t>(i)] = BigInt(1) << i;

    const size_t stride = static_cast<size_t>(n + 1);
    std::vector<BigInt> acc(stride * stride);  // signed accumulation over (Y-power, Z-power)

    s.for_each_nonzero([&](int a, int b, int c, const BigInt& count) {
        // L1 = (X + 2Y + Z)^a over (j, k): multinomial(a; i, j, k) * 2^j
        std::vector<BigInt> l1(static_cast<size_t>(a + 1) * static_cast<size_t>(a + 1));
        for (int j = 0; j <= a; ++j)
            for (int k = 0; k + j <= a; ++k)
                l1[static_cast<size_t>(j) * static_cast<size_t>(a + 1) + static_cast<size_t>(k)] =
                    bin[static_cast<size_t>(a)][static_cast<size_t>(j)] *
                    bin[static_cast<size_t>(a - j)][static_cast<size_t>(k)] * pow2[static_cast<size_t>(j)];

        // L2 = L1 * (X - Z)^b over (j, k)
        std::vector<BigInt> l2(static_cast<size_t>(a + 1) * static_cast<size_t>(a + b + 1));
        for (int j = 0; j <= a; ++j)
            for (int k = 0; k + j <= a; ++k) {
                const BigInt& v = l1[static_cast<size_t>(j) * static_cast<size_t>(a + 1) + static_cast<size_t>(k)];
                if (v == 0) continue;
                for (int t = 0; t <= b; ++t) {
                    BigInt term = v * bin[static_cast<size_t>(b)][static_cast<size_t>(t)];
                    if (t & 1) term = -term;
                    l2[static_cast<size_t>(j) * static_cast<size_t>(a + b + 1) + static_cast<size_t>(k + t)] += term;
                }
            }

        // accumulate L2 * (X - 2Y + Z)^c, weighted by the source count
        for (int j = 0; j <= a; ++j)
            for (int k = 0; k <= a + b - j; ++k) {
                const BigInt& v = l2[static_cast<size_t>(j) * static_cast<size_t>(a + b + 1) + static_cast<size_t>(k)];
                if (v == 0) continue;
                BigInt base = v * count;
                for (int jp = 0; jp <= c; ++jp)
                    for (int kp = 0; kp + jp <= c; ++kp) {
                        BigInt term = base * bin[static_cast<size_t>(c)][static_cast<size_t>(jp)] *
                                      bin[static_cast<size_t>(c - jp)][static_cast<size_t>(kp)] *
                                      pow2[static_cast<size_t>(jp)];
                        if (jp & 1) term = -term;
                        acc[static_cast<size_t>(j + jp) * stride + static_cast<size_t>(k + kp)] += term;
                    }
            }
    });

    SymmetrizedWeightEnumerator out(n);
    for (int b = 0; b <= n; ++b)
        for (int c = 0; c + b <= n; ++c) {
            BigInt v = acc[static_cast<size_t>(b) * stride + static_cast<size_t>(c)];
            if (v == 0) continue;
            if (v < 0 || v % code_size != 0)
                throw std::runtime_error("macwilliams_swe: transform produced a non-integer or negative count");
            out.at(b, c) = v / code_size;
        }
    return out;
}

}  // namespace z4
