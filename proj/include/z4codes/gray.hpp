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

#include <cstdint>
#include <span>
#include <vector>

#include "code.hpp"

namespace z4 {

/// Binary image of a Z4 vector under the Gray map; length is twice the Z4 length.
using GrayWord = std::vector<uint8_t>;

/// Coordinatewise Gray map: 0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10.
inline GrayWord gray_map(std::span<const uint8_t> v) {
    static constexpr uint8_t first[4] = {0, 0, 1, 1};
    static constexpr uint8_t second[4] = {0, 1, 1, 0};
    GrayWord out;
    out.reserve(v.size() * 2);
    for (uint8_t s : v) {
        out.push_back(first[s & 3]);
        out.push_back(second[s & 3]);
    }
    return out;
}

/// Lee weight: per-symbol weights 0, 1, 2, 1 for 0, 1, 2, 3.
inline int lee_weight(std::span<const uint8_t> v) {
    static constexpr int w[4] = {0, 1, 2, 1};
    int sum = 0;
    for (uint8_t s : v) sum += w[s & 3];
    return sum;
}

inline int hamming_weight(std::span<const uint8_t> bits) {
    int sum = 0;
    for (uint8_t b : bits) sum += (b != 0);
    return sum;
}

/// Whether the binary Gray image of the code is linear (closed under addition).
/// Criterion: 2(u .* v) is a codeword for every pair of generator rows, where
/// .* is the componentwise product. Bilinearity of (u, v) -> 2(u .* v) mod 4
/// reduces closure over the whole code to the generator pairs.
inline bool is_gray_linear(const Z4Code& c) {
    if (c.is_zero_code()) throw std::domain_error("is_gray_linear: zero code");
    const int k = c.rank_rows();
    std::vector<uint8_t> w(static_cast<size_t>(c.n));
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            for (int j = 0; j < c.n; ++j)
                w[static_cast<size_t>(j)] =
                    static_cast<uint8_t>(2 * c.gen.at(static_cast<size_t>(a), static_cast<size_t>(j)) *
                                         c.gen.at(static_cast<size_t>(b), static_cast<size_t>(j)) % 4);
            if (!c.contains_std(w)) return false;
        }
    return true;
}

}  // namespace z4
