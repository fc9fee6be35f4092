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
#include <random>

#include "poly.hpp"

namespace z4 {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Stream seed for worker `index` of a run keyed by `root`. Independent of
/// scheduling, so parallel searches reproduce bit-identically.
inline uint64_t derive_seed(uint64_t root, uint64_t index) { return splitmix64(splitmix64(root) ^ (index + 1)); }

/// Uniform polynomial of degree < len over Z4: 2-bit symbols taken straight
/// from the generator output (no distribution adapters, to keep streams
/// reproducible by construction).
inline PolyZ4 random_poly_z4(std::mt19937_64& rng, int len) {
    std::vector<uint8_t> c(static_cast<size_t>(len));
    uint64_t bits = 0;
    int have = 0;
    for (int i = 0; i < len; ++i) {
        if (have == 0) {
            bits = rng();
            have = 32;
        }
        c[static_cast<size_t>(i)] = bits & 3;
        bits >>= 2;
        --have;
    }
    return PolyZ4(std::move(c));
}

}  // namespace z4
