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

#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"
#include "z4codes/enumerate.hpp"
#include "z4codes/gray.hpp"

using namespace z4;
using testutil::gray_image_closed;
using testutil::naive_span;
using testutil::random_matrix;

TEST_CASE("Gray map") {
    REQUIRE(gray_map(std::vector<uint8_t>{2}) == GrayWord{1, 1});
    REQUIRE(gray_map(std::vector<uint8_t>{0, 0}) == GrayWord{0, 0, 0, 0});
    REQUIRE(gray_map(std::vector<uint8_t>{1, 2, 3}) == GrayWord{0, 1, 1, 1, 1, 0});
}

TEST_CASE("Lee weight") {
    REQUIRE(lee_weight(std::vector<uint8_t>{1, 2, 3}) == 4);
    REQUIRE(lee_weight(std::vector<uint8_t>{0, 0, 0}) == 0);
    REQUIRE(lee_weight(std::vector<uint8_t>{2, 2}) == 4);

    SECTION("weight identity w_L = w_H(gray), exhaustive for n <= 6") {
        for (int n = 1; n <= 6; ++n)
            for (uint64_t v = 0; v < (uint64_t(1) << (2 * n)); ++v) {
                std::vector<uint8_t> w(static_cast<size_t>(n));
                for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = (v >> (2 * i)) & 3;
                REQUIRE(lee_weight(w) == hamming_weight(gray_map(w)));
            }
    }
    SECTION("distance preservation on random pairs") {
        std::mt19937_64 rng(59);
        for (int iter = 0; iter < 500; ++iter) {
            size_t n = 1 + rng() % 40;
            std::vector<uint8_t> u(n), v(n), diff(n);
            for (size_t i = 0; i < n; ++i) {
                u[i] = rng() % 4;
                v[i] = rng() % 4;
                diff[i] = static_cast<uint8_t>((u[i] + 4 - v[i]) & 3);
            }
            auto gu = gray_map(u), gv = gray_map(v);
            int dh = 0;
            for (size_t i = 0; i < gu.size(); ++i) dh += gu[i] != gv[i];
            REQUIRE(lee_weight(diff) == dh);
        }
    }
}

TEST_CASE("Gray-image linearity") {
    SECTION("all-twos scaling is linear") {
        for (int n = 1; n <= 4; ++n) {
            Z4Matrix m(static_cast<size_t>(n), static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) m.at(static_cast<size_t>(i), static_cast<size_t>(i)) = 2;
            auto c = Z4Code::standard_form(m);
            REQUIRE(is_gray_linear(c));
            REQUIRE(gray_image_closed(naive_span(m)));
        }
    }
    SECTION("single-generator codes are always linear") {
        auto m = Z4Matrix::from_rows({{1, 2, 3}});
        REQUIRE(is_gray_linear(Z4Code::standard_form(m)));
        REQUIRE(gray_image_closed(naive_span(m)));
    }
    SECTION("a code with nonlinear image") {
        auto m = Z4Matrix::from_rows({{1, 0, 1}, {0, 1, 1}});
        REQUIRE_FALSE(is_gray_linear(Z4Code::standard_form(m)));
        REQUIRE_FALSE(gray_image_closed(naive_span(m)));
    }
    SECTION("criterion agrees with brute-force closure on random codes") {
        std::mt19937_64 rng(61);
        int linear_seen = 0, nonlinear_seen = 0;
        for (int iter = 0; iter < 300; ++iter) {
            auto m = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 5);
            auto c = Z4Code::standard_form(m);
            if (c.is_zero_code()) continue;
            bool closed = gray_image_closed(naive_span(m));
            REQUIRE(is_gray_linear(c) == closed);
            (closed ? linear_seen : nonlinear_seen) += 1;
        }
        REQUIRE(linear_seen > 0);
        REQUIRE(nonlinear_seen > 0);
    }
    SECTION("zero code is rejected") {
        auto c = Z4Code::standard_form(Z4Matrix::from_rows({{0}}));
        REQUIRE_THROWS_AS(is_gray_linear(c), std::domain_error);
    }
}
