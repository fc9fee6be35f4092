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
#include <set>

#include "z4codes/factorization.hpp"

using namespace z4;

TEST_CASE("factorization of x^n-1 over Z2") {
    SECTION("n=7 has factor degrees 1,3,3") {
        auto fz = factor_xn1_z2(7);
        REQUIRE(fz.r() == 3);
        REQUIRE(fz.factors[0].degree() == 1);
        REQUIRE(fz.factors[1].degree() == 3);
        REQUIRE(fz.factors[2].degree() == 3);
    }
    SECTION("n=1 is x+1") {
        auto fz = factor_xn1_z2(1);
        REQUIRE(fz.r() == 1);
        REQUIRE(fz.factors[0] == parse_poly_z2("11"));
    }
    SECTION("n=3 is (x+1)(x^2+x+1)") {
        auto fz = factor_xn1_z2(3);
        REQUIRE(fz.r() == 2);
        REQUIRE(fz.factors[0] == parse_poly_z2("11"));
        REQUIRE(fz.factors[1] == parse_poly_z2("111"));
    }
    SECTION("rejects even or nonpositive n") {
        REQUIRE_THROWS_AS(factor_xn1_z2(6), std::domain_error);
        REQUIRE_THROWS_AS(factor_xn1_z2(0), std::domain_error);
        REQUIRE_THROWS_AS(factor_xn1_z2(-3), std::domain_error);
    }
    SECTION("full sweep: products, coset counts, irreducibility surrogates") {
        for (int n = 1; n <= 127; n += 2) {
            auto fz = factor_xn1_z2(n);
            REQUIRE(fz.r() == static_cast<int>(cyclotomic_cosets_mod2(n).size()));

            PolyZ2 prod2 = PolyZ2::one();
            for (const auto& f : fz.factors) prod2 = prod2 * f;
            REQUIRE(prod2 == PolyZ2::xn_minus_1(n));

            // pairwise coprime over Z2
            for (size_t i = 0; i < fz.factors.size(); ++i)
                for (size_t j = i + 1; j < fz.factors.size(); ++j)
                    REQUIRE(gcd(fz.factors[i], fz.factors[j]).is_one());

            PolyZ4 prod4 = PolyZ4::one();
            for (const auto& f : fz.factors) prod4 = prod4 * hensel_lift(f, n);
            REQUIRE(prod4 == PolyZ4::xn_minus_1(n));
        }
    }
}

TEST_CASE("Hensel lift") {
    SECTION("x+1 lifts to x+3") {
        REQUIRE(hensel_lift(parse_poly_z2("11"), 7) == parse_poly_z4("31"));
        REQUIRE(hensel_lift(parse_poly_z2("11"), 15) == parse_poly_z4("31"));
    }
    SECTION("x^2+x+1 lifts to itself at n=3") {
        REQUIRE(hensel_lift(parse_poly_z2("111"), 3) == parse_poly_z4("111"));
        REQUIRE(parse_poly_z4("31") * parse_poly_z4("111") == PolyZ4::xn_minus_1(3));
    }
    SECTION("rejects non-divisors") {
        REQUIRE_THROWS_AS(hensel_lift(parse_poly_z2("101"), 7), std::domain_error);
    }
    SECTION("lift of every divisor reduces back, odd n <= 61") {
        for (int n = 1; n <= 61; n += 2) {
            auto fz = factor_xn1_z2(n);
            for (const auto& d4 : divisor_lattice(fz)) {
                PolyZ2 d2 = reduce_mod2(d4);
                PolyZ4 lifted = hensel_lift(d2, n);
                REQUIRE(lifted == d4);  // divisors are products of lifts; lift is unique
                REQUIRE(reduce_mod2(lifted) == d2);
            }
        }
    }
    SECTION("lift is multiplicative on coprime divisors") {
        for (int n : {15, 21, 45}) {
            auto fz = factor_xn1_z2(n);
            for (size_t i = 0; i < fz.factors.size(); ++i)
                for (size_t j = i + 1; j < fz.factors.size(); ++j)
                    REQUIRE(hensel_lift(fz.factors[i] * fz.factors[j], n) ==
                            hensel_lift(fz.factors[i], n) * hensel_lift(fz.factors[j], n));
        }
    }
}

TEST_CASE("divisor lattice") {
    SECTION("n=7 yields 8 divisors, all dividing x^7-1 over Z4") {
        auto ds = divisor_lattice(factor_xn1_z2(7));
        REQUIRE(ds.size() == 8);
        std::set<std::string> uniq;
        for (const auto& d : ds) {
            uniq.insert(format_poly(d));
            REQUIRE(PolyZ4::divrem(PolyZ4::xn_minus_1(7), d).second.is_zero());
        }
        REQUIRE(uniq.size() == 8);
    }
    SECTION("n=1 yields 1 and x+3") {
        auto ds = divisor_lattice(factor_xn1_z2(1));
        REQUIRE(ds.size() == 2);
        REQUIRE(ds[0] == PolyZ4::one());
        REQUIRE(ds[1] == parse_poly_z4("31"));
    }
    SECTION("canonical order is deterministic") {
        auto a = divisor_lattice(factor_xn1_z2(21));
        auto b = divisor_lattice(factor_xn1_z2(21));
        REQUIRE(a.size() == 64);
        for (size_t i = 0; i + 1 < a.size(); ++i) REQUIRE(canonical_less(a[i], a[i + 1]));
        REQUIRE(std::equal(a.begin(), a.end(), b.begin()));
    }
}

TEST_CASE("cyclotomic cosets") {
    auto cosets7 = cyclotomic_cosets_mod2(7);
    REQUIRE(cosets7.size() == 3);
    REQUIRE(cosets7[0] == std::vector<int>{0});
    REQUIRE(cosets7[1] == std::vector<int>{1, 2, 4});
    REQUIRE(cosets7[2] == std::vector<int>{3, 5, 6});
    REQUIRE(order_of_two_mod(121) == 110);  // the largest extension degree in range
    REQUIRE(order_of_two_mod(127) == 7);
}
