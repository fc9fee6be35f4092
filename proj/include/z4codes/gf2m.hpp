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

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

// Arithmetic in GF(2^s) for s up to 127, sized for the multiplicative orders of
// 2 mod n that occur for odd n <= 127 (the largest is 110, at n = 121).
// Elements are binary polynomials packed into two 64-bit words.

namespace z4::detail {

struct B128 {
    std::array<uint64_t, 2> w{0, 0};

    friend bool operator==(const B128& a, const B128& b) { return a.w == b.w; }
    bool is_zero() const { return w[0] == 0 && w[1] == 0; }
    bool test(int i) const { return (w[static_cast<size_t>(i >> 6)] >> (i & 63)) & 1u; }
    void set(int i) { w[static_cast<size_t>(i >> 6)] |= uint64_t(1) << (i & 63); }

    int degree() const {
        if (w[1]) return 127 - std::countl_zero(w[1]);
        if (w[0]) return 63 - std::countl_zero(w[0]);
        return -1;
    }

    void operator^=(const B128& o) {
        w[0] ^= o.w[0];
        w[1] ^= o.w[1];
    }
    friend B128 operator^(B128 a, const B128& b) {
        a ^= b;
        return a;
    }

    B128 shl(int k) const {
        B128 r;
        if (k == 0) return *this;
        if (k >= 64) {
            r.w[1] = w[0] << (k - 64);
        } else {
            r.w[0] = w[0] << k;
            r.w[1] = (w[1] << k) | (w[0] >> (64 - k));
        }
        return r;
    }

    static B128 from_bits(uint64_t bits) {
        B128 r;
        r.w[0] = bits;
        return r;
    }
};

inline B128 b128_one() { return B128::from_bits(1); }

// Remainder of a modulo f, plain binary polynomial division.
inline B128 b128_mod(B128 a, const B128& f) {
    int df = f.degree();
    for (int da = a.degree(); da >= df; da = a.degree()) a ^= f.shl(da - df);
    return a;
}

inline B128 b128_gcd(B128 a, B128 b) {
    while (!b.is_zero()) {
        B128 r = b128_mod(a, b);
        a = b;
        b = r;
    }
    return a;
}

// a*b mod f where f has degree s and a, b have degree < s.
inline B128 b128_mulmod(const B128& a, const B128& b, const B128& f, int s) {
    B128 acc{};
    B128 t = a;
    int db = b.degree();
    for (int i = 0; i <= db; ++i) {
        if (b.test(i)) acc ^= t;
        t = t.shl(1);
        if (t.test(s)) t ^= f;
    }
    return acc;
}

inline std::vector<int> prime_factors(int n) {
    std::vector<int> ps;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

inline bool b128_irreducible(const B128& f, int s) {
    if (s == 1) return true;
    B128 x = B128::from_bits(2);
    B128 t = x;
    for (int i = 0; i < s; ++i) t = b128_mulmod(t, t, f, s);
    if (!(t == x)) return false;
    for (int p : prime_factors(s)) {
        B128 u = x;
        for (int i = 0; i < s / p; ++i) u = b128_mulmod(u, u, f, s);
        if (b128_gcd(u ^ x, f).degree() != 0) return false;
    }
    return true;
}

class Gf2Field {
   public:
    explicit Gf2Field(int s) : s_(s) {
        if (s < 1 || s > 127) throw std::domain_error("Gf2Field: extension degree out of range");
        // Smallest modulus in integer-encoding order: x^s + (odd low part).
        for (uint64_t c = 1;; c += 2) {
            B128 f = B128::from_bits(c);
            f.set(s);
            if (b128_irreducible(f, s)) {
                f_ = f;
                break;
            }
            if (s > 1 && c >= (uint64_t(1) << std::min(s, 63))) throw std::logic_error("Gf2Field: no modulus found");
        }
    }

    int extension_degree() const { return s_; }
    const B128& modulus() const { return f_; }
    B128 one() const { return b128_one(); }

    B128 mul(const B128& a, const B128& b) const { return b128_mulmod(a, b, f_, s_); }
    B128 sqr(const B128& a) const { return mul(a, a); }

    B128 pow(B128 a, unsigned __int128 e) const {
        B128 r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = sqr(a);
            e >>= 1;
        }
        return r;
    }

    /// An element of multiplicative order exactly n; requires n | 2^s - 1.
    B128 element_of_order(int n) const {
        unsigned __int128 q1 = ((static_cast<unsigned __int128>(1) << s_) - 1);
        if (q1 % static_cast<unsigned>(n) != 0) throw std::domain_error("element_of_order: n does not divide 2^s-1");
        unsigned __int128 e = q1 / static_cast<unsigned>(n);
        std::vector<int> ps = prime_factors(n);
        for (uint64_t enc = 2;; ++enc) {
            if (s_ < 64 && enc >= (uint64_t(1) << s_)) throw std::logic_error("element_of_order: search exhausted");
            B128 alpha = pow(B128::from_bits(enc), e);
            if (alpha == one()) continue;
            bool ok = true;
            for (int p : ps)
                if (pow(alpha, static_cast<unsigned>(n / p)) == one()) {
                    ok = false;
                    break;
                }
            if (ok) return alpha;
        }
    }

   private:
    int s_;
    B128 f_;
};

}  // namespace z4::detail
