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

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace z4 {

/// Dense univariate polynomial over the ring of integers modulo M (M = 2 or 4).
/// Coefficient i is the coefficient of x^i. Canonical form: no trailing zero
/// coefficients; the zero polynomial is the empty sequence.
template <unsigned M>
class Poly {
    static_assert(M == 2 || M == 4, "only Z2 and Z4 coefficients are supported");

   public:
    Poly() = default;
    explicit Poly(std::vector<uint8_t> coeffs) : c_(std::move(coeffs)) {
        for (uint8_t v : c_)
            if (v >= M) throw std::invalid_argument("Poly: coefficient out of range");
        trim();
    }

    static Poly zero() { return Poly(); }
    static Poly one() { return constant(1); }
    static Poly constant(uint8_t v) {
        Poly p;
        if (v % M != 0) p.c_.push_back(static_cast<uint8_t>(v % M));
        return p;
    }
    static Poly monomial(int deg, uint8_t v = 1) {
        Poly p;
        if (v % M != 0) {
            p.c_.assign(static_cast<size_t>(deg) + 1, 0);
            p.c_.back() = static_cast<uint8_t>(v % M);
        }
        return p;
    }
    /// x^n - 1 over Z_M (over Z2 this equals x^n + 1).
    static Poly xn_minus_1(int n) {
        Poly p;
        p.c_.assign(static_cast<size_t>(n) + 1, 0);
        p.c_.front() = M - 1;
        p.c_.back() = 1;
        return p;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // zero -> -1
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    uint8_t leading() const { return c_.empty() ? 0 : c_.back(); }

    uint8_t operator[](size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<uint8_t>& coeffs() const { return c_; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = static_cast<uint8_t>((a[i] + b[i]) % M);
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = static_cast<uint8_t>((a[i] + M - b[i]) % M);
        r.trim();
        return r;
    }
    Poly operator-() const { return zero() - *this; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        Poly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] = static_cast<uint8_t>((r.c_[i + j] + a.c_[i] * b.c_[j]) % M);
        }
        r.trim();
        return r;
    }

    /// Product reduced modulo x^n - 1 (exponents folded mod n).
    static Poly mulmod(const Poly& a, const Poly& b, int n) {
        if (n <= 0) throw std::domain_error("mulmod: n must be positive");
        Poly r;
        r.c_.assign(static_cast<size_t>(n), 0);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                size_t k = (i + j) % static_cast<size_t>(n);
                r.c_[k] = static_cast<uint8_t>((r.c_[k] + a.c_[i] * b.c_[j]) % M);
            }
        }
        r.trim();
        return r;
    }

    /// Division with remainder. The divisor must be monic so the division is
    /// well defined over Z4 despite zero divisors. Returns (quotient, remainder)
    /// with deg(remainder) < deg(divisor).
    static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
        if (!b.is_monic()) throw std::domain_error("divrem: divisor must be monic");
        Poly q, r = a;
        int db = b.degree();
        if (r.degree() >= db) q.c_.assign(static_cast<size_t>(r.degree() - db) + 1, 0);
        while (r.degree() >= db) {
            int shift = r.degree() - db;
            uint8_t coef = r.c_.back();
            q.c_[static_cast<size_t>(shift)] = coef;
            for (size_t i = 0; i < b.c_.size(); ++i) {
                size_t k = static_cast<size_t>(shift) + i;
                r.c_[k] = static_cast<uint8_t>((r.c_[k] + M - coef * b.c_[i] % M) % M);
            }
            r.trim();
        }
        q.trim();
        return {q, r};
    }

    bool divides(const Poly& a) const { return divrem(a, *this).second.is_zero(); }

   private:
    std::vector<uint8_t> c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

using PolyZ2 = Poly<2>;
using PolyZ4 = Poly<4>;

inline PolyZ2 reduce_mod2(const PolyZ4& p) {
    std::vector<uint8_t> c(p.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = p.coeffs()[i] & 1;
    return PolyZ2(std::move(c));
}

/// Coefficient-wise embedding of a binary polynomial into Z4[x] (bits as 0/1).
inline PolyZ4 lift01(const PolyZ2& p) {
    return PolyZ4(std::vector<uint8_t>(p.coeffs().begin(), p.coeffs().end()));
}

inline PolyZ2 gcd(PolyZ2 a, PolyZ2 b) {
    while (!b.is_zero()) {
        PolyZ2 r = PolyZ2::divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Coprimality over Z4[x]: f and g are coprime iff their mod-2 reductions are
/// coprime over Z2[x].
inline bool coprime_z4(const PolyZ4& a, const PolyZ4& b) {
    return gcd(reduce_mod2(a), reduce_mod2(b)).is_one();
}

/// Parse a coefficient string: digit i of s (ASCII, ascending powers) is the
/// coefficient of x^i.
template <unsigned M>
inline Poly<M> parse_poly(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("parse_poly: empty coefficient string");
    std::vector<uint8_t> c;
    c.reserve(s.size());
    for (char ch : s) {
        if (ch < '0' || ch >= static_cast<char>('0' + M))
            throw std::invalid_argument(std::string("parse_poly: invalid digit '") + ch + "' for modulus " +
                                        std::to_string(M));
        c.push_back(static_cast<uint8_t>(ch - '0'));
    }
    return Poly<M>(std::move(c));
}

inline PolyZ2 parse_poly_z2(std::string_view s) { return parse_poly<2>(s); }
inline PolyZ4 parse_poly_z4(std::string_view s) { return parse_poly<4>(s); }

template <unsigned M>
inline std::string format_poly(const Poly<M>& p) {
    if (p.is_zero()) return "0";
    std::string s;
    s.reserve(p.coeffs().size());
    for (uint8_t v : p.coeffs()) s.push_back(static_cast<char>('0' + v));
    return s;
}

/// Canonical ordering used for reproducible factor/divisor listings:
/// degree first, then the coefficient string (ascending powers) lexicographically.
template <unsigned M>
inline bool canonical_less(const Poly<M>& a, const Poly<M>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs() < b.coeffs();
}

}  // namespace z4
