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
#include <functional>
#include <vector>

#include "gf2m.hpp"
#include "poly.hpp"

namespace z4 {

/// Factorization of x^n - 1 over Z2 for odd n: monic irreducible factors in
/// canonical order (degree, then coefficient string). r() is the factor count,
/// equal to the number of 2-cyclotomic cosets mod n.
struct FactorizationZ2 {
    int n = 0;
    std::vector<PolyZ2> factors;
    int r() const { return static_cast<int>(factors.size()); }
};

/// Orbits of i -> 2i mod n on {0, ..., n-1}, each sorted, listed by smallest element.
inline std::vector<std::vector<int>> cyclotomic_cosets_mod2(int n) {
    std::vector<std::vector<int>> cosets;
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        std::vector<int> c;
        int j = i;
        do {
            seen[static_cast<size_t>(j)] = true;
            c.push_back(j);
            j = (2 * j) % n;
        } while (j != i);
        std::sort(c.begin(), c.end());
        cosets.push_back(std::move(c));
    }
    return cosets;
}

/// Multiplicative order of 2 modulo odd n (1 for n = 1).
inline int order_of_two_mod(int n) {
    if (n == 1) return 1;
    int acc = 2 % n, s = 1;
    while (acc != 1) {
        acc = (2 * acc) % n;
        ++s;
    }
    return s;
}

inline FactorizationZ2 factor_xn1_z2(int n) {
    if (n <= 0 || n % 2 == 0) throw std::domain_error("factor_xn1_z2: n must be odd and positive");
    if (n > 127) throw std::domain_error("factor_xn1_z2: n out of supported range (<= 127)");

    FactorizationZ2 fz;
    fz.n = n;
    if (n == 1) {
        fz.factors.push_back(parse_poly_z2("11"));  // x + 1
        return fz;
    }

    int s = order_of_two_mod(n);
    detail::Gf2Field field(s);
    detail::B128 alpha = field.element_of_order(n);

    for (const auto& coset : cyclotomic_cosets_mod2(n)) {
        // Minimal polynomial of alpha^j over GF(2): product of (x - rho) over the
        // Frobenius orbit rho = alpha^j, rho^2, rho^4, ...
        detail::B128 rho = field.pow(alpha, static_cast<unsigned>(coset.front()));
        std::vector<detail::B128> m{field.one()};
        for (size_t step = 0; step < coset.size(); ++step) {
            std::vector<detail::B128> next(m.size() + 1);
            for (size_t i = 0; i < m.size(); ++i) {
                next[i + 1] ^= m[i];
                next[i] ^= field.mul(m[i], rho);
            }
            m = std::move(next);
            rho = field.sqr(rho);
        }
        std::vector<uint8_t> bits(m.size());
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i].is_zero())
                bits[i] = 0;
            else if (m[i] == field.one())
                bits[i] = 1;
            else
                throw std::logic_error("factor_xn1_z2: minimal polynomial has a coefficient outside GF(2)");
        }
        fz.factors.emplace_back(std::move(bits));
    }

    std::sort(fz.factors.begin(), fz.factors.end(), canonical_less<2>);

    PolyZ2 prod = PolyZ2::one();
    for (const auto& f : fz.factors) prod = prod * f;
    if (prod != PolyZ2::xn_minus_1(n)) throw std::logic_error("factor_xn1_z2: factor product check failed");
    return fz;
}

/// Hensel lift of a monic divisor of x^n - 1 over Z2 to the unique monic divisor
/// of x^n - 1 over Z4, via the Graeffe construction: with f2 = e + o split into
/// even- and odd-degree parts, the lift f satisfies f(x^2) = +-(e(x)^2 - o(x)^2).
inline PolyZ4 hensel_lift(const PolyZ2& f2, int n) {
    if (!f2.is_monic()) throw std::domain_error("hensel_lift: input must be monic");
    if (!PolyZ2::divrem(PolyZ2::xn_minus_1(n), f2).second.is_zero())
        throw std::domain_error("hensel_lift: input does not divide x^n-1 over Z2");

    PolyZ4 lifted = lift01(f2);
    std::vector<uint8_t> ec(lifted.coeffs().size(), 0), oc(lifted.coeffs().size(), 0);
    for (size_t i = 0; i < lifted.coeffs().size(); ++i) ((i % 2 == 0) ? ec : oc)[i] = lifted.coeffs()[i];
    PolyZ4 e{std::vector<uint8_t>(ec)}, o{std::vector<uint8_t>(oc)};

    PolyZ4 t = e * e - o * o;
    if (f2.degree() % 2 == 1) t = -t;

    std::vector<uint8_t> g(static_cast<size_t>(f2.degree()) + 1, 0);
    for (size_t i = 0; i < t.coeffs().size(); ++i) {
        if (i % 2 == 1 && t.coeffs()[i] != 0) throw std::logic_error("hensel_lift: odd-degree residue");
        if (i % 2 == 0) g[i / 2] = t.coeffs()[i];
    }
    PolyZ4 f{std::move(g)};

    if (!f.is_monic() || f.degree() != f2.degree() || reduce_mod2(f) != f2 ||
        !PolyZ4::divrem(PolyZ4::xn_minus_1(n), f).second.is_zero())
        throw std::logic_error("hensel_lift: lift verification failed");
    return f;
}

/// All 2^r monic divisors of x^n - 1 over Z4 (products of Hensel-lifted factor
/// subsets), visited in subset-Gray order with one multiplication or exact
/// division per step.
inline void divisor_lattice(const FactorizationZ2& fz, const std::function<void(const PolyZ4&)>& visit) {
    std::vector<PolyZ4> lifts;
    lifts.reserve(fz.factors.size());
    for (const auto& f : fz.factors) lifts.push_back(hensel_lift(f, fz.n));

    const size_t r = lifts.size();
    PolyZ4 cur = PolyZ4::one();
    visit(cur);
    std::vector<bool> in(r, false);
    for (uint64_t k = 1; k < (uint64_t(1) << r); ++k) {
        int bit = std::countr_zero(k);  // Gray code flips this factor
        if (!in[static_cast<size_t>(bit)]) {
            cur = cur * lifts[static_cast<size_t>(bit)];
        } else {
            auto [q, rem] = PolyZ4::divrem(cur, lifts[static_cast<size_t>(bit)]);
            if (!rem.is_zero()) throw std::logic_error("divisor_lattice: non-exact division");
            cur = std::move(q);
        }
        in[static_cast<size_t>(bit)] = !in[static_cast<size_t>(bit)];
        visit(cur);
    }
}

/// Materialized divisor lattice in canonical order.
inline std::vector<PolyZ4> divisor_lattice(const FactorizationZ2& fz) {
    std::vector<PolyZ4> out;
    out.reserve(size_t(1) << fz.factors.size());
    divisor_lattice(fz, [&](const PolyZ4& d) { out.push_back(d); });
    std::sort(out.begin(), out.end(), canonical_less<4>);
    return out;
}

}  // namespace z4
