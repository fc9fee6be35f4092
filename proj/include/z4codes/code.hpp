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
#include <istream>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "poly.hpp"

namespace z4 {

class Z4Matrix {
   public:
    Z4Matrix() = default;
    Z4Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Z4Matrix from_rows(const std::vector<std::vector<uint8_t>>& rows) {
        if (rows.empty()) throw std::invalid_argument("Z4Matrix: cannot infer width from zero rows");
        Z4Matrix m(rows.size(), rows.front().size());
        for (size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != m.cols_) throw std::invalid_argument("Z4Matrix: ragged rows");
            for (size_t c = 0; c < m.cols_; ++c) {
                if (rows[r][c] > 3) throw std::invalid_argument("Z4Matrix: entry out of range");
                m.at(r, c) = rows[r][c];
            }
        }
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    uint8_t& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    uint8_t at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    std::vector<uint8_t> row(size_t r) const {
        return std::vector<uint8_t>(a_.begin() + static_cast<long>(r * cols_),
                                    a_.begin() + static_cast<long>((r + 1) * cols_));
    }

    friend bool operator==(const Z4Matrix& a, const Z4Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

   private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<uint8_t> a_;
};

/// Row-per-line digit-string serialization, same digit convention as
/// coefficient strings (column j = digit j).
inline std::string format_matrix(const Z4Matrix& m) {
    std::string out;
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c = 0; c < m.cols(); ++c) out.push_back(static_cast<char>('0' + m.at(r, c)));
        out.push_back('\n');
    }
    return out;
}

inline Z4Matrix parse_matrix(std::istream& in) {
    std::vector<std::vector<uint8_t>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<uint8_t> row;
        row.reserve(line.size());
        for (char ch : line) {
            if (ch < '0' || ch > '3') throw std::invalid_argument("parse_matrix: invalid digit");
            row.push_back(static_cast<uint8_t>(ch - '0'));
        }
        rows.push_back(std::move(row));
    }
    return Z4Matrix::from_rows(rows);
}

/// A Z4-linear code held as a standard-form generator matrix
///     [ I  A  B ]
///     [ 0 2I 2C ]
/// of type 4^k1 * 2^k2, together with the column permutation mapping
/// standard-form coordinates back to the original ones.
class Z4Code {
   public:
    int n = 0;
    int k1 = 0;
    int k2 = 0;
    Z4Matrix gen;           // (k1+k2) x n in standard form
    std::vector<int> perm;  // perm[j] = original coordinate of standard column j

    int rank_rows() const { return k1 + k2; }
    int size_log2() const { return 2 * k1 + k2; }
    bool is_zero_code() const { return k1 + k2 == 0; }

    /// Row-reduce an arbitrary generator matrix over Z4 into standard form.
    /// Unit pivots are taken first (giving k1), then 2-pivots (giving k2);
    /// column swaps are recorded in perm. Zero rows are dropped.
    static Z4Code standard_form(const Z4Matrix& m) {
        size_t rows = m.rows(), n = m.cols();
        if (n == 0) throw std::invalid_argument("standard_form: zero-width matrix");
        std::vector<std::vector<uint8_t>> w(rows);
        for (size_t r = 0; r < rows; ++r) w[r] = m.row(r);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);

        auto swap_cols = [&](size_t a, size_t b) {
            if (a == b) return;
            for (auto& row : w) std::swap(row[a], row[b]);
            std::swap(perm[a], perm[b]);
        };

        size_t p = 0;
        // unit pivots
        while (p < rows) {
            size_t pi = rows, pj = n;
            for (size_t j = p; j < n && pi == rows; ++j)
                for (size_t i = p; i < rows; ++i)
                    if (w[i][j] == 1 || w[i][j] == 3) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == rows) break;
            std::swap(w[p], w[pi]);
            swap_cols(p, pj);
            if (w[p][p] == 3)  // scale by the unit inverse (3*3 = 1)
                for (auto& v : w[p]) v = static_cast<uint8_t>((v * 3) & 3);
            for (size_t r = 0; r < rows; ++r) {
                if (r == p || w[r][p] == 0) continue;
                uint8_t coef = w[r][p];
                for (size_t j = 0; j < n; ++j) w[r][j] = static_cast<uint8_t>((w[r][j] + 4 - coef * w[p][j] % 4) & 3);
            }
            ++p;
        }
        int k1 = static_cast<int>(p);

        // 2-pivots; remaining entries in rows >= k1 are all in {0,2}
        while (p < rows) {
            size_t pi = rows, pj = n;
            for (size_t j = p; j < n && pi == rows; ++j)
                for (size_t i = p; i < rows; ++i)
                    if (w[i][j] == 2) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == rows) break;
            std::swap(w[p], w[pi]);
            swap_cols(p, pj);
            for (size_t r = 0; r < rows; ++r) {
                if (r == p) continue;
                if (w[r][p] >= 2)  // brings unit-row entries into {0,1}, clears 2-row entries
                    for (size_t j = 0; j < n; ++j) w[r][j] = static_cast<uint8_t>((w[r][j] + 4 - w[p][j]) & 3);
            }
            ++p;
        }
        int k2 = static_cast<int>(p) - k1;

        for (size_t r = p; r < rows; ++r)
            for (uint8_t v : w[r])
                if (v != 0) throw std::logic_error("standard_form: nonzero residual row");

        Z4Code c;
        c.n = static_cast<int>(n);
        c.k1 = k1;
        c.k2 = k2;
        c.perm = std::move(perm);
        c.gen = Z4Matrix(p, n);
        for (size_t r = 0; r < p; ++r)
            for (size_t j = 0; j < n; ++j) c.gen.at(r, j) = w[r][j];
        return c;
    }

    std::vector<uint8_t> to_original(std::span<const uint8_t> std_word) const {
        std::vector<uint8_t> out(static_cast<size_t>(n));
        for (size_t j = 0; j < out.size(); ++j) out[static_cast<size_t>(perm[j])] = std_word[j];
        return out;
    }
    std::vector<uint8_t> to_standard(std::span<const uint8_t> orig_word) const {
        std::vector<uint8_t> out(static_cast<size_t>(n));
        for (size_t j = 0; j < out.size(); ++j) out[j] = orig_word[static_cast<size_t>(perm[j])];
        return out;
    }

    /// Membership test in standard-form coordinates.
    bool contains_std(std::span<const uint8_t> word) const {
        if (static_cast<int>(word.size()) != n) throw std::invalid_argument("contains_std: length mismatch");
        std::vector<uint8_t> res(word.begin(), word.end());
        for (int i = 0; i < k1; ++i) {
            uint8_t m = res[static_cast<size_t>(i)];
            if (m == 0) continue;
            for (int j = 0; j < n; ++j)
                res[static_cast<size_t>(j)] = static_cast<uint8_t>(
                    (res[static_cast<size_t>(j)] + 4 - m * gen.at(static_cast<size_t>(i), static_cast<size_t>(j)) % 4) &
                    3);
        }
        for (int i = 0; i < k2; ++i) {
            uint8_t v = res[static_cast<size_t>(k1 + i)];
            if (v & 1) return false;
            if (v == 2)
                for (int j = 0; j < n; ++j)
                    res[static_cast<size_t>(j)] = static_cast<uint8_t>(
                        (res[static_cast<size_t>(j)] + 4 -
                         gen.at(static_cast<size_t>(k1 + i), static_cast<size_t>(j))) &
                        3);
        }
        for (uint8_t v : res)
            if (v != 0) return false;
        return true;
    }

    bool contains(std::span<const uint8_t> orig_word) const { return contains_std(to_standard(orig_word)); }
};

/// Dual code. Built from the standard-form blocks as
///     [ -(B + A C)^T  C^T  I ]
///     [     2 A^T     2I   0 ]
/// then re-permuted into the original coordinates. Orthogonality and the size
/// identity |C| * |D| = 4^n are verified; failure throws rather than returning
/// an unverified dual.
inline Z4Code dual(const Z4Code& c) {
    const int n = c.n, k1 = c.k1, k2 = c.k2, k3 = n - k1 - k2;
    if (k3 < 0) throw std::logic_error("dual: invalid type");

    Z4Matrix h(static_cast<size_t>(k3 + k2), static_cast<size_t>(n));
    // top block: [P  C^T  I], P = -(B + A C)^T
    for (int r = 0; r < k3; ++r) {
        for (int i = 0; i < k1; ++i) {
            int ac = 0;
            for (int t = 0; t < k2; ++t)
                ac += c.gen.at(static_cast<size_t>(i), static_cast<size_t>(k1 + t)) *
                      (c.gen.at(static_cast<size_t>(k1 + t), static_cast<size_t>(k1 + k2 + r)) / 2);
            int b = c.gen.at(static_cast<size_t>(i), static_cast<size_t>(k1 + k2 + r));
            h.at(static_cast<size_t>(r), static_cast<size_t>(i)) = static_cast<uint8_t>(((-(b + ac)) % 4 + 4) % 4);
        }
        for (int t = 0; t < k2; ++t)
            h.at(static_cast<size_t>(r), static_cast<size_t>(k1 + t)) =
                c.gen.at(static_cast<size_t>(k1 + t), static_cast<size_t>(k1 + k2 + r)) / 2;
        h.at(static_cast<size_t>(r), static_cast<size_t>(k1 + k2 + r)) = 1;
    }
    // bottom block: [2A^T  2I  0]
    for (int r = 0; r < k2; ++r) {
        for (int i = 0; i < k1; ++i)
            h.at(static_cast<size_t>(k3 + r), static_cast<size_t>(i)) =
                static_cast<uint8_t>((2 * c.gen.at(static_cast<size_t>(i), static_cast<size_t>(k1 + r))) & 3);
        h.at(static_cast<size_t>(k3 + r), static_cast<size_t>(k1 + r)) = 2;
    }

    // orthogonality in standard coordinates
    for (int r = 0; r < c.rank_rows(); ++r)
        for (int s = 0; s < k3 + k2; ++s) {
            int dot = 0;
            for (int j = 0; j < n; ++j)
                dot += c.gen.at(static_cast<size_t>(r), static_cast<size_t>(j)) *
                       h.at(static_cast<size_t>(s), static_cast<size_t>(j));
            if (dot % 4 != 0) throw std::logic_error("dual: orthogonality check failed");
        }

    Z4Code d;
    if (k3 + k2 == 0) {
        Z4Matrix empty(0, static_cast<size_t>(n));
        d = Z4Code::standard_form(empty);
    } else {
        Z4Matrix h_orig(static_cast<size_t>(k3 + k2), static_cast<size_t>(n));
        for (int r = 0; r < k3 + k2; ++r)
            for (int j = 0; j < n; ++j)
                h_orig.at(static_cast<size_t>(r), static_cast<size_t>(c.perm[static_cast<size_t>(j)])) =
                    h.at(static_cast<size_t>(r), static_cast<size_t>(j));
        d = Z4Code::standard_form(h_orig);
    }
    if (d.k1 != k3 || d.k2 != k2) throw std::logic_error("dual: size identity |C||D| = 4^n failed");
    return d;
}

}  // namespace z4
