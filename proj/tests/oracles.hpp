/* Copyright 2026 The liemap Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Independent reference computations for tests. Nothing here calls into the library's
// arithmetic; integers mod p and plain vectors only.

#ifndef LIEMAP_TESTS_ORACLES_HPP
#define LIEMAP_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "liemap/freelie.hpp"

namespace oracle {

using Mat = std::vector<std::vector<long long>>;

inline long long mod(long long a, long long p) { return ((a % p) + p) % p; }

inline Mat zeros(std::size_t r, std::size_t c) { return Mat(r, std::vector<long long>(c, 0)); }

inline Mat mul(const Mat& a, const Mat& b, long long p) {
    Mat out = zeros(a.size(), b[0].size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            if (a[i][k])
                for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] = mod(out[i][j] + a[i][k] * b[k][j], p);
    return out;
}

inline Mat commutator(const Mat& a, const Mat& b, long long p) {
    Mat ab = mul(a, b, p), ba = mul(b, a, p);
    for (std::size_t i = 0; i < ab.size(); ++i)
        for (std::size_t j = 0; j < ab.size(); ++j) ab[i][j] = mod(ab[i][j] - ba[i][j], p);
    return ab;
}

inline long long modinv(long long a, long long p) {
    long long r = 1, e = p - 2;
    a = mod(a, p);
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

// Rank of a matrix mod prime p by plain elimination.
inline std::size_t rank_mod(Mat m, long long p) {
    std::size_t r = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && mod(m[piv][c], p) == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        const long long inv = modinv(m[r][c], p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const long long f = mod(m[i][c] * inv, p);
            if (f)
                for (std::size_t j = c; j < cols; ++j) m[i][j] = mod(m[i][j] - f * m[r][j], p);
        }
        ++r;
    }
    return r;
}

// Evaluates a Lie polynomial tree on matrices mod p by commutators.
inline Mat eval_matrix(const liemap::LiePoly::Node& n, const std::vector<Mat>& vals, long long p) {
    using K = liemap::LiePoly::Kind;
    if (n.kind == K::Var) return vals[static_cast<std::size_t>(n.var - 1)];
    if (n.kind == K::Bracket) return commutator(eval_matrix(*n.left, vals, p), eval_matrix(*n.right, vals, p), p);
    const std::size_t d = vals.at(0).size();
    Mat acc = zeros(d, d);
    for (const auto& [c, child] : n.terms) {
        mpq_class q = c;
        const long long num = mod(q.get_num().get_si(), p), den = mod(q.get_den().get_si(), p);
        const long long coeff = num * modinv(den, p) % p;
        Mat v = eval_matrix(*child, vals, p);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) acc[i][j] = mod(acc[i][j] + coeff * v[i][j], p);
    }
    return acc;
}

// Lyndon test by comparing with every proper rotation.
inline bool lyndon_by_rotation(const std::vector<int>& w) {
    for (std::size_t k = 1; k < w.size(); ++k) {
        std::vector<int> rot(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
        if (!(w < rot)) return false;
    }
    return !w.empty();
}

// Witt's necklace count of Lyndon words of length n over k letters.
inline long long witt(int n, int k) {
    auto mobius = [](int m) {
        int res = 1;
        for (int q = 2; q * q <= m; ++q)
            if (m % q == 0) {
                m /= q;
                if (m % q == 0) return 0;
                res = -res;
            }
        if (m > 1) res = -res;
        return res;
    };
    long long total = 0;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) {
            long long pw = 1;
            for (int i = 0; i < n / d; ++i) pw *= k;
            total += mobius(d) * pw;
        }
    return total / n;
}

// Length of the alpha-string through beta going down, on coordinate vectors.
inline int chain_down(const std::set<std::vector<int>>& roots, const std::vector<int>& alpha, std::vector<int> beta) {
    int steps = 0;
    for (;;) {
        for (std::size_t i = 0; i < beta.size(); ++i) beta[i] -= alpha[i];
        if (!roots.count(beta)) return steps;
        ++steps;
    }
}

}  // namespace oracle

#endif  // LIEMAP_TESTS_ORACLES_HPP
