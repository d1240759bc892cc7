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
// Moving a noncentral element into U = U^+ + U^-.

#include "liemap/chevalley.hpp"
#include "liemap/matrixrep.hpp"
#include "liemap/rng.hpp"

namespace liemap {

namespace {

struct Transvection {
    std::size_t i, j;
    Scalar t;
};

// A <- (I + t E_ij) A (I - t E_ij)
void conjugate_by(Matrix& a, const Transvection& m) {
    const std::size_t n = a.rows();
    for (std::size_t c = 0; c < n; ++c) a(m.i, c) += m.t * a(m.j, c);
    for (std::size_t r = 0; r < n; ++r) a(r, m.j) -= m.t * a(r, m.i);
}

// Trailing block from `start` is fine when it is of size <= 1, not scalar, or already zero.
bool block_ok(const Matrix& a, std::size_t start) {
    const std::size_t n = a.rows();
    if (n - start <= 1) return true;
    bool scalar = true;
    for (std::size_t r = start; r < n && scalar; ++r)
        for (std::size_t c = start; c < n && scalar; ++c)
            if (r == c ? a(r, c) != a(start, start) : !a(r, c).is_zero()) scalar = false;
    return !scalar || a(start, start).is_zero();
}

// A move making a(i, i) zero with the block after i still workable.
std::optional<Transvection> direct_move(const Matrix& a, std::size_t i) {
    const std::size_t n = a.rows();
    if (a(i, i).is_zero() && block_ok(a, i + 1)) return Transvection{i, i, a(i, i)};  // no-op marker
    for (std::size_t j = i + 1; j < n; ++j) {
        std::vector<Transvection> tries;
        // (I + tE_ij): a_ii += t a_ji
        if (!a(j, i).is_zero()) tries.push_back({i, j, -a(i, i) / a(j, i)});
        // (I + tE_ji): a_ii -= t a_ij
        if (!a(i, j).is_zero()) tries.push_back({j, i, a(i, i) / a(i, j)});
        for (const auto& m : tries) {
            Matrix b = a;
            conjugate_by(b, m);
            if (b(i, i).is_zero() && block_ok(b, i + 1)) return m;
        }
    }
    return std::nullopt;
}

std::vector<Transvection> zero_diagonal(Matrix a) {
    const std::size_t n = a.rows();
    const Field& field = a.field();
    std::vector<Transvection> moves;
    auto apply = [&](const Transvection& m) {
        if (m.i == m.j) return;
        conjugate_by(a, m);
        moves.push_back(m);
    };
    if (!block_ok(a, 0)) throw Error(ErrorCode::CentralElement, "scalar matrices cannot be moved off the diagonal");
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (auto m = direct_move(a, i)) {
            apply(*m);
            continue;
        }
        bool done = false;
        for (long long t0 : {1LL, -1LL, 2LL}) {
            for (std::size_t j = i + 1; j < n && !done; ++j)
                for (int dir = 0; dir < 2 && !done; ++dir) {
                    Transvection pre = dir == 0 ? Transvection{i, j, field.from_int(t0)} : Transvection{j, i, field.from_int(t0)};
                    Matrix b = a;
                    conjugate_by(b, pre);
                    if (auto m = direct_move(b, i)) {
                        apply(pre);
                        apply(*m);
                        done = true;
                    }
                }
            if (done) break;
        }
        if (!done) throw Error(ErrorCode::BudgetExceeded, "no transvection clears diagonal entry " + std::to_string(i));
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!a(i, i).is_zero()) throw Error(ErrorCode::InternalFailure, "diagonal not cleared");
    return moves;
}

GaussResult via_transvections(const ChevalleyAlgebra& alg, const AlgElement& l) {
    ChevalleyRealization real(alg);
    const Field& field = alg.field();
    const std::size_t n = real.realization().n;
    Matrix a = real.to_matrix(l).value;
    auto moves = zero_diagonal(a);

    Matrix g = Matrix::identity(field, n);
    Matrix g_inv = Matrix::identity(field, n);
    std::vector<Automorphism::Factor> factors;
    const auto& roots = alg.root_system().roots();
    for (const auto& m : moves) {
        Matrix step = Matrix::identity(field, n);
        step(m.i, m.j) = m.t;
        Matrix step_inv = Matrix::identity(field, n);
        step_inv(m.i, m.j) = -m.t;
        g = step * g;
        g_inv = g_inv * step_inv;
        // E_ij is +-X_beta for the root beta = eps_i - eps_j; record x_beta(s) with s X_beta = t E_ij.
        for (std::size_t k = 0; k < roots.size(); ++k) {
            const Matrix& x = real.image(alg.e_index(k)).value;
            if (!x(m.i, m.j).is_zero()) {
                factors.insert(factors.begin(), Automorphism::Factor{k, m.t / x(m.i, m.j)});
                break;
            }
        }
    }
    Automorphism aut(alg.id(), real.conjugation_matrix(g, g_inv), std::move(factors));
    AlgElement u = apply_automorphism(aut, l);
    return GaussResult{std::move(aut), std::move(u), "type_a_transvections"};
}

// Greedy path: x_{+-alpha_i}(t) shifts only the h_i coordinate of the H-part, by t l_{-+alpha_i}.
GaussResult via_root_automorphisms(const ChevalleyAlgebra& alg, const AlgElement& l, const GaussOptions& options) {
    const Field& field = alg.field();
    const auto& rs = alg.root_system();
    const std::size_t r = alg.rank();
    const std::size_t nroots = rs.roots().size();
    Rng rng(options.seed);
    Automorphism g = Automorphism::identity(alg);
    AlgElement cur = l;
    std::size_t spent = 0;
    auto step = [&](std::size_t root, const Scalar& t) {
        auto x = root_automorphism(alg, root, t);
        Automorphism a(alg.id(), x.matrix, {Automorphism::Factor{root, t}});
        g = a.compose(g);
        cur = apply_automorphism(x, alg, cur);
        ++spent;
    };
    while (spent <= options.budget) {
        bool progress = true;
        while (progress) {
            progress = false;
            for (std::size_t i = 0; i < r; ++i) {
                if (cur.coeffs[i].is_zero()) continue;
                const std::size_t pos = i, neg = rs.negative_index(i);
                const Scalar& lneg = cur.coeffs[alg.e_index(neg)];
                const Scalar& lpos = cur.coeffs[alg.e_index(pos)];
                if (!lneg.is_zero()) {
                    step(pos, -cur.coeffs[i] / lneg);
                    progress = true;
                } else if (!lpos.is_zero()) {
                    step(neg, cur.coeffs[i] / lpos);
                    progress = true;
                }
            }
        }
        bool clear = true;
        for (std::size_t i = 0; i < r; ++i) clear = clear && cur.coeffs[i].is_zero();
        if (clear) return GaussResult{std::move(g), std::move(cur), "randomized_root_automorphisms"};
        const std::size_t root = rng.below(nroots);
        long long t = rng.between(1, 3);
        step(root, field.from_int(rng.below(2) ? t : -t));
    }
    throw Error(ErrorCode::BudgetExceeded,
                "root-automorphism search spent its budget of " + std::to_string(options.budget) + " steps");
}

}  // namespace

GaussResult conjugate_into_U(const ChevalleyAlgebra& alg, const AlgElement& l, const GaussOptions& options) {
    alg.require_member(l);
    if (alg.is_central(l)) throw Error(ErrorCode::CentralElement, "central elements cannot be moved into U");
    bool in_u = true;
    for (std::size_t i = 0; i < alg.rank(); ++i) in_u = in_u && l.coeffs[i].is_zero();
    if (in_u) return GaussResult{Automorphism::identity(alg), l, "identity"};
    GaussResult out = alg.root_system().type() == RootType::A ? via_transvections(alg, l)
                                                              : via_root_automorphisms(alg, l, options);
    if (!(apply_automorphism(out.g, l) == out.u)) throw Error(ErrorCode::InternalFailure, "conjugation check failed");
    for (std::size_t i = 0; i < alg.rank(); ++i)
        if (!out.u.coeffs[i].is_zero()) throw Error(ErrorCode::InternalFailure, "H-part not cleared");
    return out;
}

}  // namespace liemap
