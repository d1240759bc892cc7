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

#include <doctest.h>

#include <set>

#include "liemap/chevalley.hpp"
#include "liemap/matrixrep.hpp"
#include "liemap/rng.hpp"
#include "oracles.hpp"

using namespace liemap;

TEST_CASE("sl(2) relations") {
    const auto sl2 = ChevalleyAlgebra::build(RootType::A, 1, Field::rationals());
    const auto h = sl2.basis(0), e = sl2.basis(1), f = sl2.basis(2);
    CHECK(sl2.bracket(e, f) == h);
    CHECK(sl2.bracket(h, e) == sl2.scale(Field::rationals().from_int(2), e));
    CHECK(sl2.bracket(h, f) == sl2.scale(Field::rationals().from_int(-2), f));
}

TEST_CASE("structure constants: q values, |N| = p + 1, simple coroots") {
    for (auto [t, r] : {std::pair{RootType::A, 3}, {RootType::B, 3}, {RootType::C, 3}, {RootType::D, 4}, {RootType::G, 2}}) {
        const auto alg = ChevalleyAlgebra::build(t, r, Field::rationals());
        const auto& roots = alg.root_system().roots();
        std::set<std::vector<int>> coords;
        for (const auto& root : roots) coords.insert(root.coords);
        bool saw_three = false;
        for (std::size_t b = 0; b < roots.size(); ++b)
            for (std::size_t g = 0; g < roots.size(); ++g) {
                const int q = alg.q(b, g);
                CHECK(std::abs(q) <= 3);
                saw_three = saw_three || std::abs(q) == 3;
                if (b == g || roots[b] == -roots[g]) continue;
                std::vector<int> sum(roots[b].coords);
                for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += roots[g].coords[i];
                if (coords.count(sum))
                    CHECK(std::abs(alg.n(b, g)) == oracle::chain_down(coords, roots[b].coords, roots[g].coords) + 1);
                else
                    CHECK(alg.n(b, g) == 0);
            }
        CHECK(saw_three == (t == RootType::G));
        for (int i = 0; i < r; ++i) {
            const std::size_t a = static_cast<std::size_t>(i);
            CHECK(alg.bracket(alg.basis(alg.e_index(a)), alg.basis(alg.e_index(alg.root_system().negative_index(a)))) ==
                  alg.basis(a));
        }
    }
}

TEST_CASE("Jacobi and antisymmetry over Q and F7") {
    for (const Field& f : {Field::rationals(), Field::prime(7)})
        for (auto [t, r] : {std::pair{RootType::A, 2}, {RootType::B, 2}, {RootType::G, 2}}) {
            const auto alg = ChevalleyAlgebra::build(t, r, f);
            CHECK(antisymmetry_violations(alg) == 0);
            CHECK(jacobi_violations(alg) == 0);
        }
}

TEST_CASE("A_r bracket matches matrix commutators of E_ij") {
    // Independent check: e_{eps_i - eps_j} maps to +-E_ij; compare brackets entrywise mod 7.
    const long long p = 7;
    const auto alg = ChevalleyAlgebra::build(RootType::A, 3, Field::prime(7));
    ChevalleyRealization real(alg);
    const std::size_t n = 4;
    auto to_mat = [&](const AlgElement& x) {
        const Matrix m = real.to_matrix(x).value;
        oracle::Mat out = oracle::zeros(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out[i][j] = static_cast<long long>(m(i, j).residue_value());
        return out;
    };
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = 0; j < alg.dim(); ++j)
            CHECK(to_mat(alg.bracket(alg.basis(i), alg.basis(j))) ==
                  oracle::commutator(to_mat(alg.basis(i)), to_mat(alg.basis(j)), p));
}

TEST_CASE("center: nontrivial exactly when p divides n for sl(n)") {
    CHECK(ChevalleyAlgebra::build(RootType::A, 2, Field::prime(3)).center().size() == 1);
    CHECK(ChevalleyAlgebra::build(RootType::A, 2, Field::prime(5)).center().empty());
    CHECK(ChevalleyAlgebra::build(RootType::A, 2, Field::rationals()).center().empty());
    CHECK(ChevalleyAlgebra::build(RootType::A, 3, Field::prime(2)).center().size() == 1);
}

TEST_CASE("find_regular avoids given values") {
    const auto alg = ChevalleyAlgebra::build(RootType::B, 2, Field::prime(11));
    const Scalar avoid[] = {alg.field().zero(), alg.field().from_int(1)};
    const AlgElement h = find_regular(alg, avoid);
    for (std::size_t k = 0; k < alg.root_system().roots().size(); ++k) {
        const Scalar v = alg.root_value(k, h);
        CHECK(!v.is_zero());
        CHECK(!v.is_one());
    }
    const auto tiny = ChevalleyAlgebra::build(RootType::A, 2, Field::prime(2));
    const Scalar zero[] = {tiny.field().zero()};
    CHECK_THROWS_AS(find_regular(tiny, zero), Error);
}

TEST_CASE("root automorphisms preserve brackets") {
    const auto alg = ChevalleyAlgebra::build(RootType::G, 2, Field::prime(7));
    Rng rng(11);
    auto random_element = [&] {
        Vector v;
        for (std::size_t k = 0; k < alg.dim(); ++k) v.push_back(alg.field().element(rng.below(7)));
        return alg.element(std::move(v));
    };
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = root_automorphism(alg, rng.below(alg.root_system().roots().size()),
                                         alg.field().element(1 + rng.below(6)));
        const AlgElement x = random_element(), y = random_element();
        CHECK(apply_automorphism(g, alg, alg.bracket(x, y)) ==
              alg.bracket(apply_automorphism(g, alg, x), apply_automorphism(g, alg, y)));
    }
    CHECK_THROWS_AS(root_automorphism(ChevalleyAlgebra::build(RootType::A, 2, Field::prime(3)), 0,
                                      Field::prime(3).one()),
                    Error);
}

TEST_CASE("conjugate_into_U clears the Cartan part") {
    for (auto [t, r, p] : {std::tuple{RootType::A, 2, 5}, {RootType::A, 3, 7}, {RootType::B, 2, 7}, {RootType::G, 2, 11}}) {
        const auto alg = ChevalleyAlgebra::build(t, r, Field::prime(static_cast<std::uint64_t>(p)));
        Rng rng(static_cast<std::uint64_t>(p));
        for (int trial = 0; trial < 25; ++trial) {
            Vector v;
            for (std::size_t k = 0; k < alg.dim(); ++k)
                v.push_back(alg.field().element(rng.below(static_cast<std::uint64_t>(p))));
            const AlgElement l = alg.element(std::move(v));
            if (alg.is_central(l)) continue;
            const GaussResult res = conjugate_into_U(alg, l);
            CHECK(apply_automorphism(res.g, l) == res.u);
            for (std::size_t i = 0; i < alg.rank(); ++i) CHECK(res.u.coeffs[i].is_zero());
            // The recorded factors rebuild g.
            Automorphism rebuilt = Automorphism::identity(alg);
            for (auto it = res.g.factors().rbegin(); it != res.g.factors().rend(); ++it)
                rebuilt = Automorphism::from(root_automorphism(alg, it->root, it->t)).compose(rebuilt);
            CHECK(rebuilt.matrix() == res.g.matrix());
        }
    }
}
