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

#include <algorithm>

#include "liemap/matrixrep.hpp"
#include "liemap/rng.hpp"

using namespace liemap;

namespace {

// det(tI - M) for 3x3 by cofactor expansion in t; coefficients leading first.
std::vector<mpq_class> char_poly3(const long long m[9]) {
    auto q = [&](int k) { return mpq_class(static_cast<long>(m[k])); };
    const mpq_class a = q(0), b = q(1), c = q(2), d = q(3), e = q(4), f = q(5), g = q(6), h = q(7), i = q(8);
    const mpq_class tr = a + e + i;
    const mpq_class minors = (a * e - b * d) + (a * i - c * g) + (e * i - f * h);
    const mpq_class det = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
    return {1, -tr, minors, -det};
}


}  // namespace

TEST_CASE("characteristic polynomial matches cofactor expansion") {
    Rng rng(5);
    const Field q = Field::rationals();
    for (int trial = 0; trial < 50; ++trial) {
        long long e[9];
        for (auto& x : e) x = rng.between(-20, 20);
        const auto cp = char_poly(Matrix::from_ints(q, 3, 3, e));
        const auto want = char_poly3(e);
        REQUIRE(cp.size() == 4);
        for (std::size_t k = 0; k < 4; ++k) CHECK(cp[k].rational() == want[k]);
    }
}

TEST_CASE("so5 shape validation") {
    const Field q = Field::rationals();
    const long long good[] = {0, 1, 2, 3, 4, -3, 5, 6, 0, 9, -4, 7, 8, -9, 0, -1, 0, 10, -5, -7, -2, -10, 0, -6, -8};
    CHECK(is_so5_shape(Matrix::from_ints(q, 5, 5, good)));
    long long bad[25];
    std::copy(std::begin(good), std::end(good), bad);
    bad[6] = 4;  // m no longer matches -m^t in the corner block
    CHECK_FALSE(is_so5_shape(Matrix::from_ints(q, 5, 5, bad)));
    CHECK_THROWS_AS(make_matrix_element(Realization::so5(), Matrix::from_ints(q, 5, 5, bad)), Error);
    CHECK_THROWS_AS(make_matrix_element(Realization::sl(3), Matrix::identity(q, 3)), Error);
}

TEST_CASE("so5 basis is closed under commutators and has dimension 10") {
    const MatrixLieAlgebra so5(Realization::so5(), Field::rationals());
    const auto basis = so5.basis();
    CHECK(basis.size() == 10);
    for (const auto& x : basis)
        for (const auto& y : basis) CHECK(is_so5_shape(commutator(x, y).value));
}

TEST_CASE("invariants survive conjugation") {
    Rng rng(17);
    const Field q = Field::rationals();
    for (const auto& real : {Realization::sl(3), Realization::so5()}) {
        const MatrixLieAlgebra alg(real, q);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<long long> coords;
            for (std::size_t k = 0; k < real.dim(); ++k) coords.push_back(rng.between(-5, 5));
            const MatrixElement x = alg.from_coords(coords);
            // exp of a nilpotent generator conjugates inside the group.
            const MatrixElement gen = alg.basis()[rng.below(real.dim())];
            const auto cp = char_poly(gen.value);
            if (!std::all_of(cp.begin() + 1, cp.end(), [](const Scalar& c) { return c.is_zero(); })) continue;
            Matrix n = gen.value * q.from_int(rng.between(1, 3));
            const Matrix g = exp_nilpotent(n);
            const Matrix ginv = exp_nilpotent(n * q.from_int(-1));
            const MatrixElement y = make_matrix_element(real, g * x.value * ginv);
            const auto a = char_invariants(x), b = char_invariants(y);
            CHECK(a.f1 == b.f1);
            CHECK(a.f2 == b.f2);
        }
    }
}

TEST_CASE("theta comparison is projective") {
    const Field q = Field::rationals();
    const MatrixLieAlgebra sl3(Realization::sl(3), q);
    const MatrixElement x = sl3.from_coords({1, 2, 0, -1, 3, 1, 2, -1});
    const MatrixElement y = sl3.scale(q.from_int(-7), x);
    CHECK(theta_separates(x, y) == Separation::Equal);
    const MatrixElement z = sl3.from_coords({0, 1, 0, 0, 0, 1, 1, 0});
    CHECK(theta_separates(x, z) != Separation::Undefined);
    CHECK_THROWS_AS(theta_separates(x, sl3.zero()), Error);
}

TEST_CASE("Chevalley realizations round trip") {
    for (auto [t, r] : {std::pair{RootType::A, 1}, {RootType::A, 3}, {RootType::B, 2}})
        for (const Field& f : {Field::rationals(), Field::prime(5)}) {
            const auto alg = ChevalleyAlgebra::build(t, r, f);
            ChevalleyRealization real(alg);
            for (std::size_t i = 0; i < alg.dim(); ++i) {
                CHECK(real.from_matrix(real.to_matrix(alg.basis(i)).value) == alg.basis(i));
                for (std::size_t j = 0; j < alg.dim(); ++j)
                    CHECK(real.to_matrix(alg.bracket(alg.basis(i), alg.basis(j))) ==
                          commutator(real.to_matrix(alg.basis(i)), real.to_matrix(alg.basis(j))));
            }
        }
}
