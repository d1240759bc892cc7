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
// Matrix realizations sl(n, K) and so(5, K).
//
// so(5) uses the block form with index split 0 | 1,2 | 3,4:
//
//     [ 0     b     c  ]
//     [ -c^t  m     n  ]      n, p skew-symmetric 2x2
//     [ -b^t  p  -m^t  ]
//
// i.e. the matrices skew for the form x_0^2 + 2 x_1 x_3 + 2 x_2 x_4.
// Cartan subalgebra: diag(0, a1, a2, -a1, -a2).

#ifndef LIEMAP_MATRIXREP_HPP
#define LIEMAP_MATRIXREP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "liemap/chevalley.hpp"
#include "liemap/linalg.hpp"
#include "liemap/scalar.hpp"

namespace liemap {

enum class RealizationKind { SL, SO5 };

struct Realization {
    RealizationKind kind = RealizationKind::SL;
    std::size_t n = 3;  // matrix size; always 5 for SO5

    static Realization sl(std::size_t n);
    static Realization so5() { return Realization{RealizationKind::SO5, 5}; }
    // "sl2".."sl9", "so5"
    static Realization parse(std::string_view text);
    std::string name() const;
    std::size_t dim() const;
    friend bool operator==(const Realization&, const Realization&) = default;
};

struct MatrixElement {
    Realization realization;
    Matrix value;

    friend bool operator==(const MatrixElement& a, const MatrixElement& b) {
        return a.realization == b.realization && a.value == b.value;
    }
    bool is_zero() const noexcept { return value.is_zero(); }
};

bool is_so5_shape(const Matrix& m);
// Validates shape, trace (sl) or block form (so5). Throws ShapeMismatch otherwise.
MatrixElement make_matrix_element(const Realization& r, Matrix value);

MatrixElement commutator(const MatrixElement& x, const MatrixElement& y);

// The matrix Lie algebra as an evaluation target.
class MatrixLieAlgebra {
public:
    using Element = MatrixElement;

    MatrixLieAlgebra(Realization r, Field field) : realization_(r), field_(field) {}

    const Realization& realization() const noexcept { return realization_; }
    const Field& field() const noexcept { return field_; }

    Element zero() const;
    Element add(const Element& x, const Element& y) const;
    Element sub(const Element& x, const Element& y) const;
    Element scale(const Scalar& s, const Element& x) const;
    Element scale(const mpq_class& q, const Element& x) const;
    Element bracket(const Element& x, const Element& y) const { return commutator(x, y); }

    // Basis of the realization: E_ij (i != j) and E_ii - E_{i+1,i+1} for sl(n); the ten block
    // generators for so5.
    std::vector<Element> basis() const;
    // Element from basis coordinates, as used by random sampling.
    Element from_coords(const std::vector<long long>& coords) const;

private:
    Realization realization_;
    Field field_;
};

// Coefficients of det(tI - M), leading first: {1, c_1, ..., c_n}. Division free.
std::vector<Scalar> char_poly(const Matrix& m);

struct InvariantPair {
    Scalar f1;       // coefficient of t^{n-2}
    Scalar f2;       // q: t^0 for sl3, t^1 for so5
    int deg_f1 = 2;
    int deg_f2 = 3;  // 3 for sl3, 4 for so5
    // theta = (f1^{deg f2} : f2^{deg f1})
    Scalar theta_num() const;
    Scalar theta_den() const;
};

// sl3: chi = t^3 + f1 t + f2. so5: chi = t^5 + f1 t^3 + f2 t (t^4, t^2, t^0 checked to vanish).
InvariantPair char_invariants(const MatrixElement& x);

enum class Separation { Separated, Equal, Undefined };
const char* separation_name(Separation s) noexcept;

Separation theta_compare(const InvariantPair& a, const InvariantPair& b);
// Throws InvalidArgument when either input is the zero matrix.
Separation theta_separates(const MatrixElement& d1, const MatrixElement& d2);

// exp(N) for nilpotent N. Throws DivisionByZero if a factorial needed before N^k = 0 vanishes.
Matrix exp_nilpotent(const Matrix& n);

// Linear isomorphism L(R, K) -> matrices for types A_r (sl(r+1)) and B_2 (so5). The images of
// the simple root vectors are fixed, the remaining root vectors are built from extraspecial pairs,
// and every basis bracket is checked against the commutator at construction.
class ChevalleyRealization {
public:
    explicit ChevalleyRealization(const ChevalleyAlgebra& alg);

    const ChevalleyAlgebra& algebra() const noexcept { return alg_; }
    const Realization& realization() const noexcept { return realization_; }
    const MatrixElement& image(std::size_t basis_index) const { return images_.at(basis_index); }

    MatrixElement to_matrix(const AlgElement& x) const;
    // Throws ShapeMismatch if m is outside the image.
    AlgElement from_matrix(const Matrix& m) const;
    // Matrix in the Chevalley basis of x -> g x g^-1.
    Matrix conjugation_matrix(const Matrix& g, const Matrix& g_inverse) const;

private:
    ChevalleyAlgebra alg_;
    Realization realization_;
    std::vector<MatrixElement> images_;
    std::vector<std::size_t> probe_entries_;  // flattened entries that determine coordinates
    Matrix probe_inverse_;
};

}  // namespace liemap

#endif  // LIEMAP_MATRIXREP_HPP
