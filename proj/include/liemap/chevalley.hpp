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
// Chevalley algebras L(R, K) with a fully tabulated bracket.
//
// Basis order: h_1..h_r (simple coroots), then e_beta for the positive roots in
// RootSystem::roots() order, then e_{-beta} in matching order. Basis index r + k is the
// root vector of RootSystem::roots()[k].
//
// Structure constants N_{a,b} come from the extraspecial-pair construction: N = +(p+1) on
// every extraspecial pair under the root order, everything else forced by the Chevalley
// relations. Signs are therefore convention dependent; the Jacobi sweep certifies them.

#ifndef LIEMAP_CHEVALLEY_HPP
#define LIEMAP_CHEVALLEY_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "liemap/linalg.hpp"
#include "liemap/rootsystem.hpp"
#include "liemap/scalar.hpp"

namespace liemap {

struct AlgElement {
    std::uint64_t algebra_id = 0;
    Vector coeffs;

    friend bool operator==(const AlgElement& a, const AlgElement& b) {
        return a.algebra_id == b.algebra_id && a.coeffs == b.coeffs;
    }
    bool is_zero() const noexcept { return liemap::is_zero(coeffs); }
};

struct StructureTerm {
    std::size_t index;
    long long coeff;
};

class ChevalleyAlgebra {
public:
    using Element = AlgElement;

    // Throws CharacteristicRejected for C_r types in characteristic 2 and InternalFailure
    // if the construction-time checks (antisymmetry, relations, Jacobi for rank <= 4) fail.
    static ChevalleyAlgebra build(const RootSystem& rs, const Field& field);
    static ChevalleyAlgebra build(RootType type, int rank, const Field& field);

    const RootSystem& root_system() const noexcept;
    const Field& field() const noexcept;
    std::uint64_t id() const noexcept;
    std::size_t dim() const noexcept;
    std::size_t rank() const noexcept;
    std::string label() const;  // e.g. "A2/F5"
    std::string basis_label(std::size_t k) const;

    std::size_t h_index(std::size_t simple) const noexcept { return simple; }
    std::size_t e_index(std::size_t root) const noexcept { return rank() + root; }
    std::size_t root_of_basis(std::size_t k) const noexcept { return k - rank(); }
    bool is_h(std::size_t k) const noexcept { return k < rank(); }

    // Integer structure constants: [b_i, b_j] = sum c b_k.
    const std::vector<StructureTerm>& structure(std::size_t i, std::size_t j) const;
    // q_{beta,gamma} with [h_beta, e_gamma] = q e_gamma; indices into roots().
    int q(std::size_t beta, std::size_t gamma) const;
    // N_{alpha,beta} with [e_alpha, e_beta] = N e_{alpha+beta}; 0 when alpha+beta is not a root.
    int n(std::size_t alpha, std::size_t beta) const;

    Element zero() const;
    Element basis(std::size_t k) const;
    Element element(Vector coeffs) const;
    Element h_of_root(std::size_t root) const;  // h_beta

    Element add(const Element& x, const Element& y) const;
    Element sub(const Element& x, const Element& y) const;
    Element scale(const Scalar& s, const Element& x) const;
    Element scale(const mpq_class& q, const Element& x) const;
    Element bracket(const Element& x, const Element& y) const;

    Matrix ad_matrix(const Element& x) const;
    bool is_central(const Element& x) const;
    std::vector<Element> center() const;

    // beta(h) for h in H.
    Scalar root_value(std::size_t root, const Element& h) const;

    Vector h_part(const Element& x) const;
    Vector upper_part(const Element& x) const;
    Vector lower_part(const Element& x) const;

    void require_member(const Element& x) const;

private:
    struct Data;
    explicit ChevalleyAlgebra(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
    std::shared_ptr<const Data> data_;
};

// Number of basis pairs/triples violating antisymmetry or the Jacobi identity, computed in the
// algebra's field.
std::size_t antisymmetry_violations(const ChevalleyAlgebra& alg);
std::size_t jacobi_violations(const ChevalleyAlgebra& alg);

// Returns h in H with beta(h) not in `avoid` for every root beta. Finite fields are scanned
// exhaustively in a fixed order, Q over integer boxes of growing radius, so the result is
// reproducible. Throws FieldTooSmall if no such h exists.
AlgElement find_regular(const ChevalleyAlgebra& alg, std::span<const Scalar> avoid);
// The sufficient size condition: |K| >= |R+| when avoid = {0}, |K| > |avoid| |R| otherwise.
bool regular_size_bound_met(const ChevalleyAlgebra& alg, std::span<const Scalar> avoid);

struct RootAutomorphism {
    std::size_t root = 0;
    Scalar t;
    Matrix matrix;  // exp(t ad e_beta)
};

// Requires characteristic 0 or >= 5.
RootAutomorphism root_automorphism(const ChevalleyAlgebra& alg, std::size_t root, const Scalar& t);

// An invertible linear automorphism of the algebra recorded as a product of root
// automorphisms x_beta(t); factors apply right to left, as written.
class Automorphism {
public:
    struct Factor {
        std::size_t root;
        Scalar t;
    };

    Automorphism() = default;
    static Automorphism identity(const ChevalleyAlgebra& alg);
    static Automorphism from(const RootAutomorphism& x);
    Automorphism(std::uint64_t algebra_id, Matrix matrix, std::vector<Factor> factors)
        : algebra_id_(algebra_id), matrix_(std::move(matrix)), factors_(std::move(factors)) {}

    std::uint64_t algebra_id() const noexcept { return algebra_id_; }
    const Matrix& matrix() const noexcept { return matrix_; }
    const std::vector<Factor>& factors() const noexcept { return factors_; }

    // (*this) after `first`.
    Automorphism compose(const Automorphism& first) const;
    Automorphism inverse() const;

private:
    std::uint64_t algebra_id_ = 0;
    Matrix matrix_;
    std::vector<Factor> factors_;
};

AlgElement apply_automorphism(const Automorphism& g, const AlgElement& x);
AlgElement apply_automorphism(const RootAutomorphism& g, const ChevalleyAlgebra& alg, const AlgElement& x);

struct GaussResult {
    Automorphism g;
    AlgElement u;  // g(l), zero H-part
    std::string method;  // "type_a_transvections" or "randomized_root_automorphisms"
};

struct GaussOptions {
    std::size_t budget = 2000;      // root-automorphism applications on the randomized path
    std::uint64_t seed = 0x5eed;
};

// Conjugates a noncentral l into U. Throws CentralElement for central l and BudgetExceeded if the
// randomized path gives up.
GaussResult conjugate_into_U(const ChevalleyAlgebra& alg, const AlgElement& l, const GaussOptions& options = {});

}  // namespace liemap

#endif  // LIEMAP_CHEVALLEY_HPP
