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
// Polynomial maps on Lie algebras: identity tests in sl(2), theta witnesses, the constructive
// Engel solver and finite-field image scans.

#ifndef LIEMAP_MAPS_HPP
#define LIEMAP_MAPS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liemap/chevalley.hpp"
#include "liemap/freelie.hpp"
#include "liemap/matrixrep.hpp"

namespace liemap {

// ---- identity testing in sl(2) ------------------------------------------------------------

enum class IdentityMode { Exact, Randomized };
enum class IdentityResult { Identity, NotIdentity, ProbablyIdentity };
const char* identity_result_name(IdentityResult r) noexcept;

struct IdentityOptions {
    IdentityMode mode = IdentityMode::Exact;
    std::uint64_t seed = 1;
    std::uint64_t grid = 1ULL << 20;  // randomized sample grid {0, ..., s-1}
    int security_bits = 40;           // trials until (deg/s)^t <= 2^-bits
    bool degree_shortcut = true;      // a monomial of degree < 5 decides not_identity
};

struct IdentityVerdict {
    IdentityResult result = IdentityResult::Identity;
    std::string mode;    // "exact_symbolic" or "randomized"
    std::string method;  // "symbolic_zero_test", "random_trials", "degree_below_5", "zero_polynomial"
    int degree = 0;      // max monomial degree of the normal form
    int min_degree = 0;
    std::optional<std::vector<AlgElement>> witness;  // assignment in sl(2) = A1
    std::optional<AlgElement> witness_value;
    mpq_class failure_bound = 0;  // randomized only
    std::uint64_t trials = 0;
    std::uint64_t grid = 0;
    std::size_t symbolic_terms = 0;  // exact only: monomials before cancellation check
};

// Throws CharacteristicRejected in characteristic 2, Unsupported when exact mode is asked for
// arity > 4 or degree > 12.
IdentityVerdict is_identity_sl2(const LiePoly& p, const Field& field, const IdentityOptions& options = {});

// ---- theta witnesses ----------------------------------------------------------------------

enum class DominanceResult { Confirmed, NotSeparated, Undefined };
const char* dominance_result_name(DominanceResult r) noexcept;

struct DominanceReport {
    DominanceResult result = DominanceResult::Undefined;
    MatrixElement d1, d2;
    std::optional<InvariantPair> inv1, inv2;
    bool d1_zero = false;
    bool d2_zero = false;
};

DominanceReport dominance_witness_check(const LiePoly& p, const std::vector<MatrixElement>& first,
                                        const std::vector<MatrixElement>& second);

struct WitnessSearchOptions {
    std::uint64_t budget = 10000;  // sampled assignments
    std::uint64_t seed = 1;
};

struct WitnessSearchResult {
    bool found = false;
    std::uint64_t attempts = 0;
    std::vector<MatrixElement> first, second;
    std::optional<DominanceReport> report;
};

WitnessSearchResult dominance_witness_search(const LiePoly& p, const Realization& r, const Field& field,
                                             const WitnessSearchOptions& options = {});

// ---- Engel solver -------------------------------------------------------------------------

struct EngelTrace {
    std::vector<Scalar> avoid;  // roots of f in K
    AlgElement h;
    bool size_bound_met = true;
    std::string gauss_method;
    std::vector<Automorphism::Factor> conjugator;
    AlgElement u;  // g(target)
};

struct EngelSolution {
    AlgElement x, y;
    AlgElement value;          // P(x, y), equal to the target
    std::string certificate;   // hash of the re-evaluated value
    EngelTrace trace;
};

// Roots in K of a polynomial with rational coefficients (t^0 first). Exhaustive over F_p,
// rational-root candidates over Q.
std::vector<Scalar> roots_in_field(const std::vector<mpq_class>& poly, const Field& field);

std::string element_hash(const AlgElement& x);

EngelSolution engel_solve(const ChevalleyAlgebra& alg, const EngelSpec& spec, const AlgElement& target,
                          const GaussOptions& options = {});

// ---- finite-field scans -------------------------------------------------------------------

enum class ScanMode { Exhaustive, Sampled };

// LIEMAP_BUDGET when set, 5e7 otherwise.
std::uint64_t default_scan_budget();

struct ScanOptions {
    ScanMode mode = ScanMode::Exhaustive;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 1;
    unsigned workers = 1;
    std::optional<std::uint64_t> budget;  // defaults to default_scan_budget()
    std::size_t missed_limit = 20;
};

// Elements of a finite Chevalley algebra are indexed by sum_k c_k p^k over the basis.
std::uint64_t element_index(const AlgElement& x);
AlgElement element_at(const ChevalleyAlgebra& alg, std::uint64_t index);

struct CentralHit {
    std::uint64_t element;
    std::vector<std::uint64_t> preimage;  // element indices, one per variable
};

struct ImageReport {
    std::string algebra;
    std::string polynomial;
    std::string field;
    ScanMode mode = ScanMode::Exhaustive;
    std::uint64_t seed = 0;
    std::uint64_t evaluated = 0;     // assignments evaluated
    std::uint64_t domain_size = 0;   // |K|^(arity dim), saturating
    std::uint64_t codomain_size = 0; // |K|^dim
    std::uint64_t attained = 0;
    bool zero_attained = false;
    std::uint64_t central_nonzero_total = 0;
    std::uint64_t central_nonzero_attained = 0;
    std::uint64_t noncentral_total = 0;
    std::uint64_t noncentral_attained = 0;
    bool contains_all_noncentral = false;
    std::vector<CentralHit> central_hits;
    std::vector<std::uint64_t> missed;  // first unattained element indices
    // Per element index: preimage key (assignment index, or sample number), UINT64_MAX if missed.
    std::vector<std::uint64_t> preimage_key;
    std::size_t arity = 0;

    bool attained_element(std::uint64_t index) const { return preimage_key.at(index) != UINT64_MAX; }
};

ImageReport image_scan(const ChevalleyAlgebra& alg, const LiePoly& p, const ScanOptions& options = {});
// Explicit assignment (element indices) behind a preimage key of `report`.
std::vector<std::uint64_t> preimage_of(const ImageReport& report, const ChevalleyAlgebra& alg, std::uint64_t element);

struct ProbeRow {
    int m = 0;
    std::vector<CentralHit> hits;  // nonzero central values of E_m, each with its least preimage
};

struct ProbeReport {
    std::string algebra;
    int m_from = 1;
    int m_to = 0;
    std::uint64_t evaluated_pairs = 0;
    std::vector<std::uint64_t> center_elements;  // nonzero central element indices
    std::vector<ProbeRow> rows;
    std::optional<int> m0;  // least m with no hits from m through m_to
};

// Throws InvalidArgument for a trivial center, BudgetExceeded if |K|^(2 dim) exceeds the budget.
ProbeReport central_image_probe(const ChevalleyAlgebra& alg, int m_from, int m_to, const ScanOptions& options = {});

// ---- the sl(2) example with closed form ---------------------------------------------------

// [[[X,Y],X],[[X,Y],Y]]
const char* example48_polynomial() noexcept;
// 4a^2cs h + 8a^2ds e + 8abds f with s = 4bd^2 - ac^2, as printed. Throws CharacteristicRejected in char 2.
AlgElement example48_closed_form(const ChevalleyAlgebra& sl2, const Scalar& a, const Scalar& b, const Scalar& c,
                                 const Scalar& d);
// Same with the sign of the e-term reversed, which is what direct evaluation gives in this basis.
AlgElement example48_closed_form_corrected(const ChevalleyAlgebra& sl2, const Scalar& a, const Scalar& b,
                                           const Scalar& c, const Scalar& d);

}  // namespace liemap

#endif  // LIEMAP_MAPS_HPP
