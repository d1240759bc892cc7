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
// JSON encodings. Scalars are strings ("3", "-1/2") so rationals survive round trips.

#ifndef LIEMAP_JSON_IO_HPP
#define LIEMAP_JSON_IO_HPP

#include <json.hpp>

#include "liemap/maps.hpp"

namespace liemap {

using Json = nlohmann::ordered_json;

Json scalar_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const Field& field);

// {"basis": "chevalley", "algebra": "A2/F5", "coeffs": [...]}
Json element_json(const ChevalleyAlgebra& alg, const AlgElement& x);
// Accepts the chevalley form or {"basis": "matrix", "rows": [[...]]} for A_r and B2.
AlgElement element_from_json(const ChevalleyAlgebra& alg, const Json& j);

// {"basis": "matrix", "realization": "so5", "rows": [[...]]}
Json matrix_json(const MatrixElement& m);
MatrixElement matrix_from_json(const Json& j, const Field& field, const Realization* expected = nullptr);

Json root_system_json(const RootSystem& rs);
Json algebra_json(const ChevalleyAlgebra& alg, bool with_structure);
Json identity_json(const IdentityVerdict& v, const LiePoly& p, const Field& field);
Json dominance_json(const DominanceReport& r);
Json witness_search_json(const WitnessSearchResult& r, std::uint64_t seed, std::uint64_t budget);
Json engel_json(const ChevalleyAlgebra& alg, const EngelSpec& spec, const AlgElement& target,
                const EngelSolution& s, std::uint64_t seed);
Json scan_json(const ChevalleyAlgebra& alg, const ImageReport& r);
Json probe_json(const ProbeReport& r);

// {"code": "parse_error", "message": ...}
Json error_json(const Error& e);

}  // namespace liemap

#endif  // LIEMAP_JSON_IO_HPP
