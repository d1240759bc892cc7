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

#include <fstream>
#include <sstream>

#include "liemap/json_io.hpp"

using namespace liemap;

TEST_CASE("elements round trip through JSON") {
    const auto alg = ChevalleyAlgebra::build(RootType::B, 2, Field::rationals());
    Vector v;
    for (int k = 0; k < 10; ++k) v.push_back(alg.field().from_rational(mpq_class(k - 4, k + 1)));
    const AlgElement x = alg.element(v);
    const Json j = element_json(alg, x);
    CHECK(j["basis"] == "chevalley");
    CHECK(element_from_json(alg, Json::parse(j.dump())) == x);
}

TEST_CASE("matrix basis input maps to Chevalley coordinates") {
    const auto alg = ChevalleyAlgebra::build(RootType::A, 1, Field::rationals());
    const Json j = Json::parse(R"({"basis":"matrix","rows":[["1","2"],["3","-1"]]})");
    const AlgElement x = element_from_json(alg, j);
    ChevalleyRealization real(alg);
    CHECK(matrix_json(real.to_matrix(x))["rows"] == j["rows"]);
}

TEST_CASE("malformed JSON inputs raise errors") {
    const auto alg = ChevalleyAlgebra::build(RootType::A, 1, Field::prime(5));
    CHECK_THROWS_AS(element_from_json(alg, Json::parse(R"({"basis":"chevalley","coeffs":[1,2]})")), Error);
    CHECK_THROWS_AS(element_from_json(alg, Json::parse(R"({"basis":"weird","coeffs":[1,2,3]})")), Error);
    CHECK_THROWS_AS(element_from_json(alg, Json::parse(R"({"coeffs":[1,2,true]})")), Error);
    CHECK(element_from_json(alg, Json::parse(R"({"coeffs":[6,"2/3",-1]})")).coeffs[0].residue_value() == 1);
}

TEST_CASE("shipped fixtures parse and keep their digits") {
    std::ifstream in(std::string(LIEMAP_FIXTURE_DIR) + "/paper-b2.json");
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    const Json j = Json::parse(ss.str());
    const Realization so5 = Realization::so5();
    for (const auto* side : {"first", "second"})
        for (const auto& m : j[side]) {
            const MatrixElement e = matrix_from_json(m, Field::rationals(), &so5);
            CHECK(matrix_json(e)["rows"] == m["rows"]);
        }
}
