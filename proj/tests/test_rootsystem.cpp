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

#include "liemap/rootsystem.hpp"
#include "oracles.hpp"

using namespace liemap;

namespace {

struct Case {
    RootType type;
    int rank;
    std::size_t positive;
};

}  // namespace

TEST_CASE("positive root counts follow the classical formulas") {
    const Case cases[] = {{RootType::A, 1, 1},  {RootType::A, 2, 3}, {RootType::A, 4, 10}, {RootType::A, 8, 36},
                          {RootType::B, 2, 4},  {RootType::B, 3, 9}, {RootType::B, 4, 16}, {RootType::C, 3, 9},
                          {RootType::C, 4, 16}, {RootType::D, 4, 12}, {RootType::G, 2, 6}};
    for (const auto& c : cases) {
        const RootSystem rs = RootSystem::build(c.type, c.rank);
        CHECK(rs.num_positive() == c.positive);
        CHECK(rs.roots().size() == 2 * c.positive);
    }
}

TEST_CASE("Cartan matrices") {
    CHECK(RootSystem::build(RootType::A, 2).cartan_matrix() == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
    const auto b2 = RootSystem::build(RootType::B, 2).cartan_matrix();
    CHECK(b2[0][0] == 2);
    CHECK(b2[0][1] * b2[1][0] == 2);
    const auto g2 = RootSystem::build(RootType::G, 2).cartan_matrix();
    CHECK(g2[0][1] * g2[1][0] == 3);
}

TEST_CASE("ordering: simple roots first, height nondecreasing, negatives mirrored") {
    for (auto [t, r] : {std::pair{RootType::A, 3}, {RootType::B, 3}, {RootType::G, 2}, {RootType::D, 4}}) {
        const RootSystem rs = RootSystem::build(t, r);
        for (int i = 0; i < r; ++i) CHECK(rs.roots()[static_cast<std::size_t>(i)].height() == 1);
        for (std::size_t k = 1; k < rs.num_positive(); ++k)
            CHECK(rs.roots()[k - 1].height() <= rs.roots()[k].height());
        for (std::size_t k = 0; k < rs.roots().size(); ++k)
            CHECK(rs.roots()[rs.negative_index(k)] == -rs.roots()[k]);
    }
}

TEST_CASE("root strings agree with a coordinate-set oracle") {
    for (auto [t, r] : {std::pair{RootType::B, 2}, {RootType::G, 2}, {RootType::C, 3}}) {
        const RootSystem rs = RootSystem::build(t, r);
        std::set<std::vector<int>> coords;
        for (const auto& root : rs.roots()) coords.insert(root.coords);
        for (const auto& a : rs.roots())
            for (const auto& b : rs.roots()) {
                if (a == b || a == -b) continue;
                CHECK(rs.chain_down_length(a, b) == oracle::chain_down(coords, a.coords, b.coords));
            }
    }
}

TEST_CASE("Weyl generators permute roots and fix the root set") {
    const RootSystem rs = RootSystem::build(RootType::B, 3);
    for (const auto& s : rs.weyl_generators()) {
        std::set<std::size_t> image(s.begin(), s.end());
        CHECK(image.size() == rs.roots().size());
    }
}

TEST_CASE("unsupported and rejected systems") {
    CHECK_THROWS_AS(RootSystem::build(RootType::A, 9), Error);
    CHECK_THROWS_AS(RootSystem::build(RootType::C, 2, Field::prime(2)), Error);
    CHECK_NOTHROW(RootSystem::build(RootType::A, 2, Field::prime(2)));
}
