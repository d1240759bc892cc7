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
// Irreducible reduced root systems in simple-root coordinates.
//
// Simple roots follow Bourbaki numbering:
//   A_r  alpha_1 - alpha_2 - ... - alpha_r
//   B_r  alpha_1 .. alpha_{r-1} long, alpha_r short
//   C_r  alpha_1 .. alpha_{r-1} short, alpha_r long
//   D_r  chain alpha_1 .. alpha_{r-2}, which branches to alpha_{r-1} and alpha_r
//   G_2  alpha_1 short, alpha_2 long
// Cartan matrix entries are a_ij = <alpha_i^vee, alpha_j> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i).

#ifndef LIEMAP_ROOTSYSTEM_HPP
#define LIEMAP_ROOTSYSTEM_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "liemap/scalar.hpp"

namespace liemap {

enum class RootType { A, B, C, D, G };

char type_letter(RootType type) noexcept;
RootType parse_root_type(std::string_view text);

struct Root {
    std::vector<int> coords;  // coefficients over the simple roots

    int height() const noexcept;
    bool is_positive() const noexcept { return height() > 0; }
    Root operator-() const;
    friend Root operator+(const Root& a, const Root& b);
    friend Root operator-(const Root& a, const Root& b);
    friend bool operator==(const Root&, const Root&) = default;
    std::string to_string() const;
};

enum class Comparison { Less, Greater, Equal, Incomparable };
const char* comparison_name(Comparison c) noexcept;

class RootSystem {
public:
    // Throws Unsupported for types outside {A_1..A_8, B_2..B_4, C_2..C_4, D_3..D_4, G_2},
    // and CharacteristicRejected for C_r (including A_1 = C_1, B_2 = C_2) in characteristic 2.
    static RootSystem build(RootType type, int rank, const Field& field_hint = Field::rationals());

    RootType type() const noexcept { return type_; }
    int rank() const noexcept { return rank_; }
    std::string label() const;

    // Positive roots sorted by height, ties broken by larger leading coordinate first (so the
    // simple roots come out as alpha_1..alpha_r); negatives follow in matching order.
    const std::vector<Root>& roots() const noexcept { return roots_; }
    std::span<const Root> positive_roots() const noexcept {
        return std::span<const Root>(roots_).first(num_positive());
    }
    std::size_t num_positive() const noexcept { return roots_.size() / 2; }
    const Root& simple_root(int i) const { return roots_.at(static_cast<std::size_t>(i)); }

    std::optional<std::size_t> index_of(const Root& root) const;
    bool contains(const Root& root) const { return index_of(root).has_value(); }
    // Index of -roots()[i].
    std::size_t negative_index(std::size_t i) const noexcept {
        return i < num_positive() ? i + num_positive() : i - num_positive();
    }

    const std::vector<std::vector<int>>& cartan_matrix() const noexcept { return cartan_; }
    // Symmetric invariant form on the root lattice (integer-scaled).
    int inner(const Root& a, const Root& b) const;
    // <beta, alpha^vee> = 2 (beta, alpha) / (alpha, alpha).
    int pairing(const Root& beta, const Root& alpha) const;
    bool is_long(const Root& root) const;
    // Coefficients of the coroot beta^vee over the simple coroots.
    std::vector<int> coroot_coords(const Root& beta) const;

    // Simple reflection s_i as a permutation of root indices.
    const std::vector<std::vector<std::size_t>>& weyl_generators() const noexcept { return weyl_; }

    Comparison height_compare(const Root& a, const Root& b) const;
    // Largest p >= 0 with beta - p*alpha a root; alpha != +-beta.
    int chain_down_length(const Root& alpha, const Root& beta) const;
    // Orbit of h = sum x_i h_{alpha_i} under the Weyl group, in discovery order.
    std::vector<Vector> weyl_orbit(const Vector& h_coords) const;

private:
    RootSystem() = default;
    void require_member(const Root& r) const;

    RootType type_ = RootType::A;
    int rank_ = 0;
    std::vector<std::vector<int>> form_;  // (alpha_i, alpha_j)
    std::vector<std::vector<int>> cartan_;
    std::vector<Root> roots_;
    std::vector<std::vector<std::size_t>> weyl_;
};

// The exceptional list: A_1, B_r, C_r in characteristic 2 and G_2 in characteristic 3.
bool in_exceptional_list(const RootSystem& rs, const Field& field) noexcept;

}  // namespace liemap

#endif  // LIEMAP_ROOTSYSTEM_HPP
