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

#include "liemap/rootsystem.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace liemap {

char type_letter(RootType type) noexcept {
    switch (type) {
        case RootType::A: return 'A';
        case RootType::B: return 'B';
        case RootType::C: return 'C';
        case RootType::D: return 'D';
        case RootType::G: return 'G';
    }
    return '?';
}

RootType parse_root_type(std::string_view text) {
    if (text == "A") return RootType::A;
    if (text == "B") return RootType::B;
    if (text == "C") return RootType::C;
    if (text == "D") return RootType::D;
    if (text == "G") return RootType::G;
    throw Error(ErrorCode::Unsupported, "unsupported root system type '" + std::string(text) + "'");
}

int Root::height() const noexcept {
    int h = 0;
    for (int c : coords) h += c;
    return h;
}

Root Root::operator-() const {
    Root r = *this;
    for (int& c : r.coords) c = -c;
    return r;
}

Root operator+(const Root& a, const Root& b) {
    Root r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords.at(i);
    return r;
}

Root operator-(const Root& a, const Root& b) { return a + (-b); }

std::string Root::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
    os << ')';
    return os.str();
}

const char* comparison_name(Comparison c) noexcept {
    switch (c) {
        case Comparison::Less: return "less";
        case Comparison::Greater: return "greater";
        case Comparison::Equal: return "equal";
        case Comparison::Incomparable: return "incomparable";
    }
    return "?";
}

namespace {

// Gram matrix of the simple roots, scaled to integers.
std::vector<std::vector<int>> simple_form(RootType type, int rank) {
    const auto n = static_cast<std::size_t>(rank);
    std::vector<std::vector<int>> f(n, std::vector<int>(n, 0));
    auto link = [&](std::size_t i, std::size_t j, int v) { f[i][j] = f[j][i] = v; };
    switch (type) {
        case RootType::A:
            for (std::size_t i = 0; i < n; ++i) f[i][i] = 2;
            for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
            break;
        case RootType::B:
            for (std::size_t i = 0; i < n; ++i) f[i][i] = 2;
            f[n - 1][n - 1] = 1;
            for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
            break;
        case RootType::C:
            for (std::size_t i = 0; i < n; ++i) f[i][i] = 2;
            f[n - 1][n - 1] = 4;
            for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
            link(n - 2, n - 1, -2);
            break;
        case RootType::D:
            for (std::size_t i = 0; i < n; ++i) f[i][i] = 2;
            for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
            link(n - 3, n - 1, -1);
            break;
        case RootType::G:
            f[0][0] = 2;
            f[1][1] = 6;
            link(0, 1, -3);
            break;
    }
    return f;
}

bool supported(RootType type, int rank) {
    switch (type) {
        case RootType::A: return rank >= 1 && rank <= 8;
        case RootType::B: return rank >= 2 && rank <= 4;
        case RootType::C: return rank >= 2 && rank <= 4;
        case RootType::D: return rank >= 3 && rank <= 4;
        case RootType::G: return rank == 2;
    }
    return false;
}

// Height first, then larger leading coordinate first.
bool root_order(const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.coords > b.coords;
}

}  // namespace

RootSystem RootSystem::build(RootType type, int rank, const Field& field_hint) {
    if (!supported(type, rank))
        throw Error(ErrorCode::Unsupported, std::string("unsupported root system ") + type_letter(type) +
                                                std::to_string(rank));
    const bool c_type = type == RootType::C || (type == RootType::A && rank == 1) ||
                        (type == RootType::B && rank == 2);
    if (c_type && field_hint.characteristic() == 2)
        throw Error(ErrorCode::CharacteristicRejected,
                    std::string(1, type_letter(type)) + std::to_string(rank) +
                        " is of type C_r, rejected in characteristic 2");

    RootSystem rs;
    rs.type_ = type;
    rs.rank_ = rank;
    rs.form_ = simple_form(type, rank);
    const auto n = static_cast<std::size_t>(rank);
    rs.cartan_.assign(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rs.cartan_[i][j] = 2 * rs.form_[i][j] / rs.form_[i][i];

    // Grow positive roots layer by layer using alpha-strings: the alpha_i-string through beta is
    // beta - p alpha_i, ..., beta + q alpha_i with p - q = <beta, alpha_i^vee>.
    std::set<std::vector<int>> known;
    std::vector<Root> layer;
    std::vector<Root> positive;
    for (std::size_t i = 0; i < n; ++i) {
        Root s{std::vector<int>(n, 0)};
        s.coords[i] = 1;
        layer.push_back(s);
        known.insert(s.coords);
    }
    while (!layer.empty()) {
        positive.insert(positive.end(), layer.begin(), layer.end());
        std::vector<Root> next;
        for (const Root& beta : layer) {
            for (std::size_t i = 0; i < n; ++i) {
                Root simple{std::vector<int>(n, 0)};
                simple.coords[i] = 1;
                int p = 0;
                Root down = beta - simple;
                while (known.count(down.coords)) {
                    ++p;
                    down = down - simple;
                }
                int q = p - rs.pairing(beta, simple);
                if (q > 0) {
                    Root up = beta + simple;
                    if (known.insert(up.coords).second) next.push_back(up);
                }
            }
        }
        layer = std::move(next);
    }
    std::sort(positive.begin(), positive.end(), root_order);
    rs.roots_ = positive;
    for (const Root& r : positive) rs.roots_.push_back(-r);

    rs.weyl_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
        const Root& alpha = rs.roots_[i];
        for (const Root& beta : rs.roots_) {
            Root image = beta;
            int k = rs.pairing(beta, alpha);
            for (std::size_t j = 0; j < n; ++j) image.coords[j] -= k * alpha.coords[j];
            auto idx = rs.index_of(image);
            if (!idx) throw Error(ErrorCode::InternalFailure, "simple reflection left the root set");
            rs.weyl_[i].push_back(*idx);
        }
    }
    return rs;
}

std::string RootSystem::label() const { return std::string(1, type_letter(type_)) + std::to_string(rank_); }

std::optional<std::size_t> RootSystem::index_of(const Root& root) const {
    if (root.coords.size() != static_cast<std::size_t>(rank_)) return std::nullopt;
    for (std::size_t i = 0; i < roots_.size(); ++i)
        if (roots_[i] == root) return i;
    return std::nullopt;
}

int RootSystem::inner(const Root& a, const Root& b) const {
    const auto n = static_cast<std::size_t>(rank_);
    if (a.coords.size() != n || b.coords.size() != n)
        throw Error(ErrorCode::ShapeMismatch, "root coordinate length does not match rank");
    int s = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s += a.coords[i] * form_[i][j] * b.coords[j];
    return s;
}

int RootSystem::pairing(const Root& beta, const Root& alpha) const {
    return 2 * inner(beta, alpha) / inner(alpha, alpha);
}

bool RootSystem::is_long(const Root& root) const {
    int len = inner(root, root);
    for (const Root& r : roots_)
        if (inner(r, r) > len) return false;
    return true;
}

std::vector<int> RootSystem::coroot_coords(const Root& beta) const {
    // beta^vee = 2 beta / (beta, beta) = sum c_i (alpha_i, alpha_i) / (beta, beta) alpha_i^vee
    int bb = inner(beta, beta);
    std::vector<int> k(static_cast<std::size_t>(rank_));
    for (std::size_t i = 0; i < k.size(); ++i) {
        int num = beta.coords[i] * form_[i][i];
        if (num % bb != 0) throw Error(ErrorCode::InternalFailure, "non-integral coroot");
        k[i] = num / bb;
    }
    return k;
}

void RootSystem::require_member(const Root& r) const {
    if (!contains(r))
        throw Error(ErrorCode::InvalidArgument, r.to_string() + " is not a root of " + label());
}

Comparison RootSystem::height_compare(const Root& a, const Root& b) const {
    require_member(a);
    require_member(b);
    if (a == b) return Comparison::Equal;
    Root d = b - a;
    bool nonneg = std::all_of(d.coords.begin(), d.coords.end(), [](int c) { return c >= 0; });
    bool nonpos = std::all_of(d.coords.begin(), d.coords.end(), [](int c) { return c <= 0; });
    if (nonneg) return Comparison::Less;
    if (nonpos) return Comparison::Greater;
    return Comparison::Incomparable;
}

int RootSystem::chain_down_length(const Root& alpha, const Root& beta) const {
    require_member(alpha);
    require_member(beta);
    if (alpha == beta || alpha == -beta)
        throw Error(ErrorCode::InvalidArgument, "root string of a root through itself or its negative");
    int p = 0;
    Root r = beta - alpha;
    while (contains(r)) {
        ++p;
        r = r - alpha;
    }
    return p;
}

std::vector<Vector> RootSystem::weyl_orbit(const Vector& h_coords) const {
    const auto n = static_cast<std::size_t>(rank_);
    if (h_coords.size() != n) throw Error(ErrorCode::ShapeMismatch, "vector length must equal the rank");
    auto key = [](const Vector& v) {
        std::vector<std::string> k;
        for (const auto& s : v) k.push_back(s.to_string());
        return k;
    };
    std::vector<Vector> orbit{h_coords};
    std::set<std::vector<std::string>> seen{key(h_coords)};
    for (std::size_t at = 0; at < orbit.size(); ++at) {
        for (std::size_t j = 0; j < n; ++j) {
            // s_j(h) = h - alpha_j(h) h_{alpha_j}, alpha_j(h_{alpha_i}) = a_ij.
            Vector h = orbit[at];
            Field field = h[0].field();
            Scalar value = field.zero();
            for (std::size_t i = 0; i < n; ++i) value += h[i] * field.from_int(cartan_[i][j]);
            h[j] -= value;
            if (seen.insert(key(h)).second) orbit.push_back(std::move(h));
        }
    }
    return orbit;
}

bool in_exceptional_list(const RootSystem& rs, const Field& field) noexcept {
    const auto ch = field.characteristic();
    if (ch == 2)
        return (rs.type() == RootType::A && rs.rank() == 1) || rs.type() == RootType::B ||
               rs.type() == RootType::C;
    if (ch == 3) return rs.type() == RootType::G;
    return false;
}

}  // namespace liemap
