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

#include "liemap/chevalley.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>

namespace liemap {

namespace {

std::atomic<std::uint64_t> next_algebra_id{1};

// Structure constants N_{a,b} over root indices, filled for positive pairs in height order.
class StructureConstants {
public:
    explicit StructureConstants(const RootSystem& rs) : rs_(rs), npos_(rs.num_positive()) {
        const auto& roots = rs.roots();
        for (std::size_t i = 0; i < roots.size(); ++i) index_[roots[i].coords] = i;
        positive_.assign(npos_, std::vector<std::optional<int>>(npos_));
        fill_positive();
    }

    std::optional<std::size_t> sum(std::size_t a, std::size_t b) const {
        Root s = rs_.roots()[a] + rs_.roots()[b];
        auto it = index_.find(s.coords);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    int length(std::size_t a) const { return rs_.inner(rs_.roots()[a], rs_.roots()[a]); }

    int n(std::size_t a, std::size_t b) const {
        auto s = sum(a, b);
        if (!s) return 0;
        const bool pa = a < npos_;
        const bool pb = b < npos_;
        if (pa && pb) {
            const auto& v = positive_[a][b];
            if (!v) throw Error(ErrorCode::InternalFailure, "structure constant requested out of order");
            return *v;
        }
        if (!pa && !pb) return -n(rs_.negative_index(a), rs_.negative_index(b));
        // a + b + c = 0:  N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b)
        const std::size_t c = rs_.negative_index(*s);
        const bool pc = c < npos_;
        if (pb == pc) return exact_ratio(length(c) * n(b, c), length(a));
        return exact_ratio(length(c) * n(c, a), length(b));
    }

private:
    static int exact_ratio(int num, int den) {
        if (num % den != 0) throw Error(ErrorCode::InternalFailure, "non-integral structure constant");
        return num / den;
    }

    void fill_positive() {
        const auto& roots = rs_.roots();
        for (std::size_t xi = 0; xi < npos_; ++xi) {
            std::vector<std::pair<std::size_t, std::size_t>> pairs;
            for (std::size_t a = 0; a < npos_; ++a)
                for (std::size_t b = a + 1; b < npos_; ++b)
                    if (sum(a, b) == xi) pairs.emplace_back(a, b);
            if (pairs.empty()) continue;
            const auto [g, d] = pairs.front();  // extraspecial: smallest first member
            const int p = rs_.chain_down_length(roots[g], roots[d]);
            positive_[g][d] = p + 1;
            positive_[d][g] = -(p + 1);
            const std::size_t ng = rs_.negative_index(g);
            const std::size_t nd = rs_.negative_index(d);
            for (std::size_t k = 1; k < pairs.size(); ++k) {
                const auto [a, b] = pairs[k];
                // Four-root relation with (a, b, -g, -d).
                mpq_class acc = 0;
                if (sum(b, ng)) {
                    Root r = roots[b] - roots[g];
                    acc += mpq_class(n(b, ng) * n(a, nd), rs_.inner(r, r));
                }
                if (sum(a, ng)) {
                    Root r = roots[a] - roots[g];
                    acc += mpq_class(n(ng, a) * n(b, nd), rs_.inner(r, r));
                }
                acc *= mpq_class(length(xi), positive_[g][d].value());
                acc.canonicalize();
                if (acc.get_den() != 1)
                    throw Error(ErrorCode::InternalFailure, "non-integral structure constant");
                const int v = static_cast<int>(acc.get_num().get_si());
                positive_[a][b] = v;
                positive_[b][a] = -v;
            }
        }
    }

    const RootSystem& rs_;
    std::size_t npos_;
    std::map<std::vector<int>, std::size_t> index_;
    std::vector<std::vector<std::optional<int>>> positive_;
};

using SparseInt = std::map<std::size_t, long long>;

}  // namespace

struct ChevalleyAlgebra::Data {
    Data(RootSystem r, Field f) : rs(std::move(r)), field(f) {}

    RootSystem rs;
    Field field;
    std::uint64_t id = 0;
    std::size_t rank = 0;
    std::size_t dim = 0;
    std::vector<std::vector<StructureTerm>> table;                   // dim * dim
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> ftable;  // reduced into the field
    std::vector<std::vector<int>> q;
    std::vector<std::vector<int>> n;
};

namespace {

std::size_t integer_jacobi_violations(const std::vector<std::vector<StructureTerm>>& table, std::size_t dim) {
    auto br = [&](const SparseInt& x, std::size_t k) {
        SparseInt out;
        for (const auto& [i, c] : x)
            for (const auto& t : table[i * dim + k]) out[t.index] += c * t.coeff;
        return out;
    };
    std::size_t bad = 0;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) {
                SparseInt total;
                auto accumulate = [&](std::size_t a, std::size_t b, std::size_t c) {
                    SparseInt ab;
                    for (const auto& t : table[a * dim + b]) ab[t.index] += t.coeff;
                    for (const auto& [idx, v] : br(ab, c)) total[idx] += v;
                };
                accumulate(i, j, k);
                accumulate(j, k, i);
                accumulate(k, i, j);
                if (std::any_of(total.begin(), total.end(), [](const auto& kv) { return kv.second != 0; })) ++bad;
            }
    return bad;
}

}  // namespace

ChevalleyAlgebra ChevalleyAlgebra::build(RootType type, int rank, const Field& field) {
    return build(RootSystem::build(type, rank, field), field);
}

ChevalleyAlgebra ChevalleyAlgebra::build(const RootSystem& rs_in, const Field& field) {
    // Re-run the characteristic rule in case rs_in was built with a different hint.
    RootSystem rs = RootSystem::build(rs_in.type(), rs_in.rank(), field);
    auto data = std::make_shared<Data>(rs, field);
    data->id = next_algebra_id.fetch_add(1);
    const auto& roots = rs.roots();
    const std::size_t r = static_cast<std::size_t>(rs.rank());
    const std::size_t nroots = roots.size();
    const std::size_t dim = r + nroots;
    data->rank = r;
    data->dim = dim;

    StructureConstants sc(rs);
    data->q.assign(nroots, std::vector<int>(nroots, 0));
    data->n.assign(nroots, std::vector<int>(nroots, 0));
    for (std::size_t b = 0; b < nroots; ++b)
        for (std::size_t g = 0; g < nroots; ++g) {
            data->q[b][g] = rs.pairing(roots[g], roots[b]);
            if (b != rs.negative_index(g)) data->n[b][g] = sc.n(b, g);
        }

    data->table.assign(dim * dim, {});
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            auto& cell = data->table[i * dim + j];
            if (i < r && j < r) continue;
            if (i < r) {
                const int v = rs.pairing(roots[j - r], roots[i]);
                if (v) cell.push_back({j, v});
            } else if (j < r) {
                const int v = rs.pairing(roots[i - r], roots[j]);
                if (v) cell.push_back({i, -v});
            } else {
                const std::size_t a = i - r;
                const std::size_t b = j - r;
                if (b == rs.negative_index(a)) {
                    const auto k = rs.coroot_coords(roots[a]);
                    for (std::size_t s = 0; s < r; ++s)
                        if (k[s]) cell.push_back({s, k[s]});
                } else if (auto s = sc.sum(a, b)) {
                    cell.push_back({r + *s, data->n[a][b]});
                }
            }
        }

    // Relations: q in {0,+-1,+-2,+-3}; |N| = p + 1; [e_a, e_-a] = h_a for simple a; antisymmetry.
    for (std::size_t b = 0; b < nroots; ++b)
        for (std::size_t g = 0; g < nroots; ++g) {
            if (std::abs(data->q[b][g]) > 3) throw Error(ErrorCode::InternalFailure, "q value out of range");
            if (b == g || b == rs.negative_index(g)) continue;
            if (sc.sum(b, g)) {
                const int p = rs.chain_down_length(roots[b], roots[g]);
                if (std::abs(data->n[b][g]) != p + 1)
                    throw Error(ErrorCode::InternalFailure, "|N| does not match the root string");
            }
        }
    for (std::size_t s = 0; s < r; ++s) {
        const auto& cell = data->table[(r + s) * dim + r + rs.negative_index(s)];
        if (cell.size() != 1 || cell[0].index != s || cell[0].coeff != 1)
            throw Error(ErrorCode::InternalFailure, "[e_a, e_-a] != h_a for a simple root");
    }
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            const auto& x = data->table[i * dim + j];
            const auto& y = data->table[j * dim + i];
            bool ok = x.size() == y.size();
            for (std::size_t t = 0; ok && t < x.size(); ++t)
                ok = x[t].index == y[t].index && x[t].coeff == -y[t].coeff;
            if (!ok) throw Error(ErrorCode::InternalFailure, "bracket table is not antisymmetric");
        }
    if (r <= 4 && integer_jacobi_violations(data->table, dim) != 0)
        throw Error(ErrorCode::InternalFailure, "Jacobi identity fails on the basis");

    data->ftable.assign(dim * dim, {});
    for (std::size_t c = 0; c < dim * dim; ++c)
        for (const auto& t : data->table[c]) {
            Scalar v = field.from_int(t.coeff);
            if (!v.is_zero()) data->ftable[c].emplace_back(t.index, v);
        }
    return ChevalleyAlgebra(std::move(data));
}

const RootSystem& ChevalleyAlgebra::root_system() const noexcept { return data_->rs; }
const Field& ChevalleyAlgebra::field() const noexcept { return data_->field; }
std::uint64_t ChevalleyAlgebra::id() const noexcept { return data_->id; }
std::size_t ChevalleyAlgebra::dim() const noexcept { return data_->dim; }
std::size_t ChevalleyAlgebra::rank() const noexcept { return data_->rank; }
std::string ChevalleyAlgebra::label() const { return data_->rs.label() + "/" + data_->field.name(); }

std::string ChevalleyAlgebra::basis_label(std::size_t k) const {
    if (k < rank()) return "h" + std::to_string(k + 1);
    const Root& root = data_->rs.roots()[k - rank()];
    return (root.is_positive() ? "e" : "e-") + (root.is_positive() ? root : -root).to_string();
}

const std::vector<StructureTerm>& ChevalleyAlgebra::structure(std::size_t i, std::size_t j) const {
    return data_->table.at(i * dim() + j);
}

int ChevalleyAlgebra::q(std::size_t beta, std::size_t gamma) const { return data_->q.at(beta).at(gamma); }
int ChevalleyAlgebra::n(std::size_t alpha, std::size_t beta) const { return data_->n.at(alpha).at(beta); }

void ChevalleyAlgebra::require_member(const Element& x) const {
    if (x.algebra_id != id() || x.coeffs.size() != dim())
        throw Error(ErrorCode::FieldMismatch, "element does not belong to " + label());
}

AlgElement ChevalleyAlgebra::zero() const { return AlgElement{id(), zero_vector(field(), dim())}; }

AlgElement ChevalleyAlgebra::basis(std::size_t k) const {
    AlgElement e = zero();
    e.coeffs.at(k) = field().one();
    return e;
}

AlgElement ChevalleyAlgebra::element(Vector coeffs) const {
    if (coeffs.size() != dim()) throw Error(ErrorCode::ShapeMismatch, "coefficient vector has wrong length");
    for (const auto& c : coeffs)
        if (!(c.field() == field())) throw Error(ErrorCode::FieldMismatch, "coefficient outside " + field().name());
    return AlgElement{id(), std::move(coeffs)};
}

AlgElement ChevalleyAlgebra::h_of_root(std::size_t root) const {
    AlgElement h = zero();
    const auto k = data_->rs.coroot_coords(data_->rs.roots().at(root));
    for (std::size_t s = 0; s < rank(); ++s) h.coeffs[s] = field().from_int(k[s]);
    return h;
}

AlgElement ChevalleyAlgebra::add(const Element& x, const Element& y) const {
    require_member(x);
    require_member(y);
    AlgElement out = x;
    for (std::size_t k = 0; k < dim(); ++k) out.coeffs[k] += y.coeffs[k];
    return out;
}

AlgElement ChevalleyAlgebra::sub(const Element& x, const Element& y) const {
    require_member(x);
    require_member(y);
    AlgElement out = x;
    for (std::size_t k = 0; k < dim(); ++k) out.coeffs[k] -= y.coeffs[k];
    return out;
}

AlgElement ChevalleyAlgebra::scale(const Scalar& s, const Element& x) const {
    require_member(x);
    AlgElement out = x;
    for (auto& c : out.coeffs) c *= s;
    return out;
}

AlgElement ChevalleyAlgebra::scale(const mpq_class& q, const Element& x) const {
    return scale(field().from_rational(q), x);
}

AlgElement ChevalleyAlgebra::bracket(const Element& x, const Element& y) const {
    require_member(x);
    require_member(y);
    AlgElement out = zero();
    const std::size_t d = dim();
    for (std::size_t i = 0; i < d; ++i) {
        if (x.coeffs[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (y.coeffs[j].is_zero()) continue;
            const auto& cell = data_->ftable[i * d + j];
            if (cell.empty()) continue;
            Scalar xy = x.coeffs[i] * y.coeffs[j];
            for (const auto& [k, c] : cell) out.coeffs[k] += xy * c;
        }
    }
    return out;
}

Matrix ChevalleyAlgebra::ad_matrix(const Element& x) const {
    require_member(x);
    Matrix m(field(), dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, bracket(x, basis(j)).coeffs);
    return m;
}

bool ChevalleyAlgebra::is_central(const Element& x) const {
    for (std::size_t j = 0; j < dim(); ++j)
        if (!bracket(x, basis(j)).is_zero()) return false;
    return true;
}

std::vector<AlgElement> ChevalleyAlgebra::center() const {
    const std::size_t d = dim();
    // Row (j, k), column i: coefficient of b_k in [b_i, b_j].
    Matrix m(field(), d * d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& [k, c] : data_->ftable[i * d + j]) m(j * d + k, i) += c;
    std::vector<AlgElement> out;
    for (auto& v : kernel(m)) out.push_back(AlgElement{id(), std::move(v)});
    return out;
}

Scalar ChevalleyAlgebra::root_value(std::size_t root, const Element& h) const {
    require_member(h);
    Scalar v = field().zero();
    const auto& rs = data_->rs;
    for (std::size_t s = 0; s < rank(); ++s)
        if (!h.coeffs[s].is_zero())
            v += h.coeffs[s] * field().from_int(rs.pairing(rs.roots().at(root), rs.roots()[s]));
    return v;
}

Vector ChevalleyAlgebra::h_part(const Element& x) const {
    require_member(x);
    return Vector(x.coeffs.begin(), x.coeffs.begin() + static_cast<std::ptrdiff_t>(rank()));
}

Vector ChevalleyAlgebra::upper_part(const Element& x) const {
    require_member(x);
    auto begin = x.coeffs.begin() + static_cast<std::ptrdiff_t>(rank());
    return Vector(begin, begin + static_cast<std::ptrdiff_t>(data_->rs.num_positive()));
}

Vector ChevalleyAlgebra::lower_part(const Element& x) const {
    require_member(x);
    auto begin = x.coeffs.begin() + static_cast<std::ptrdiff_t>(rank() + data_->rs.num_positive());
    return Vector(begin, x.coeffs.end());
}

std::size_t antisymmetry_violations(const ChevalleyAlgebra& alg) {
    std::size_t bad = 0;
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = i; j < alg.dim(); ++j) {
            auto x = alg.bracket(alg.basis(i), alg.basis(j));
            auto y = alg.bracket(alg.basis(j), alg.basis(i));
            if (!alg.add(x, y).is_zero()) ++bad;
        }
    return bad;
}

std::size_t jacobi_violations(const ChevalleyAlgebra& alg) {
    const std::size_t d = alg.dim();
    std::vector<AlgElement> basis;
    for (std::size_t k = 0; k < d; ++k) basis.push_back(alg.basis(k));
    std::vector<AlgElement> pair(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) pair[i * d + j] = alg.bracket(basis[i], basis[j]);
    std::size_t bad = 0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                AlgElement s = alg.bracket(pair[i * d + j], basis[k]);
                s = alg.add(s, alg.bracket(pair[j * d + k], basis[i]));
                s = alg.add(s, alg.bracket(pair[k * d + i], basis[j]));
                if (!s.is_zero()) ++bad;
            }
    return bad;
}

bool regular_size_bound_met(const ChevalleyAlgebra& alg, std::span<const Scalar> avoid) {
    if (!alg.field().is_finite()) return true;
    const std::uint64_t q = alg.field().modulus();
    const auto& rs = alg.root_system();
    const bool only_zero = avoid.size() == 1 && avoid[0].is_zero();
    if (only_zero) return q >= rs.num_positive();
    return q > avoid.size() * rs.roots().size();
}

AlgElement find_regular(const ChevalleyAlgebra& alg, std::span<const Scalar> avoid) {
    const Field& field = alg.field();
    for (const auto& a : avoid)
        if (!(a.field() == field)) throw Error(ErrorCode::FieldMismatch, "avoid set outside " + field.name());
    const std::size_t r = alg.rank();
    const std::size_t nroots = alg.root_system().roots().size();
    auto acceptable = [&](const AlgElement& h) {
        for (std::size_t b = 0; b < nroots; ++b) {
            Scalar v = alg.root_value(b, h);
            for (const auto& a : avoid)
                if (v == a) return false;
        }
        return true;
    };
    const bool bound = regular_size_bound_met(alg, avoid);
    if (field.is_finite()) {
        const std::uint64_t p = field.modulus();
        std::uint64_t total = 1;
        for (std::size_t s = 0; s < r; ++s) total *= p;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            AlgElement h = alg.zero();
            std::uint64_t rest = idx;
            for (std::size_t s = r; s-- > 0;) {
                h.coeffs[s] = field.element(rest % p);
                rest /= p;
            }
            if (acceptable(h)) return h;
        }
        if (bound) throw Error(ErrorCode::InternalFailure, "no regular element although the size bound holds");
        throw Error(ErrorCode::FieldTooSmall,
                    "no h in H avoids the given root values over " + field.name() + " (size bound fails)");
    }
    // Over Q: boxes [-R, R]^r of growing radius, lexicographic within the shell of max-norm R.
    const long long max_radius = static_cast<long long>(avoid.size() * nroots) + 2;
    for (long long radius = 0; radius <= max_radius; ++radius) {
        std::vector<long long> x(r, -radius);
        while (true) {
            long long norm = 0;
            for (auto v : x) norm = std::max(norm, v < 0 ? -v : v);
            if (norm == radius) {
                AlgElement h = alg.zero();
                for (std::size_t s = 0; s < r; ++s) h.coeffs[s] = field.from_int(x[s]);
                if (acceptable(h)) return h;
            }
            std::size_t pos = r;
            while (pos > 0 && x[pos - 1] == radius) x[--pos] = -radius;
            if (pos == 0) break;
            ++x[pos - 1];
        }
    }
    throw Error(ErrorCode::InternalFailure, "regular element search exhausted over Q");
}

RootAutomorphism root_automorphism(const ChevalleyAlgebra& alg, std::size_t root, const Scalar& t) {
    const auto ch = alg.field().characteristic();
    if (ch == 2 || ch == 3)
        throw Error(ErrorCode::CharacteristicRejected,
                    "root automorphisms need characteristic 0 or >= 5, got " + alg.field().name());
    if (root >= alg.root_system().roots().size())
        throw Error(ErrorCode::InvalidArgument, "root index out of range");
    if (!(t.field() == alg.field())) throw Error(ErrorCode::FieldMismatch, "parameter outside " + alg.field().name());
    const Field& field = alg.field();
    Matrix ad = alg.ad_matrix(alg.basis(alg.e_index(root))) * t;
    Matrix result = Matrix::identity(field, alg.dim());
    Matrix power = Matrix::identity(field, alg.dim());
    long long factorial = 1;
    for (int k = 1; k <= 4; ++k) {
        power = power * ad;
        factorial *= k;
        result += power * invert(field.from_int(factorial));
    }
    if (!(power * ad).is_zero()) throw Error(ErrorCode::InternalFailure, "(ad e_beta)^5 != 0");
    return RootAutomorphism{root, t, std::move(result)};
}

Automorphism Automorphism::identity(const ChevalleyAlgebra& alg) {
    return Automorphism(alg.id(), Matrix::identity(alg.field(), alg.dim()), {});
}

Automorphism Automorphism::from(const RootAutomorphism& x) {
    // The algebra id is not stored in RootAutomorphism; callers go through apply with the algebra.
    return Automorphism(0, x.matrix, {Factor{x.root, x.t}});
}

Automorphism Automorphism::compose(const Automorphism& first) const {
    if (algebra_id_ != first.algebra_id_ && algebra_id_ != 0 && first.algebra_id_ != 0)
        throw Error(ErrorCode::FieldMismatch, "composing automorphisms of different algebras");
    std::vector<Factor> f = factors_;
    f.insert(f.end(), first.factors_.begin(), first.factors_.end());
    return Automorphism(algebra_id_ ? algebra_id_ : first.algebra_id_, matrix_ * first.matrix_, std::move(f));
}

Automorphism Automorphism::inverse() const {
    auto inv = liemap::inverse(matrix_);
    if (!inv) throw Error(ErrorCode::InternalFailure, "automorphism matrix is singular");
    std::vector<Factor> f;
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) f.push_back(Factor{it->root, -it->t});
    return Automorphism(algebra_id_, std::move(*inv), std::move(f));
}

AlgElement apply_automorphism(const Automorphism& g, const AlgElement& x) {
    if (g.algebra_id() != 0 && g.algebra_id() != x.algebra_id)
        throw Error(ErrorCode::FieldMismatch, "automorphism and element belong to different algebras");
    if (g.matrix().cols() != x.coeffs.size())
        throw Error(ErrorCode::ShapeMismatch, "automorphism dimension mismatch");
    return AlgElement{x.algebra_id, g.matrix() * x.coeffs};
}

AlgElement apply_automorphism(const RootAutomorphism& g, const ChevalleyAlgebra& alg, const AlgElement& x) {
    alg.require_member(x);
    return AlgElement{x.algebra_id, g.matrix * x.coeffs};
}

}  // namespace liemap
