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

#include "liemap/matrixrep.hpp"

#include <charconv>

namespace liemap {

Realization Realization::sl(std::size_t n) {
    if (n < 2 || n > 9) throw Error(ErrorCode::Unsupported, "sl(n) realizations need 2 <= n <= 9");
    return Realization{RealizationKind::SL, n};
}

Realization Realization::parse(std::string_view text) {
    if (text == "so5") return so5();
    if (text.size() == 3 && text.substr(0, 2) == "sl") {
        std::size_t n = 0;
        auto [ptr, ec] = std::from_chars(text.data() + 2, text.data() + 3, n);
        if (ec == std::errc{} && ptr == text.data() + 3) return sl(n);
    }
    throw Error(ErrorCode::ParseError, "unknown realization '" + std::string(text) + "'");
}

std::string Realization::name() const {
    return kind == RealizationKind::SO5 ? "so5" : "sl" + std::to_string(n);
}

std::size_t Realization::dim() const { return kind == RealizationKind::SO5 ? 10 : n * n - 1; }

bool is_so5_shape(const Matrix& a) {
    if (a.rows() != 5 || a.cols() != 5) return false;
    auto neg = [](const Scalar& s) { return -s; };
    if (!a(0, 0).is_zero()) return false;
    // first column is (0, -c^t, -b^t)
    for (std::size_t k = 0; k < 2; ++k) {
        if (a(1 + k, 0) != neg(a(0, 3 + k))) return false;
        if (a(3 + k, 0) != neg(a(0, 1 + k))) return false;
    }
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            if (a(3 + i, 3 + j) != neg(a(1 + j, 1 + i))) return false;  // -m^t
            if (a(1 + i, 3 + j) != neg(a(1 + j, 3 + i))) return false;  // n skew
            if (a(3 + i, 1 + j) != neg(a(3 + j, 1 + i))) return false;  // p skew
        }
    return true;
}

MatrixElement make_matrix_element(const Realization& r, Matrix value) {
    if (value.rows() != r.n || value.cols() != r.n)
        throw Error(ErrorCode::ShapeMismatch, "expected a " + std::to_string(r.n) + "x" + std::to_string(r.n) +
                                                  " matrix for " + r.name());
    if (r.kind == RealizationKind::SO5) {
        if (!is_so5_shape(value)) throw Error(ErrorCode::ShapeMismatch, "matrix is not of so5 block form");
    } else if (!value.trace().is_zero()) {
        throw Error(ErrorCode::ShapeMismatch, "sl(n) matrix must have trace zero");
    }
    return MatrixElement{r, std::move(value)};
}

MatrixElement commutator(const MatrixElement& x, const MatrixElement& y) {
    if (!(x.realization == y.realization)) throw Error(ErrorCode::ShapeMismatch, "commutator of different realizations");
    return MatrixElement{x.realization, x.value * y.value - y.value * x.value};
}

MatrixElement MatrixLieAlgebra::zero() const {
    return MatrixElement{realization_, Matrix(field_, realization_.n, realization_.n)};
}

MatrixElement MatrixLieAlgebra::add(const Element& x, const Element& y) const {
    if (!(x.realization == y.realization)) throw Error(ErrorCode::ShapeMismatch, "sum of different realizations");
    return MatrixElement{x.realization, x.value + y.value};
}

MatrixElement MatrixLieAlgebra::sub(const Element& x, const Element& y) const {
    if (!(x.realization == y.realization)) throw Error(ErrorCode::ShapeMismatch, "difference of different realizations");
    return MatrixElement{x.realization, x.value - y.value};
}

MatrixElement MatrixLieAlgebra::scale(const Scalar& s, const Element& x) const {
    return MatrixElement{x.realization, x.value * s};
}

MatrixElement MatrixLieAlgebra::scale(const mpq_class& q, const Element& x) const {
    return scale(field_.from_rational(q), x);
}

std::vector<MatrixElement> MatrixLieAlgebra::basis() const {
    const std::size_t n = realization_.n;
    std::vector<MatrixElement> out;
    auto unit = [&](std::initializer_list<std::tuple<std::size_t, std::size_t, int>> entries) {
        Matrix m(field_, n, n);
        for (auto [i, j, v] : entries) m(i, j) += field_.from_int(v);
        out.push_back(MatrixElement{realization_, std::move(m)});
    };
    if (realization_.kind == RealizationKind::SO5) {
        // b1, b2, c1, c2, m11, m12, m21, m22, n12, p21
        unit({{0, 1, 1}, {3, 0, -1}});
        unit({{0, 2, 1}, {4, 0, -1}});
        unit({{0, 3, 1}, {1, 0, -1}});
        unit({{0, 4, 1}, {2, 0, -1}});
        unit({{1, 1, 1}, {3, 3, -1}});
        unit({{1, 2, 1}, {4, 3, -1}});
        unit({{2, 1, 1}, {3, 4, -1}});
        unit({{2, 2, 1}, {4, 4, -1}});
        unit({{1, 4, 1}, {2, 3, -1}});
        unit({{4, 1, 1}, {3, 2, -1}});
        return out;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) unit({{i, j, 1}});
    for (std::size_t i = 0; i + 1 < n; ++i) unit({{i, i, 1}, {i + 1, i + 1, -1}});
    return out;
}

MatrixElement MatrixLieAlgebra::from_coords(const std::vector<long long>& coords) const {
    auto b = basis();
    if (coords.size() != b.size()) throw Error(ErrorCode::ShapeMismatch, "coordinate count does not match dimension");
    MatrixElement x = zero();
    for (std::size_t k = 0; k < b.size(); ++k)
        if (coords[k]) x.value += b[k].value * field_.from_int(coords[k]);
    return x;
}

std::vector<Scalar> char_poly(const Matrix& a) {
    if (!a.is_square()) throw Error(ErrorCode::ShapeMismatch, "characteristic polynomial of non-square matrix");
    const std::size_t n = a.rows();
    const Field& field = a.field();
    if (n == 0) return {field.one()};
    // Berkowitz: grow from the trailing 1x1 block towards the full matrix.
    std::vector<Scalar> poly{field.one(), -a(n - 1, n - 1)};
    for (std::size_t r = n - 1; r-- > 0;) {
        const std::size_t k = n - 1 - r;  // size of the trailing block below r
        std::vector<Scalar> col{field.one(), -a(r, r)};
        // v = C, then A1 v, A1^2 v, ...; entries -R A1^j C
        Vector v(k);
        for (std::size_t i = 0; i < k; ++i) v[i] = a(r + 1 + i, r);
        for (std::size_t j = 0; j < k; ++j) {
            Scalar dot = field.zero();
            for (std::size_t i = 0; i < k; ++i) dot += a(r, r + 1 + i) * v[i];
            col.push_back(-dot);
            if (j + 1 == k) break;
            Vector next = zero_vector(field, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t l = 0; l < k; ++l)
                    if (!v[l].is_zero()) next[i] += a(r + 1 + i, r + 1 + l) * v[l];
            v = std::move(next);
        }
        std::vector<Scalar> next_poly(k + 2, field.zero());
        for (std::size_t i = 0; i < k + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, k); ++j) next_poly[i] += col[i - j] * poly[j];
        poly = std::move(next_poly);
    }
    return poly;
}

Scalar InvariantPair::theta_num() const { return pow(f1, static_cast<unsigned>(deg_f2)); }
Scalar InvariantPair::theta_den() const { return pow(f2, static_cast<unsigned>(deg_f1)); }

InvariantPair char_invariants(const MatrixElement& x) {
    const auto& r = x.realization;
    if (r.kind == RealizationKind::SL && r.n == 3) {
        auto c = char_poly(x.value);
        if (!c[1].is_zero()) throw Error(ErrorCode::ShapeMismatch, "sl3 matrix must have trace zero");
        return InvariantPair{c[2], c[3], 2, 3};
    }
    if (r.kind == RealizationKind::SO5) {
        if (!is_so5_shape(x.value)) throw Error(ErrorCode::ShapeMismatch, "matrix is not of so5 block form");
        auto c = char_poly(x.value);
        if (!c[1].is_zero() || !c[3].is_zero() || !c[5].is_zero())
            throw Error(ErrorCode::InternalFailure, "so5 characteristic polynomial has odd-degree terms");
        return InvariantPair{c[2], c[4], 2, 4};
    }
    throw Error(ErrorCode::Unsupported, "invariants are provided for sl3 and so5 only");
}

const char* separation_name(Separation s) noexcept {
    switch (s) {
        case Separation::Separated: return "separated";
        case Separation::Equal: return "equal";
        case Separation::Undefined: return "undefined";
    }
    return "?";
}

Separation theta_compare(const InvariantPair& a, const InvariantPair& b) {
    const Scalar an = a.theta_num(), ad = a.theta_den();
    const Scalar bn = b.theta_num(), bd = b.theta_den();
    if ((an.is_zero() && ad.is_zero()) || (bn.is_zero() && bd.is_zero())) return Separation::Undefined;
    return an * bd == ad * bn ? Separation::Equal : Separation::Separated;
}

Separation theta_separates(const MatrixElement& d1, const MatrixElement& d2) {
    if (!(d1.realization == d2.realization)) throw Error(ErrorCode::ShapeMismatch, "theta of different realizations");
    if (d1.is_zero() || d2.is_zero()) throw Error(ErrorCode::InvalidArgument, "theta comparison of a zero matrix");
    return theta_compare(char_invariants(d1), char_invariants(d2));
}

Matrix exp_nilpotent(const Matrix& n) {
    const Field& field = n.field();
    Matrix result = Matrix::identity(field, n.rows());
    Matrix power = Matrix::identity(field, n.rows());
    Scalar factorial = field.one();
    for (std::size_t k = 1; k <= n.rows(); ++k) {
        power = power * n;
        if (power.is_zero()) return result;
        factorial *= field.from_int(static_cast<long long>(k));
        result += power * invert(factorial);
    }
    if (!(power * n).is_zero() && !power.is_zero())
        throw Error(ErrorCode::InvalidArgument, "exp_nilpotent of a non-nilpotent matrix");
    return result;
}

namespace {

Matrix elementary(const Field& field, std::size_t n, std::initializer_list<std::tuple<std::size_t, std::size_t, int>> entries) {
    Matrix m(field, n, n);
    for (auto [i, j, v] : entries) m(i, j) += field.from_int(v);
    return m;
}

Matrix bracket_of(const Matrix& x, const Matrix& y) { return x * y - y * x; }

}  // namespace

ChevalleyRealization::ChevalleyRealization(const ChevalleyAlgebra& alg) : alg_(alg) {
    const RootSystem& rs = alg.root_system();
    const Field& field = alg.field();
    if (field.characteristic() == 2)
        throw Error(ErrorCode::CharacteristicRejected, "matrix realizations need characteristic != 2");
    const std::size_t r = alg.rank();
    const std::size_t npos = rs.num_positive();
    std::vector<Matrix> up(npos), down(npos);
    if (rs.type() == RootType::A) {
        realization_ = Realization::sl(r + 1);
        for (std::size_t i = 0; i < r; ++i) {
            up[i] = elementary(field, r + 1, {{i, i + 1, 1}});
            down[i] = elementary(field, r + 1, {{i + 1, i, 1}});
        }
    } else if (rs.type() == RootType::B && r == 2) {
        realization_ = Realization::so5();
        up[0] = elementary(field, 5, {{1, 2, 1}, {4, 3, -1}});
        down[0] = elementary(field, 5, {{2, 1, 1}, {3, 4, -1}});
        up[1] = elementary(field, 5, {{0, 4, 1}, {2, 0, -1}});
        down[1] = elementary(field, 5, {{0, 2, 1}, {4, 0, -1}});
    } else {
        throw Error(ErrorCode::Unsupported, "matrix realization available for A_r and B2 only, not " + rs.label());
    }

    // Normalize so that [h_i, X_{alpha_i}] = 2 X_{alpha_i}.
    std::vector<Matrix> h(r);
    for (std::size_t i = 0; i < r; ++i) {
        Matrix hi = bracket_of(up[i], down[i]);
        Matrix act = bracket_of(hi, up[i]);
        Scalar c = field.zero();
        for (std::size_t a = 0; a < up[i].rows() && c.is_zero(); ++a)
            for (std::size_t b = 0; b < up[i].cols(); ++b)
                if (!up[i](a, b).is_zero()) {
                    c = act(a, b) / up[i](a, b);
                    break;
                }
        if (c.is_zero()) throw Error(ErrorCode::InternalFailure, "degenerate simple root vector");
        Scalar s = field.from_int(2) / c;
        down[i] *= s;
        h[i] = hi * s;
    }

    // Higher roots through extraspecial pairs: X_xi = [X_g, X_d] / N_{g,d}.
    const auto& roots = rs.roots();
    for (std::size_t xi = r; xi < npos; ++xi) {
        std::optional<std::size_t> g, d;
        for (std::size_t a = 0; a < npos && !g; ++a) {
            auto rest = rs.index_of(roots[xi] - roots[a]);
            if (rest && *rest < npos) {
                g = a;
                d = *rest;
            }
        }
        if (!g) throw Error(ErrorCode::InternalFailure, "positive root without a decomposition");
        up[xi] = bracket_of(up[*g], up[*d]) * invert(field.from_int(alg.n(*g, *d)));
        down[xi] = bracket_of(down[*g], down[*d]) *
                   invert(field.from_int(alg.n(rs.negative_index(*g), rs.negative_index(*d))));
    }

    for (std::size_t i = 0; i < r; ++i) images_.push_back(MatrixElement{realization_, h[i]});
    for (std::size_t k = 0; k < npos; ++k) images_.push_back(MatrixElement{realization_, up[k]});
    for (std::size_t k = 0; k < npos; ++k) images_.push_back(MatrixElement{realization_, down[k]});

    const std::size_t n = realization_.n;
    const std::size_t dim = alg.dim();
    Matrix flat_t(field, dim, n * n);
    for (std::size_t k = 0; k < dim; ++k)
        for (std::size_t e = 0; e < n * n; ++e) flat_t(k, e) = images_[k].value(e / n, e % n);
    RowEchelon ech = row_reduce(flat_t);
    if (ech.rank() != dim) throw Error(ErrorCode::InternalFailure, "realization images are linearly dependent");
    probe_entries_ = ech.pivots;
    Matrix square(field, dim, dim);
    for (std::size_t row = 0; row < dim; ++row)
        for (std::size_t k = 0; k < dim; ++k)
            square(row, k) = images_[k].value(probe_entries_[row] / n, probe_entries_[row] % n);
    auto inv = inverse(square);
    if (!inv) throw Error(ErrorCode::InternalFailure, "probe block is singular");
    probe_inverse_ = std::move(*inv);

    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            MatrixElement lhs = to_matrix(alg.bracket(alg.basis(i), alg.basis(j)));
            MatrixElement rhs = commutator(images_[i], images_[j]);
            if (!(lhs == rhs))
                throw Error(ErrorCode::InternalFailure, "realization does not preserve [" + alg.basis_label(i) + ", " +
                                                            alg.basis_label(j) + "]");
        }
}

MatrixElement ChevalleyRealization::to_matrix(const AlgElement& x) const {
    alg_.require_member(x);
    const std::size_t n = realization_.n;
    Matrix m(alg_.field(), n, n);
    for (std::size_t k = 0; k < x.coeffs.size(); ++k)
        if (!x.coeffs[k].is_zero()) m += images_[k].value * x.coeffs[k];
    return MatrixElement{realization_, std::move(m)};
}

AlgElement ChevalleyRealization::from_matrix(const Matrix& m) const {
    const std::size_t n = realization_.n;
    if (m.rows() != n || m.cols() != n) throw Error(ErrorCode::ShapeMismatch, "matrix size does not match " + realization_.name());
    Vector probe;
    for (auto e : probe_entries_) probe.push_back(m(e / n, e % n));
    AlgElement x = alg_.element(probe_inverse_ * probe);
    if (!(to_matrix(x).value == m))
        throw Error(ErrorCode::ShapeMismatch, "matrix is outside the realized algebra " + realization_.name());
    return x;
}

Matrix ChevalleyRealization::conjugation_matrix(const Matrix& g, const Matrix& g_inverse) const {
    const std::size_t dim = alg_.dim();
    Matrix out(alg_.field(), dim, dim);
    for (std::size_t j = 0; j < dim; ++j) out.set_column(j, from_matrix(g * images_[j].value * g_inverse).coeffs);
    return out;
}

}  // namespace liemap
