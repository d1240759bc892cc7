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
// Dense exact linear algebra over a Field.

#ifndef LIEMAP_LINALG_HPP
#define LIEMAP_LINALG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "liemap/scalar.hpp"

namespace liemap {

class Matrix {
public:
    Matrix() = default;
    Matrix(Field field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

    static Matrix identity(const Field& field, std::size_t n);
    // Row-major integer entries mapped into `field`.
    static Matrix from_ints(const Field& field, std::size_t rows, std::size_t cols,
                            std::span<const long long> entries);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    void set_column(std::size_t c, const Vector& v);

    bool is_zero() const noexcept;
    Scalar trace() const;
    Matrix transpose() const;

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(const Scalar& s);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);
    friend bool operator==(const Matrix& a, const Matrix& b);

    std::string to_string() const;

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

struct RowEchelon {
    Matrix reduced;                   // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
    std::size_t rank() const noexcept { return pivots.size(); }
};

RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
// Basis of {x : m x = 0}, one vector per free column.
std::vector<Vector> kernel(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
Scalar determinant(Matrix m);
// Some x with m x = b, or nullopt if inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

// Matrix whose columns are the given vectors.
Matrix from_columns(const Field& field, std::size_t rows, std::span<const Vector> columns);

}  // namespace liemap

#endif  // LIEMAP_LINALG_HPP
