/**************************************************************************
 * matrix.hpp
 *
 * Copyright 2026 The tgrs Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "tgrs/field.hpp"

namespace tgrs {

/// Dense row-major matrix over a finite field.
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols);
    Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

    static Matrix identity(Field field, std::size_t n);
    static Matrix from_rows(Field field, const std::vector<std::vector<Elem>>& rows, std::size_t cols = 0);
    /// Integers are mapped into the prime subfield (negative values allowed).
    static Matrix from_ints(Field field, std::initializer_list<std::initializer_list<std::int64_t>> rows);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Elem operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    Elem& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    std::span<const Elem> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<Elem> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    const std::vector<Elem>& entries() const noexcept { return data_; }

    Matrix transpose() const;
    Matrix select_columns(std::span<const std::size_t> columns) const;
    Matrix select_rows(std::span<const std::size_t> rows) const;
    /// Rows of *this followed by rows of other.
    Matrix stack(const Matrix& other) const;
    bool is_zero() const noexcept;

    std::string to_string() const;

    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

/// Exact product. Throws DimensionMismatch or FieldMismatch.
Matrix operator*(const Matrix& a, const Matrix& b);

struct RowEchelon {
    Matrix rref;                      // unique reduced row echelon form, same shape as input
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero rref row
};

RowEchelon row_reduce(const Matrix& a);
std::size_t rank(const Matrix& a);

/**
 * Basis of {x : A x^T = 0}, one row per free column of rref(A) in
 * increasing column order; the row for free column f has a 1 at f and zeros
 * at the other free columns. Has cols(A) - rank(A) rows.
 */
Matrix kernel_basis(const Matrix& a);

/// Throws DimensionMismatch for non-square input.
Elem determinant(const Matrix& a);

/// The nonzero rows of rref(a) (a basis of the row space, canonical).
Matrix row_space_basis(const Matrix& a);
bool same_row_space(const Matrix& a, const Matrix& b);
/// Every row of `sub` lies in the row space of `whole`.
bool row_space_contains(const Matrix& whole, const Matrix& sub);

/// Rank of the submatrix formed by `columns`. `scratch` is reused as
/// workspace so enumeration loops do not allocate.
std::size_t column_subset_rank(const Matrix& a, std::span<const std::size_t> columns,
                               std::vector<Elem>& scratch);

}  // namespace tgrs
