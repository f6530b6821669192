/**************************************************************************
 * matrix.cpp
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

#include "tgrs/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace tgrs {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, Elem{0}) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
        throw DimensionMismatch("matrix needs " + std::to_string(rows_ * cols_) + " entries, got " +
                                std::to_string(data_.size()));
    for (auto e : data_)
        if (!field_.contains(e)) throw InvalidArgument("matrix entry is not an element of " + field_.name());
}

Matrix Matrix::identity(Field field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<std::vector<Elem>>& rows, std::size_t cols) {
    if (!rows.empty()) cols = rows.front().size();
    std::vector<Elem> data;
    data.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw DimensionMismatch("ragged rows");
        data.insert(data.end(), r.begin(), r.end());
    }
    return Matrix(std::move(field), rows.size(), cols, std::move(data));
}

Matrix Matrix::from_ints(Field field, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    std::vector<std::vector<Elem>> elems;
    for (const auto& r : rows) {
        auto& out = elems.emplace_back();
        for (auto x : r) out.push_back(field.from_int(x));
    }
    return from_rows(std::move(field), elems);
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::select_columns(std::span<const std::size_t> columns) const {
    Matrix s(field_, rows_, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j] >= cols_) throw DimensionMismatch("column index out of range");
        for (std::size_t r = 0; r < rows_; ++r) s(r, j) = (*this)(r, columns[j]);
    }
    return s;
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const {
    Matrix s(field_, rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] >= rows_) throw DimensionMismatch("row index out of range");
        std::copy_n(row(rows[i]).begin(), cols_, s.row(i).begin());
    }
    return s;
}

Matrix Matrix::stack(const Matrix& other) const {
    if (!(field_ == other.field_)) throw FieldMismatch("stacking matrices over different fields");
    if (cols_ != other.cols_) throw DimensionMismatch("stacking matrices with different column counts");
    std::vector<Elem> data = data_;
    data.insert(data.end(), other.data_.begin(), other.data_.end());
    return Matrix(field_, rows_ + other.rows_, cols_, std::move(data));
}

bool Matrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e.v == 0; });
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << '[';
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << field_.to_string((*this)(r, c));
        os << "]\n";
    }
    return os.str();
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw FieldMismatch("multiplying matrices over different fields");
    if (a.cols() != b.rows())
        throw DimensionMismatch("cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    const Field& f = a.field();
    Matrix c(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const Elem x = a(i, l);
            if (x.v == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = f.add(c(i, j), f.mul(x, b(l, j)));
        }
    return c;
}

RowEchelon row_reduce(const Matrix& a) {
    const Field& f = a.field();
    RowEchelon out{a, 0, {}};
    Matrix& m = out.rref;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c).v == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
        const Elem s = f.inv(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), s);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).v == 0) continue;
            const Elem factor = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

std::size_t rank(const Matrix& a) { return row_reduce(a).rank; }

Matrix kernel_basis(const Matrix& a) {
    const Field& f = a.field();
    const RowEchelon e = row_reduce(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    Matrix k(f, a.cols() - e.rank, a.cols());
    std::size_t row = 0;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        k(row, free) = f.one();
        for (std::size_t i = 0; i < e.rank; ++i) k(row, e.pivots[i]) = f.neg(e.rref(i, free));
        ++row;
    }
    return k;
}

Elem determinant(const Matrix& a) {
    if (a.rows() != a.cols())
        throw DimensionMismatch("determinant of a non-square " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " matrix");
    const Field& f = a.field();
    Matrix m = a;
    const std::size_t n = m.rows();
    Elem det = f.one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m(piv, c).v == 0) ++piv;
        if (piv == n) return f.zero();
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
            det = f.neg(det);
        }
        det = f.mul(det, m(c, c));
        const Elem s = f.inv(m(c, c));
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).v == 0) continue;
            const Elem factor = f.mul(m(i, c), s);
            for (std::size_t j = c; j < n; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(c, j)));
        }
    }
    return det;
}

Matrix row_space_basis(const Matrix& a) {
    const RowEchelon e = row_reduce(a);
    std::vector<std::size_t> keep(e.rank);
    for (std::size_t i = 0; i < e.rank; ++i) keep[i] = i;
    return e.rref.select_rows(keep);
}

bool same_row_space(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field()) || a.cols() != b.cols()) return false;
    return row_space_basis(a) == row_space_basis(b);
}

bool row_space_contains(const Matrix& whole, const Matrix& sub) {
    if (!(whole.field() == sub.field())) throw FieldMismatch("row spaces over different fields");
    if (whole.cols() != sub.cols()) throw DimensionMismatch("row spaces of different lengths");
    return rank(whole.stack(sub)) == rank(whole);
}

std::size_t column_subset_rank(const Matrix& a, std::span<const std::size_t> columns, std::vector<Elem>& scratch) {
    const Field& f = a.field();
    const std::size_t rows = a.rows(), w = columns.size();
    // Work on the transpose: one scratch row per selected column.
    scratch.resize(w * rows);
    for (std::size_t j = 0; j < w; ++j)
        for (std::size_t r = 0; r < rows; ++r) scratch[j * rows + r] = a(r, columns[j]);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < rows && rank < w; ++c) {
        std::size_t piv = rank;
        while (piv < w && scratch[piv * rows + c].v == 0) ++piv;
        if (piv == w) continue;
        if (piv != rank)
            for (std::size_t j = c; j < rows; ++j) std::swap(scratch[piv * rows + j], scratch[rank * rows + j]);
        const Elem s = f.inv(scratch[rank * rows + c]);
        for (std::size_t i = rank + 1; i < w; ++i) {
            const Elem x = scratch[i * rows + c];
            if (x.v == 0) continue;
            const Elem factor = f.mul(x, s);
            for (std::size_t j = c; j < rows; ++j)
                scratch[i * rows + j] = f.sub(scratch[i * rows + j], f.mul(factor, scratch[rank * rows + j]));
        }
        ++rank;
    }
    return rank;
}

}  // namespace tgrs
