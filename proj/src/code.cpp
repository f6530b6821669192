/**************************************************************************
 * code.cpp
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

#include "tgrs/code.hpp"

#include <algorithm>

#include "tgrs/combinations.hpp"

namespace tgrs {

LinearCode::LinearCode(Matrix G) : G_(std::move(G)), H_(G_.field(), 0, 0) {
    if (rank(G_) != G_.rows())
        throw InvalidArgument("generator matrix has rank " + std::to_string(rank(G_)) + " < " +
                              std::to_string(G_.rows()) + " rows");
    H_ = kernel_basis(G_);
}

LinearCode::LinearCode(Matrix G, Matrix H) : G_(std::move(G)), H_(std::move(H)) {
    if (!(G_.field() == H_.field())) throw FieldMismatch("generator and parity-check over different fields");
    if (G_.cols() != H_.cols()) throw DimensionMismatch("generator and parity-check of different lengths");
    if (rank(G_) != G_.rows()) throw InvalidArgument("generator matrix is not of full row rank");
    if (rank(H_) != G_.cols() - G_.rows()) throw InvalidArgument("parity-check matrix rank is not n - k");
    if (!(G_ * H_.transpose()).is_zero()) throw InvalidArgument("G H^T is not zero");
}

LinearCode LinearCode::zero_code(const Field& field, std::size_t n) {
    return LinearCode(Matrix(field, 0, n), Matrix::identity(field, n), Trusted{});
}

LinearCode LinearCode::full_space(const Field& field, std::size_t n) {
    return LinearCode(Matrix::identity(field, n), Matrix(field, 0, n), Trusted{});
}

LinearCode dual(const LinearCode& c) { return LinearCode(c.H_, c.G_, LinearCode::Trusted{}); }

namespace {

Bounded<std::size_t> dependent_columns(const Matrix& H, Budget budget) {
    const std::size_t n = H.cols();
    Bounded<std::size_t> out;
    std::vector<Elem> scratch;
    // Any rank(H) + 1 columns are dependent, so w never passes rows + 1.
    const std::size_t w_max = std::min(n, H.rows() + 1);
    for (std::size_t w = 1; w <= w_max; ++w) {
        for (Combinations comb(n, w); comb.valid(); comb.next()) {
            if (out.subsets_visited >= budget.max_subsets) return out;
            ++out.subsets_visited;
            if (column_subset_rank(H, comb.indices(), scratch) < w) {
                out.value = w;
                return out;
            }
        }
    }
    out.value = n + 1;
    return out;
}

}  // namespace

Bounded<std::size_t> min_distance(const LinearCode& c, Budget budget) {
    return dependent_columns(c.parity_check(), budget);
}

Bounded<std::size_t> dual_distance(const LinearCode& c, Budget budget) {
    return dependent_columns(c.generator(), budget);
}

bool is_self_orthogonal(const LinearCode& c) {
    const Matrix& G = c.generator();
    return (G * G.transpose()).is_zero();
}

bool is_self_dual(const LinearCode& c) { return c.length() == 2 * c.dimension() && is_self_orthogonal(c); }

bool is_almost_self_dual(const LinearCode& c) {
    return c.length() == 2 * c.dimension() + 1 && is_self_orthogonal(c);
}

LinearCode schur_product(const LinearCode& a, const LinearCode& b) {
    if (!(a.field() == b.field())) throw FieldMismatch("Schur product of codes over different fields");
    if (a.length() != b.length()) throw DimensionMismatch("Schur product of codes of different lengths");
    const Field& f = a.field();
    const std::size_t n = a.length();
    const Matrix& A = a.generator();
    const Matrix& B = b.generator();
    Matrix prod(f, A.rows() * B.rows(), n);
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < B.rows(); ++j)
            for (std::size_t s = 0; s < n; ++s) prod(i * B.rows() + j, s) = f.mul(A(i, s), B(j, s));
    return LinearCode(row_space_basis(prod));
}

LinearCode schur_square(const LinearCode& c) {
    // Only the i <= j products are needed; the span is the same.
    const Field& f = c.field();
    const std::size_t n = c.length(), k = c.dimension();
    const Matrix& G = c.generator();
    Matrix prod(f, k * (k + 1) / 2, n);
    std::size_t r = 0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j, ++r)
            for (std::size_t s = 0; s < n; ++s) prod(r, s) = f.mul(G(i, s), G(j, s));
    return LinearCode(row_space_basis(prod));
}

std::string NonGrsCertificate::describe() const {
    const std::string what = which == Which::Square ? "dim(C^2)" : "dim((C^perp)^2)";
    return what + " = " + std::to_string(computed_dim) + " but every GRS code of these parameters has " +
           std::to_string(grs_dim);
}

std::optional<NonGrsCertificate> non_grs_witness(const LinearCode& c) {
    const long n = static_cast<long>(c.length()), k = static_cast<long>(c.dimension());
    if (k == 0) return std::nullopt;
    if (2 * k <= n) {
        const auto grs = static_cast<std::size_t>(std::min(n, 2 * k - 1));
        const std::size_t dim = schur_square(c).dimension();
        if (dim != grs) return NonGrsCertificate{NonGrsCertificate::Which::Square, dim, grs};
        return std::nullopt;
    }
    const auto grs = static_cast<std::size_t>(std::max(0L, std::min(n, 2 * n - 2 * k - 1)));
    const std::size_t dim = schur_square(dual(c)).dimension();
    if (dim != grs) return NonGrsCertificate{NonGrsCertificate::Which::DualSquare, dim, grs};
    return std::nullopt;
}

std::string MdsClass::to_string() const {
    switch (kind) {
    case Kind::MDS: return "MDS";
    case Kind::AMDS: return "AMDS";
    case Kind::NMDS: return "NMDS";
    case Kind::MMDS: break;
    }
    return std::to_string(defect) + "-MDS";
}

MdsClass mds_class(std::size_t defect, std::optional<std::size_t> dual_defect) {
    if (defect == 0) return {MdsClass::Kind::MDS, 0};
    if (defect == 1) return {dual_defect == 1u ? MdsClass::Kind::NMDS : MdsClass::Kind::AMDS, 1};
    return {MdsClass::Kind::MMDS, defect};
}

ClassificationReport classify(const LinearCode& c, Budget budget) {
    ClassificationReport r;
    r.n = c.length();
    r.k = c.dimension();
    r.d = min_distance(c, budget);
    r.d_dual = dual_distance(c, budget);
    // Zero codes (k = 0, or the dual when k = n) carry no defect.
    if (r.k > 0 && r.d.value) r.defect = r.n - r.k + 1 - *r.d.value;
    if (r.k < r.n && r.d_dual.value) r.defect_dual = r.k + 1 - *r.d_dual.value;
    if (r.defect && (r.defect_dual || r.k == r.n)) r.mds = mds_class(*r.defect, r.defect_dual);
    r.self_orthogonal = is_self_orthogonal(c);
    r.self_dual = r.self_orthogonal && r.n == 2 * r.k;
    r.almost_self_dual = r.self_orthogonal && r.n == 2 * r.k + 1;
    if (r.d_dual.value) r.projective = *r.d_dual.value >= 3;
    r.schur_sq_dim = schur_square(c).dimension();
    r.schur_sq_dual_dim = schur_square(dual(c)).dimension();
    r.non_grs = non_grs_witness(c);
    return r;
}

}  // namespace tgrs
