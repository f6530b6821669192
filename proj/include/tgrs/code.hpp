/**************************************************************************
 * code.hpp
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
#include <cstdint>
#include <optional>
#include <string>

#include "tgrs/matrix.hpp"

namespace tgrs {

/**
 * An [n, k] linear code given by a full-rank generator matrix. The
 * parity-check matrix is computed (or validated) at construction.
 * k = 0 is the zero code, stored with a 0 x n generator.
 */
class LinearCode {
public:
    /// Throws InvalidArgument if G is not of full row rank.
    explicit LinearCode(Matrix G);
    /// Uses H as the parity-check matrix after checking G H^T = 0 and
    /// rank(H) = n - k.
    LinearCode(Matrix G, Matrix H);

    static LinearCode zero_code(const Field& field, std::size_t n);
    static LinearCode full_space(const Field& field, std::size_t n);

    const Field& field() const noexcept { return G_.field(); }
    std::size_t length() const noexcept { return G_.cols(); }
    std::size_t dimension() const noexcept { return G_.rows(); }
    const Matrix& generator() const noexcept { return G_; }
    const Matrix& parity_check() const noexcept { return H_; }

private:
    struct Trusted {};
    LinearCode(Matrix G, Matrix H, Trusted) : G_(std::move(G)), H_(std::move(H)) {}

    Matrix G_;
    Matrix H_;

    friend LinearCode dual(const LinearCode& c);
};

LinearCode dual(const LinearCode& c);

/// Ceiling on the number of column subsets an enumeration may visit.
struct Budget {
    std::uint64_t max_subsets = 10'000'000;
};

/// Result of a budgeted enumeration: empty value means the budget ran out.
template <class T>
struct Bounded {
    std::optional<T> value;
    std::uint64_t subsets_visited = 0;

    bool exceeded() const noexcept { return !value.has_value(); }
};

/**
 * Minimum distance: the least w such that some w columns of H are linearly
 * dependent, found by enumerating column subsets in increasing size
 * (colexicographic within a size) and stopping at the first dependency.
 * k = n gives 1; the zero code gives n + 1.
 */
Bounded<std::size_t> min_distance(const LinearCode& c, Budget budget = {});
Bounded<std::size_t> dual_distance(const LinearCode& c, Budget budget = {});

bool is_self_orthogonal(const LinearCode& c);
bool is_self_dual(const LinearCode& c);
bool is_almost_self_dual(const LinearCode& c);

/// Span of all coordinatewise products of generator rows.
LinearCode schur_product(const LinearCode& a, const LinearCode& b);
LinearCode schur_square(const LinearCode& c);

struct NonGrsCertificate {
    enum class Which { Square, DualSquare };

    Which which;
    std::size_t computed_dim;
    std::size_t grs_dim;

    std::string describe() const;
};

/**
 * Schur-square dimension test. For k <= n/2 compares dim(C^2) with
 * min(n, 2k-1); otherwise compares dim((C^perp)^2) with
 * max(0, min(n, 2n-2k-1)). An empty result is inconclusive.
 */
std::optional<NonGrsCertificate> non_grs_witness(const LinearCode& c);

struct MdsClass {
    enum class Kind { MDS, AMDS, NMDS, MMDS };

    Kind kind;
    std::size_t defect;  // Singleton defect of the code

    /// "MDS", "AMDS", "NMDS" or "<m>-MDS".
    std::string to_string() const;
};

/// defect 0 -> MDS; defect 1 -> NMDS if the dual defect is 1, else AMDS;
/// defect m >= 2 -> m-MDS.
MdsClass mds_class(std::size_t defect, std::optional<std::size_t> dual_defect);

struct ClassificationReport {
    std::size_t n = 0;
    std::size_t k = 0;
    Bounded<std::size_t> d;
    Bounded<std::size_t> d_dual;
    // Singleton defects; absent for the zero code or when a distance is unknown.
    std::optional<std::size_t> defect;
    std::optional<std::size_t> defect_dual;
    std::optional<MdsClass> mds;
    bool self_orthogonal = false;
    bool self_dual = false;
    bool almost_self_dual = false;
    std::optional<bool> projective;
    std::size_t schur_sq_dim = 0;
    std::size_t schur_sq_dual_dim = 0;
    std::optional<NonGrsCertificate> non_grs;
};

ClassificationReport classify(const LinearCode& c, Budget budget = {});

}  // namespace tgrs
