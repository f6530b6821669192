/**************************************************************************
 * sympoly.hpp
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
#include <span>
#include <vector>

#include "tgrs/field.hpp"

namespace tgrs {

/// n >= 2 pairwise distinct evaluation points alpha_1..alpha_n.
class EvalSet {
public:
    /// Throws InvalidArgument on repeated points, foreign elements or n < 2.
    EvalSet(Field field, std::vector<Elem> alpha);

    const Field& field() const noexcept { return field_; }
    std::size_t size() const noexcept { return alpha_.size(); }
    const std::vector<Elem>& alpha() const noexcept { return alpha_; }
    Elem operator[](std::size_t i) const noexcept { return alpha_[i]; }

private:
    Field field_;
    std::vector<Elem> alpha_;
};

/// u_i = prod_{j != i} (alpha_i - alpha_j)^{-1}.
std::vector<Elem> compute_u(const EvalSet& e);

/// Complete homogeneous symmetric polynomial S_t(alpha_1..alpha_n);
/// S_t = 0 for t < 0 and S_0 = 1.
Elem complete_symmetric(const EvalSet& e, long t);

/// S_0, ..., S_max_t in one pass of the recurrence (O(n * max_t)).
std::vector<Elem> complete_symmetric_table(const EvalSet& e, std::size_t max_t);

/// sum_i u_i alpha_i^h by direct summation.
Elem power_sum(const EvalSet& e, std::size_t h);
Elem power_sum(const EvalSet& e, std::span<const Elem> u, std::size_t h);

/**
 * Coefficients of prod_{j in I} (x - alpha_j) = sum_j c_j x^{k-j}, highest
 * degree first, with c_0 = 1. coeff(j) returns 0 for j > k.
 */
struct SubsetCoeffs {
    std::vector<std::size_t> subset;
    std::vector<Elem> c;  // c_0..c_k

    std::size_t k() const noexcept { return subset.size(); }
    Elem coeff(long j) const noexcept { return j < 0 || j > static_cast<long>(k()) ? Elem{0} : c[j]; }
};

/// `subset` holds 0-based indices into the evaluation set.
SubsetCoeffs elementary_coeffs(const EvalSet& e, std::span<const std::size_t> subset);

/// prod_{a<b} (alpha_{I_b} - alpha_{I_a}) over the subset in the given order.
Elem vandermonde_product(const EvalSet& e, std::span<const std::size_t> subset);

/**
 * x = A_t^{-1} gamma_t for the unit lower-triangular Toeplitz matrix A_t
 * whose first column is (1, c_1, ..., c_t) and gamma_t = (1, 0, ..., 0).
 * Solved by forward substitution: x_0 = 1, x_i = -sum_{j=1}^{i} c_j x_{i-j}.
 */
std::vector<Elem> toeplitz_first_column_solve(const Field& f, const SubsetCoeffs& c, std::size_t t);

/**
 * Determinant of the k x k matrix whose rows are the powers
 * alpha^0..alpha^{k-1} on the subset, with row h replaced by alpha^{k+t}.
 * Evaluated in closed form as -(beta_t . A_t^{-1} gamma_t) * Vandermonde,
 * beta_t = (c_{k+t-h}, ..., c_{k-h}).
 */
Elem twisted_vdm_det(const EvalSet& e, std::span<const std::size_t> subset, std::size_t h, std::size_t t);

/**
 * 1 - sum_t eta_t beta_t A_t^{-1} gamma_t with beta_t = (c_{t+1}, ..., c_1).
 * It equals det(G restricted to the subset) / Vandermonde(subset) for the
 * all-ones column multiplier, so it vanishes exactly when those k columns
 * of the twisted generator matrix are dependent.
 */
Elem eta_criterion(const EvalSet& e, std::span<const std::size_t> subset, std::span<const Elem> eta);

}  // namespace tgrs
