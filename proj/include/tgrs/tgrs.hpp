/**************************************************************************
 * tgrs.hpp
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
#include <optional>
#include <vector>

#include "tgrs/code.hpp"
#include "tgrs/matrix.hpp"
#include "tgrs/sympoly.hpp"

namespace tgrs {

/**
 * Parameters of a (+)-twisted GRS code: evaluation points alpha, column
 * multipliers v and twist vector eta = (eta_0, ..., eta_ell). The message
 * polynomial's top coefficient f_{k-1} also multiplies
 * sum_t eta_t x^{k+t}.
 *
 * Invariants: 2 <= k <= n, every v_i != 0, eta != 0, and the generator
 * matrix has full row rank k. Trailing zeros in eta are kept (ell is
 * eta.size() - 1). ell may exceed n - k - 1; the parity-check closed forms
 * then do not apply and parity_check() falls back to the kernel of G.
 */
class TgrsParams {
public:
    TgrsParams(EvalSet alpha, std::vector<Elem> v, std::size_t k, std::vector<Elem> eta);

    const Field& field() const noexcept { return alpha_.field(); }
    const EvalSet& alpha() const noexcept { return alpha_; }
    const std::vector<Elem>& v() const noexcept { return v_; }
    const std::vector<Elem>& eta() const noexcept { return eta_; }
    std::size_t n() const noexcept { return alpha_.size(); }
    std::size_t k() const noexcept { return k_; }
    std::size_t ell() const noexcept { return eta_.size() - 1; }

private:
    EvalSet alpha_;
    std::vector<Elem> v_;
    std::size_t k_;
    std::vector<Elem> eta_;
};

enum class DenominatorBranch { NonZero, ZeroWithPositiveEll, ZeroWithEllZero };

const char* to_string(DenominatorBranch b) noexcept;

struct Denominator {
    Elem value;  // 1 + sum_t eta_t S_{t+1}
    DenominatorBranch branch;
    // Largest t with eta_t != 0; decides the branch when value = 0.
    std::size_t effective_ell;
};

Denominator denominator(const TgrsParams& p);

/// k x n; rows v_j alpha_j^i for i < k-1, last row
/// v_j (alpha_j^{k-1} + sum_t eta_t alpha_j^{k+t}).
Matrix generator_matrix(const TgrsParams& p);

/// Requires a nonzero denominator and n-k-ell-1 <= i <= n-k-1.
Elem theta(const TgrsParams& p, std::size_t i);
/// Requires eta_ell != 0 and n-k-ell <= i <= n-k-1.
Elem omega(const TgrsParams& p, std::size_t i);

struct ParityCheck {
    Matrix H;
    DenominatorBranch branch;
    bool kernel_fallback;  // H is the kernel basis of G, not a closed form
};

/**
 * (n-k) x n parity-check matrix. Nonzero denominator: theta-corrected rows.
 * Zero denominator with effective ell >= 1: omega-corrected rows plus the
 * alpha^{n-k} row, built with eta truncated to its last nonzero entry.
 * Zero denominator with effective ell = 0, or effective ell > n - k - 1:
 * kernel basis of G.
 */
ParityCheck parity_check(const TgrsParams& p);

/// LinearCode with G and the closed-form H (validated).
LinearCode build_code(const TgrsParams& p);

/**
 * Combinatorial NMDS test: true iff some k-subset I has eta_criterion = 0
 * and every (k+1)-subset contains a k-subset with nonzero criterion.
 * The budget counts k-subsets and (k+1)-subsets visited.
 */
Bounded<bool> nmds_by_criterion(const TgrsParams& p, Budget budget = {});

enum class SelfOrthogonalCase { SmallK, BoundaryK };

/// No lambda in F_q^* makes every lambda u_i a square.
class NoAdmissibleLambda : public Error {
public:
    using Error::Error;
};

struct SelfOrthogonalConstruction {
    TgrsParams params;
    Elem lambda;
};

/**
 * Self-orthogonal construction on the n roots of x^n - mu. Checks the
 * hypotheses (n | q-1, ord(mu) | (q-1)/n, and the k range of the chosen
 * case), takes the first lambda in canonical order with every lambda u_i a
 * square, and sets v_i to the smaller square root of lambda u_i.
 * Throws InvalidArgument on a hypothesis violation, NoAdmissibleLambda
 * after an exhaustive sweep, and Error if the result is not self-orthogonal.
 */
SelfOrthogonalConstruction construct_self_orthogonal(const Field& field, std::size_t n, std::size_t k,
                                                     std::vector<Elem> eta, Elem mu, SelfOrthogonalCase which);

/// lambda with lambda u_i = v_i^2 for all i, if one exists.
std::optional<Elem> square_scaling(const EvalSet& alpha, const std::vector<Elem>& v);

bool verify_not_self_dual(const TgrsParams& p);
bool verify_not_almost_self_dual(const TgrsParams& p);
std::optional<NonGrsCertificate> verify_non_grs(const TgrsParams& p);

}  // namespace tgrs
