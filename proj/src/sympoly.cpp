/**************************************************************************
 * sympoly.cpp
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

#include "tgrs/sympoly.hpp"

#include <algorithm>

namespace tgrs {

EvalSet::EvalSet(Field field, std::vector<Elem> alpha) : field_(std::move(field)), alpha_(std::move(alpha)) {
    if (alpha_.size() < 2) throw InvalidArgument("an evaluation set needs at least 2 points");
    for (std::size_t i = 0; i < alpha_.size(); ++i) {
        if (!field_.contains(alpha_[i]))
            throw InvalidArgument("alpha[" + std::to_string(i) + "] is not an element of " + field_.name());
        for (std::size_t j = 0; j < i; ++j)
            if (alpha_[i] == alpha_[j])
                throw InvalidArgument("alpha[" + std::to_string(i) + "] repeats alpha[" + std::to_string(j) +
                                      "]; evaluation points must be distinct");
    }
}

std::vector<Elem> compute_u(const EvalSet& e) {
    const Field& f = e.field();
    std::vector<Elem> u(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        Elem prod = f.one();
        for (std::size_t j = 0; j < e.size(); ++j)
            if (j != i) prod = f.mul(prod, f.sub(e[i], e[j]));
        u[i] = f.inv(prod);
    }
    return u;
}

std::vector<Elem> complete_symmetric_table(const EvalSet& e, std::size_t max_t) {
    const Field& f = e.field();
    // s[t] holds S_t(x_1..x_j) after processing j variables:
    // S_t(x_1..x_j) = S_t(x_1..x_{j-1}) + x_j * S_{t-1}(x_1..x_j).
    std::vector<Elem> s(max_t + 1, f.zero());
    s[0] = f.one();
    for (std::size_t j = 0; j < e.size(); ++j)
        for (std::size_t t = 1; t <= max_t; ++t) s[t] = f.add(s[t], f.mul(e[j], s[t - 1]));
    return s;
}

Elem complete_symmetric(const EvalSet& e, long t) {
    if (t < 0) return e.field().zero();
    return complete_symmetric_table(e, static_cast<std::size_t>(t)).back();
}

Elem power_sum(const EvalSet& e, std::span<const Elem> u, std::size_t h) {
    const Field& f = e.field();
    Elem sum = f.zero();
    for (std::size_t i = 0; i < e.size(); ++i) sum = f.add(sum, f.mul(u[i], f.pow(e[i], h)));
    return sum;
}

Elem power_sum(const EvalSet& e, std::size_t h) { return power_sum(e, compute_u(e), h); }

namespace {

void check_subset(const EvalSet& e, std::span<const std::size_t> subset) {
    if (subset.empty()) throw InvalidArgument("subset must be nonempty");
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] >= e.size()) throw InvalidArgument("subset index out of range");
        for (std::size_t j = 0; j < i; ++j)
            if (subset[i] == subset[j]) throw InvalidArgument("subset has repeated index");
    }
}

}  // namespace

SubsetCoeffs elementary_coeffs(const EvalSet& e, std::span<const std::size_t> subset) {
    check_subset(e, subset);
    const Field& f = e.field();
    SubsetCoeffs out{{subset.begin(), subset.end()}, {f.one()}};
    // Multiply by (x - a) one factor at a time; c is highest degree first.
    for (auto idx : subset) {
        const Elem a = e[idx];
        out.c.push_back(f.zero());
        for (std::size_t j = out.c.size() - 1; j >= 1; --j) out.c[j] = f.sub(out.c[j], f.mul(a, out.c[j - 1]));
    }
    return out;
}

Elem vandermonde_product(const EvalSet& e, std::span<const std::size_t> subset) {
    const Field& f = e.field();
    Elem prod = f.one();
    for (std::size_t b = 0; b < subset.size(); ++b)
        for (std::size_t a = 0; a < b; ++a) prod = f.mul(prod, f.sub(e[subset[b]], e[subset[a]]));
    return prod;
}

std::vector<Elem> toeplitz_first_column_solve(const Field& f, const SubsetCoeffs& c, std::size_t t) {
    std::vector<Elem> x(t + 1, f.zero());
    x[0] = f.one();
    for (std::size_t i = 1; i <= t; ++i) {
        Elem acc = f.zero();
        for (std::size_t j = 1; j <= i; ++j) acc = f.add(acc, f.mul(c.coeff(static_cast<long>(j)), x[i - j]));
        x[i] = f.neg(acc);
    }
    return x;
}

Elem twisted_vdm_det(const EvalSet& e, std::span<const std::size_t> subset, std::size_t h, std::size_t t) {
    const std::size_t k = subset.size();
    if (k < 2) throw InvalidArgument("twisted Vandermonde determinant needs a subset of size >= 2");
    if (h >= k) throw InvalidArgument("replaced row h must lie in [0, k-1]");
    const Field& f = e.field();
    const SubsetCoeffs c = elementary_coeffs(e, subset);
    const std::vector<Elem> x = toeplitz_first_column_solve(f, c, t);
    // beta_t[i] = c_{k+t-h-i}
    Elem dot = f.zero();
    for (std::size_t i = 0; i <= t; ++i)
        dot = f.add(dot, f.mul(c.coeff(static_cast<long>(k + t - h - i)), x[i]));
    return f.neg(f.mul(dot, vandermonde_product(e, subset)));
}

Elem eta_criterion(const EvalSet& e, std::span<const std::size_t> subset, std::span<const Elem> eta) {
    const Field& f = e.field();
    if (eta.empty() || std::all_of(eta.begin(), eta.end(), [](Elem x) { return x.v == 0; }))
        throw InvalidArgument("twist vector eta must be nonzero");
    const SubsetCoeffs c = elementary_coeffs(e, subset);
    const std::size_t ell = eta.size() - 1;
    const std::vector<Elem> x = toeplitz_first_column_solve(f, c, ell);
    Elem sum = f.zero();
    for (std::size_t t = 0; t <= ell; ++t) {
        if (eta[t].v == 0) continue;
        // beta_t[i] = c_{t+1-i}
        Elem dot = f.zero();
        for (std::size_t i = 0; i <= t; ++i) dot = f.add(dot, f.mul(c.coeff(static_cast<long>(t + 1 - i)), x[i]));
        sum = f.add(sum, f.mul(eta[t], dot));
    }
    return f.sub(f.one(), sum);
}

}  // namespace tgrs
