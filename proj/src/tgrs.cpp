/**************************************************************************
 * tgrs.cpp
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

#include "tgrs/tgrs.hpp"

#include <algorithm>

#include "tgrs/combinations.hpp"

namespace tgrs {

TgrsParams::TgrsParams(EvalSet alpha, std::vector<Elem> v, std::size_t k, std::vector<Elem> eta)
    : alpha_(std::move(alpha)), v_(std::move(v)), k_(k), eta_(std::move(eta)) {
    const Field& f = field();
    const std::size_t n = alpha_.size();
    if (v_.size() != n)
        throw InvalidArgument("v has " + std::to_string(v_.size()) + " entries, expected n = " + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (!f.contains(v_[i])) throw InvalidArgument("v[" + std::to_string(i) + "] is not a field element");
        if (v_[i].v == 0) throw InvalidArgument("v[" + std::to_string(i) + "] is zero");
    }
    if (k_ < 2 || k_ > n) throw InvalidArgument("k must satisfy 2 <= k <= n");
    if (eta_.empty()) throw InvalidArgument("eta must have at least one entry");
    for (std::size_t t = 0; t < eta_.size(); ++t)
        if (!f.contains(eta_[t])) throw InvalidArgument("eta[" + std::to_string(t) + "] is not a field element");
    if (std::all_of(eta_.begin(), eta_.end(), [](Elem x) { return x.v == 0; }))
        throw InvalidArgument("eta must be nonzero");
    // Long twists can wrap around to a dependent last row.
    if (k_ + eta_.size() > n && rank(generator_matrix(*this)) != k_)
        throw InvalidArgument("generator matrix is rank deficient for ell = " + std::to_string(ell()));
}

const char* to_string(DenominatorBranch b) noexcept {
    switch (b) {
    case DenominatorBranch::NonZero: return "nonzero";
    case DenominatorBranch::ZeroWithPositiveEll: return "zero_positive_ell";
    case DenominatorBranch::ZeroWithEllZero: return "zero_ell_zero";
    }
    return "";
}

namespace {

std::size_t last_nonzero(const std::vector<Elem>& eta) {
    std::size_t t = eta.size() - 1;
    while (eta[t].v == 0) --t;
    return t;
}

Elem s_at(const std::vector<Elem>& s, long idx) { return idx < 0 ? Elem{0} : s[static_cast<std::size_t>(idx)]; }

/// sum_{t=0}^{ell} eta_t S_{k+t+i-n+1}
Elem twisted_s_sum(const TgrsParams& p, const std::vector<Elem>& s, std::size_t ell, std::size_t i) {
    const Field& f = p.field();
    Elem acc = f.zero();
    const long base = static_cast<long>(p.k() + i + 1) - static_cast<long>(p.n());
    for (std::size_t t = 0; t <= ell; ++t) acc = f.add(acc, f.mul(p.eta()[t], s_at(s, base + static_cast<long>(t))));
    return acc;
}

Elem omega_impl(const TgrsParams& p, const std::vector<Elem>& s, std::size_t ell, std::size_t i) {
    return p.field().div(twisted_s_sum(p, s, ell, i), p.eta()[ell]);
}

// Row (u_j / v_j) (alpha_j^i - c alpha_j^e); c = 0 gives a pure power row.
void fill_row(Matrix& H, std::size_t r, const TgrsParams& p, const std::vector<Elem>& w, std::size_t i, Elem c,
              std::size_t e) {
    const Field& f = p.field();
    for (std::size_t j = 0; j < p.n(); ++j) {
        const Elem a = p.alpha()[j];
        Elem x = f.pow(a, i);
        if (c.v != 0) x = f.sub(x, f.mul(c, f.pow(a, e)));
        H(r, j) = f.mul(w[j], x);
    }
}

}  // namespace

Denominator denominator(const TgrsParams& p) {
    const Field& f = p.field();
    const auto s = complete_symmetric_table(p.alpha(), p.ell() + 1);
    Elem value = f.one();
    for (std::size_t t = 0; t <= p.ell(); ++t) value = f.add(value, f.mul(p.eta()[t], s[t + 1]));
    const std::size_t eff = last_nonzero(p.eta());
    DenominatorBranch b = DenominatorBranch::NonZero;
    if (value.v == 0) b = eff >= 1 ? DenominatorBranch::ZeroWithPositiveEll : DenominatorBranch::ZeroWithEllZero;
    return {value, b, eff};
}

Matrix generator_matrix(const TgrsParams& p) {
    const Field& f = p.field();
    const std::size_t n = p.n(), k = p.k();
    Matrix G(f, k, n);
    for (std::size_t j = 0; j < n; ++j) {
        const Elem a = p.alpha()[j];
        Elem power = f.one();
        for (std::size_t i = 0; i + 1 < k; ++i) {
            G(i, j) = f.mul(p.v()[j], power);
            power = f.mul(power, a);
        }
        // power = a^{k-1}
        Elem last = power;
        Elem ap = f.mul(power, a);
        for (std::size_t t = 0; t <= p.ell(); ++t) {
            last = f.add(last, f.mul(p.eta()[t], ap));
            ap = f.mul(ap, a);
        }
        G(k - 1, j) = f.mul(p.v()[j], last);
    }
    return G;
}

Elem theta(const TgrsParams& p, std::size_t i) {
    const std::size_t n = p.n(), k = p.k(), ell = p.ell();
    if (i + k + ell + 1 < n || i + k + 1 > n) throw InvalidArgument("theta index outside [n-k-ell-1, n-k-1]");
    const Denominator d = denominator(p);
    if (d.value.v == 0) throw DivisionByZero("theta needs 1 + sum_t eta_t S_{t+1} != 0");
    const auto s = complete_symmetric_table(p.alpha(), ell + 1);
    return p.field().div(twisted_s_sum(p, s, ell, i), d.value);
}

Elem omega(const TgrsParams& p, std::size_t i) {
    const std::size_t n = p.n(), k = p.k(), ell = p.ell();
    if (i + k + ell < n || i + k + 1 > n) throw InvalidArgument("omega index outside [n-k-ell, n-k-1]");
    if (p.eta()[ell].v == 0) throw DivisionByZero("omega needs eta_ell != 0");
    const auto s = complete_symmetric_table(p.alpha(), ell + 1);
    return omega_impl(p, s, ell, i);
}

ParityCheck parity_check(const TgrsParams& p) {
    const Field& f = p.field();
    const std::size_t n = p.n(), k = p.k(), r = n - k;
    const Denominator d = denominator(p);
    if (d.branch == DenominatorBranch::ZeroWithEllZero || d.effective_ell + 1 > r)
        return {kernel_basis(generator_matrix(p)), d.branch, true};

    const std::vector<Elem> u = compute_u(p.alpha());
    std::vector<Elem> w(n);
    for (std::size_t j = 0; j < n; ++j) w[j] = f.div(u[j], p.v()[j]);
    const auto s = complete_symmetric_table(p.alpha(), p.ell() + 1);
    Matrix H(f, r, n);

    if (d.branch == DenominatorBranch::NonZero) {
        // Entries of eta past effective_ell add nothing to theta.
        const std::size_t ell = d.effective_ell;
        const Elem dinv = f.inv(d.value);
        for (std::size_t i = 0; i < r; ++i) {
            const Elem th = i + ell + 2 <= r ? f.zero() : f.mul(twisted_s_sum(p, s, ell, i), dinv);
            fill_row(H, i, p, w, i, th, r);
        }
        return {H, d.branch, false};
    }

    const std::size_t ell = d.effective_ell;
    // Rows 0 .. r-ell-2 pure, r-ell .. r-1 omega-corrected, last alpha^{r}.
    std::size_t row = 0;
    for (std::size_t i = 0; i + ell + 2 <= r; ++i) fill_row(H, row++, p, w, i, f.zero(), 0);
    for (std::size_t i = r - ell; i < r; ++i) fill_row(H, row++, p, w, i, omega_impl(p, s, ell, i), r - ell - 1);
    fill_row(H, row, p, w, r, f.zero(), 0);
    return {H, d.branch, false};
}

LinearCode build_code(const TgrsParams& p) { return LinearCode(generator_matrix(p), parity_check(p).H); }

Bounded<bool> nmds_by_criterion(const TgrsParams& p, Budget budget) {
    const std::size_t n = p.n(), k = p.k();
    Bounded<bool> out;
    std::vector<bool> nonzero(binomial(n, k));
    bool some_zero = false;
    for (Combinations c(n, k); c.valid(); c.next()) {
        if (out.subsets_visited >= budget.max_subsets) return out;
        ++out.subsets_visited;
        const bool nz = eta_criterion(p.alpha(), c.indices(), p.eta()).v != 0;
        nonzero[colex_rank(c.indices())] = nz;
        some_zero = some_zero || !nz;
    }
    if (!some_zero) {
        out.value = false;
        return out;
    }
    std::vector<std::size_t> sub(k);
    for (Combinations c(n, k + 1); c.valid(); c.next()) {
        if (out.subsets_visited >= budget.max_subsets) return out;
        ++out.subsets_visited;
        const auto J = c.indices();
        bool found = false;
        for (std::size_t drop = 0; drop <= k && !found; ++drop) {
            std::size_t m = 0;
            for (std::size_t a = 0; a <= k; ++a)
                if (a != drop) sub[m++] = J[a];
            found = nonzero[colex_rank(sub)];
        }
        if (!found) {
            out.value = false;
            return out;
        }
    }
    out.value = true;
    return out;
}

SelfOrthogonalConstruction construct_self_orthogonal(const Field& field, std::size_t n, std::size_t k,
                                                     std::vector<Elem> eta, Elem mu, SelfOrthogonalCase which) {
    const std::uint32_t q = field.order();
    if (eta.empty()) throw InvalidArgument("eta must have at least one entry");
    const std::size_t ell = eta.size() - 1;
    if (n < 2 || (q - 1) % n != 0) throw InvalidArgument("n must divide q - 1");
    if (!field.contains(mu) || mu.v == 0) throw InvalidArgument("mu must be a nonzero field element");
    if (((q - 1) / n) % field.multiplicative_order(mu) != 0) throw InvalidArgument("ord(mu) must divide (q-1)/n");
    if (which == SelfOrthogonalCase::SmallK) {
        if (2 * k + 2 * ell + 2 > n) throw InvalidArgument("small-k case needs k <= (n - 2 ell - 2) / 2");
    } else if (k < 2 || 2 * k + ell + 1 != n) {
        throw InvalidArgument("boundary case needs 2 <= k = (n - ell - 1) / 2");
    }

    std::vector<Elem> roots = roots_of_xn_minus(field, n, mu);
    if (roots.size() != n) throw Error("x^n - mu did not split into n distinct roots");
    EvalSet alpha(field, std::move(roots));
    const std::vector<Elem> u = compute_u(alpha);

    std::optional<Elem> lambda;
    for (std::uint32_t x = 1; x < q && !lambda; ++x) {
        const Elem l = field.element(x);
        if (std::all_of(u.begin(), u.end(), [&](Elem ui) { return field.is_square(field.mul(l, ui)); })) lambda = l;
    }
    if (!lambda) throw NoAdmissibleLambda("no lambda in F_q^* makes every lambda u_i a square");

    std::vector<Elem> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = field.sqrt(field.mul(*lambda, u[i])).front();
    TgrsParams params(std::move(alpha), std::move(v), k, std::move(eta));
    if (which == SelfOrthogonalCase::BoundaryK && denominator(params).value.v == 0)
        throw InvalidArgument("boundary case needs 1 + sum_t eta_t S_{t+1} != 0");

    const Matrix G = generator_matrix(params);
    if (!(G * G.transpose()).is_zero()) throw Error("constructed code is not self-orthogonal");
    return {std::move(params), *lambda};
}

std::optional<Elem> square_scaling(const EvalSet& alpha, const std::vector<Elem>& v) {
    const Field& f = alpha.field();
    if (v.size() != alpha.size()) throw DimensionMismatch("v and alpha differ in length");
    const std::vector<Elem> u = compute_u(alpha);
    const Elem lambda = f.div(f.mul(v[0], v[0]), u[0]);
    for (std::size_t i = 0; i < u.size(); ++i)
        if (f.mul(lambda, u[i]) != f.mul(v[i], v[i])) return std::nullopt;
    return lambda;
}

bool verify_not_self_dual(const TgrsParams& p) {
    if (p.n() != 2 * p.k()) return true;
    const Matrix G = generator_matrix(p);
    return !same_row_space(G, parity_check(p).H);
}

bool verify_not_almost_self_dual(const TgrsParams& p) {
    if (p.n() != 2 * p.k() + 1) return true;
    const Matrix G = generator_matrix(p);
    return !(G * G.transpose()).is_zero();
}

std::optional<NonGrsCertificate> verify_non_grs(const TgrsParams& p) { return non_grs_witness(build_code(p)); }

}  // namespace tgrs
