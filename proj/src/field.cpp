/**************************************************************************
 * field.cpp
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

#include "tgrs/field.hpp"

#include <algorithm>
#include <sstream>

namespace tgrs {

namespace detail {

struct FieldData {
    std::uint32_t p = 0;
    std::uint32_t m = 1;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;  // empty for m = 1
    std::uint32_t pp[Field::max_degree + 1] = {};  // powers of p

    // Extension fields only: exp_table has 2(q-1) entries so that
    // exp[log a + log b] needs no reduction.
    std::vector<std::uint32_t> exp_table;
    std::vector<std::uint32_t> log_table;
};

}  // namespace detail

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

using Poly = std::vector<std::uint32_t>;  // lowest degree first

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::uint64_t r = 1, b = a % p;
    for (std::uint32_t e = p - 2; e; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return static_cast<std::uint32_t>(r);
}

// Remainder of a modulo b over GF(p); b nonzero.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint32_t lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t f = std::uint64_t(a.back()) * lead_inv % p;
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i)
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - f * b[i] % p) % p);
        trim(a);
    }
    return a;
}

std::uint32_t ipow(std::uint32_t b, std::uint32_t e) {
    std::uint32_t r = 1;
    while (e--) r *= b;
    return r;
}

// Monic polynomial of degree d whose low coefficients encode `index`.
Poly monic_from_index(std::uint32_t p, std::uint32_t d, std::uint32_t index) {
    Poly f(d + 1, 0);
    for (std::uint32_t i = 0; i < d; ++i) {
        f[i] = index % p;
        index /= p;
    }
    f[d] = 1;
    return f;
}

void build_tables(detail::FieldData& d) {
    const std::uint32_t q = d.q, p = d.p, m = d.m;
    auto to_poly = [&](std::uint32_t v) {
        Poly a(m, 0);
        for (std::uint32_t i = 0; i < m; ++i) {
            a[i] = v % p;
            v /= p;
        }
        return a;
    };
    auto from_poly = [&](const Poly& a) {
        std::uint32_t v = 0;
        for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
        return v;
    };
    auto mul_slow = [&](std::uint32_t x, std::uint32_t y) {
        const Poly a = to_poly(x), b = to_poly(y);
        Poly c(2 * m - 1, 0);
        for (std::uint32_t i = 0; i < m; ++i)
            for (std::uint32_t j = 0; j < m; ++j)
                c[i + j] = static_cast<std::uint32_t>((c[i + j] + std::uint64_t(a[i]) * b[j]) % p);
        return from_poly(poly_mod(std::move(c), d.modulus, p));
    };

    d.exp_table.assign(2 * (q - 1), 0);
    d.log_table.assign(q, 0);
    for (std::uint32_t g = 2; g < q; ++g) {
        std::uint32_t x = 1, k = 0;
        bool primitive = true;
        for (; k < q - 1; ++k) {
            if (k > 0 && x == 1) {
                primitive = false;
                break;
            }
            d.exp_table[k] = x;
            x = mul_slow(x, g);
        }
        if (!primitive || x != 1) continue;
        for (std::uint32_t i = 0; i < q - 1; ++i) {
            d.exp_table[i + q - 1] = d.exp_table[i];
            d.log_table[d.exp_table[i]] = i;
        }
        return;
    }
    throw InvalidArgument("modulus does not define a field (no primitive element found)");
}

}  // namespace

Field Field::prime(std::uint32_t p) {
    if (!is_prime(p) || p >= max_order)
        throw InvalidArgument("GF(p) needs a prime p < 65536, got " + std::to_string(p));
    auto d = std::make_shared<detail::FieldData>();
    d->p = p;
    d->m = 1;
    d->q = p;
    d->pp[0] = 1;
    d->pp[1] = p;
    return Field(std::move(d));
}

bool Field::is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic_poly) {
    if (monic_poly.size() < 2 || monic_poly.back() != 1) return false;
    const std::uint32_t m = static_cast<std::uint32_t>(monic_poly.size() - 1);
    if (m == 1) return true;
    const Poly f(monic_poly.begin(), monic_poly.end());
    // A reducible polynomial of degree m has a monic factor of degree <= m/2.
    for (std::uint32_t deg = 1; deg <= m / 2; ++deg) {
        const std::uint32_t count = ipow(p, deg);
        for (std::uint32_t idx = 0; idx < count; ++idx)
            if (poly_mod(f, monic_from_index(p, deg, idx), p).empty()) return false;
    }
    return true;
}

std::vector<std::uint32_t> Field::default_modulus(std::uint32_t p, std::uint32_t m) {
    if (!is_prime(p)) throw InvalidArgument("characteristic must be prime");
    if (m < 1 || m > max_degree) throw InvalidArgument("extension degree must be in [1, 4]");
    const std::uint32_t count = ipow(p, m);
    for (std::uint32_t idx = 0; idx < count; ++idx) {
        Poly f = monic_from_index(p, m, idx);
        if (is_irreducible(p, f)) return f;
    }
    throw InvalidArgument("no irreducible polynomial found");  // unreachable
}

Field Field::extension(std::uint32_t p, std::vector<std::uint32_t> modulus) {
    if (!is_prime(p)) throw InvalidArgument("characteristic " + std::to_string(p) + " is not prime");
    if (modulus.size() < 2) throw InvalidArgument("modulus must have degree >= 1");
    const auto m = static_cast<std::uint32_t>(modulus.size() - 1);
    if (m == 1) return prime(p);
    if (m > max_degree) throw InvalidArgument("extension degree " + std::to_string(m) + " exceeds 4");
    for (auto c : modulus)
        if (c >= p) throw InvalidArgument("modulus coefficient out of range [0, p)");
    if (modulus.back() != 1) throw InvalidArgument("modulus must be monic");
    const std::uint64_t q = std::uint64_t(ipow(p, m));
    if (q > max_order) throw InvalidArgument("field order exceeds 2^16");
    if (!is_irreducible(p, modulus)) throw InvalidArgument("modulus is reducible over GF(p)");

    auto d = std::make_shared<detail::FieldData>();
    d->p = p;
    d->m = m;
    d->q = static_cast<std::uint32_t>(q);
    d->modulus = std::move(modulus);
    for (std::uint32_t i = 0; i <= m; ++i) d->pp[i] = ipow(p, i);
    build_tables(*d);
    return Field(std::move(d));
}

Field Field::of_order(std::uint32_t q) {
    if (q < 2 || q > max_order) throw InvalidArgument("field order must be in [2, 65536]");
    for (std::uint32_t p = 2; p <= q; ++p) {
        if (q % p != 0) continue;
        if (!is_prime(p)) break;
        std::uint32_t m = 0, r = q;
        while (r % p == 0) {
            r /= p;
            ++m;
        }
        if (r != 1) break;
        return m == 1 ? prime(p) : extension(p, default_modulus(p, m));
    }
    throw InvalidArgument(std::to_string(q) + " is not a prime power");
}

std::uint32_t Field::characteristic() const noexcept { return d_->p; }
std::uint32_t Field::degree() const noexcept { return d_->m; }
std::uint32_t Field::order() const noexcept { return d_->q; }
const std::vector<std::uint32_t>& Field::modulus() const noexcept { return d_->modulus; }

Elem Field::element(std::uint64_t index) const {
    if (index >= d_->q)
        throw InvalidArgument("element index " + std::to_string(index) + " out of range for " + name());
    return Elem{static_cast<std::uint32_t>(index)};
}

Elem Field::from_int(std::int64_t value) const noexcept {
    const std::int64_t p = d_->p;
    std::int64_t r = value % p;
    if (r < 0) r += p;
    return Elem{static_cast<std::uint32_t>(r)};
}

Elem Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() != d_->m)
        throw InvalidArgument("expected " + std::to_string(d_->m) + " coefficients");
    std::uint32_t v = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] >= d_->p) throw InvalidArgument("coefficient out of range [0, p)");
        v = v * d_->p + coeffs[i];
    }
    return Elem{v};
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const {
    std::vector<std::uint32_t> c(d_->m);
    std::uint32_t v = a.v;
    for (auto& x : c) {
        x = v % d_->p;
        v /= d_->p;
    }
    return c;
}

Elem Field::add(Elem a, Elem b) const noexcept {
    const auto p = d_->p;
    if (d_->m == 1) {
        const std::uint32_t s = a.v + b.v;
        return Elem{s >= p ? s - p : s};
    }
    std::uint32_t r = 0;
    for (std::uint32_t i = 0; i < d_->m; ++i) {
        const std::uint32_t x = a.v / d_->pp[i] % p, y = b.v / d_->pp[i] % p;
        const std::uint32_t s = x + y;
        r += (s >= p ? s - p : s) * d_->pp[i];
    }
    return Elem{r};
}

Elem Field::neg(Elem a) const noexcept {
    const auto p = d_->p;
    if (d_->m == 1) return Elem{a.v == 0 ? 0 : p - a.v};
    std::uint32_t r = 0;
    for (std::uint32_t i = 0; i < d_->m; ++i) {
        const std::uint32_t x = a.v / d_->pp[i] % p;
        r += (x == 0 ? 0 : p - x) * d_->pp[i];
    }
    return Elem{r};
}

Elem Field::sub(Elem a, Elem b) const noexcept {
    if (d_->m == 1) {
        const auto p = d_->p;
        return Elem{a.v >= b.v ? a.v - b.v : a.v + p - b.v};
    }
    return add(a, neg(b));
}

Elem Field::mul(Elem a, Elem b) const noexcept {
    if (d_->m == 1) return Elem{static_cast<std::uint32_t>(std::uint64_t(a.v) * b.v % d_->p)};
    if (a.v == 0 || b.v == 0) return Elem{0};
    return Elem{d_->exp_table[d_->log_table[a.v] + d_->log_table[b.v]]};
}

Elem Field::inv(Elem a) const {
    if (a.v == 0) throw DivisionByZero("inverse of zero in " + name());
    if (d_->m == 1) return Elem{inv_mod(a.v, d_->p)};
    const std::uint32_t l = d_->log_table[a.v];
    return Elem{d_->exp_table[l == 0 ? 0 : d_->q - 1 - l]};
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
    Elem r = one();
    Elem b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

std::uint32_t Field::multiplicative_order(Elem a) const {
    if (a.v == 0) throw DivisionByZero("zero has no multiplicative order");
    const std::uint32_t n = d_->q - 1;
    std::uint32_t best = n;
    for (std::uint32_t dvs = 1; dvs <= n; ++dvs)
        if (n % dvs == 0 && pow(a, dvs) == one()) {
            best = dvs;
            break;
        }
    return best;
}

bool Field::is_square(Elem a) const noexcept {
    if (a.v == 0 || d_->p == 2) return true;
    return pow(a, (d_->q - 1) / 2) == one();
}

std::vector<Elem> Field::sqrt(Elem a) const {
    std::vector<Elem> roots;
    for (std::uint32_t x = 0; x < d_->q; ++x)
        if (mul(Elem{x}, Elem{x}) == a) roots.push_back(Elem{x});
    return roots;
}

std::vector<Elem> Field::elements() const {
    std::vector<Elem> all(d_->q);
    for (std::uint32_t i = 0; i < d_->q; ++i) all[i] = Elem{i};
    return all;
}

std::string Field::to_string(Elem a) const {
    if (d_->m == 1) return std::to_string(a.v);
    std::ostringstream os;
    os << '[';
    const auto c = coeffs(a);
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ']';
    return os.str();
}

std::string Field::name() const {
    std::string s = "GF(" + std::to_string(d_->p);
    if (d_->m > 1) s += "^" + std::to_string(d_->m);
    return s + ")";
}

bool operator==(const Field& a, const Field& b) noexcept {
    if (a.d_ == b.d_) return true;
    return a.d_->p == b.d_->p && a.d_->m == b.d_->m && a.d_->modulus == b.d_->modulus;
}

std::vector<Elem> roots_of_xn_minus(const Field& field, std::uint64_t n, Elem mu) {
    std::vector<Elem> roots;
    for (std::uint32_t x = 0; x < field.order(); ++x)
        if (field.pow(Elem{x}, n) == mu) roots.push_back(Elem{x});
    return roots;
}

FieldElem::FieldElem(Field field, Elem value) : field_(std::move(field)), value_(value) {
    if (!field_.contains(value_))
        throw InvalidArgument("value " + std::to_string(value_.v) + " is not an element of " + field_.name());
}

namespace {
const Field& common_field(const FieldElem& a, const FieldElem& b) {
    if (!(a.field() == b.field()))
        throw FieldMismatch("operands belong to " + a.field().name() + " and " + b.field().name());
    return a.field();
}
}  // namespace

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    const Field& f = common_field(a, b);
    return {f, f.add(a.value(), b.value())};
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    const Field& f = common_field(a, b);
    return {f, f.sub(a.value(), b.value())};
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    const Field& f = common_field(a, b);
    return {f, f.mul(a.value(), b.value())};
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) {
    const Field& f = common_field(a, b);
    return {f, f.div(a.value(), b.value())};
}

bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.field() == b.field() && a.value() == b.value();
}

}  // namespace tgrs
