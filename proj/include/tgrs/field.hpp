/**************************************************************************
 * field.hpp
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

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "tgrs/error.hpp"

namespace tgrs {

/**
 * A finite-field element in canonical encoding.
 *
 * For GF(p^m) with polynomial basis 1, x, ..., x^{m-1} the element
 * c_0 + c_1 x + ... + c_{m-1} x^{m-1} is stored as the integer
 * c_0 + c_1 p + ... + c_{m-1} p^{m-1}. The encoding is unique, so equality of
 * values is equality of elements, and integer order is the canonical order
 * used for every sorted output (root sets, square roots, search order).
 *
 * An Elem does not know its field; arithmetic goes through Field. Use
 * FieldElem when the field must travel with the value.
 */
struct Elem {
    std::uint32_t v = 0;

    friend constexpr bool operator==(Elem, Elem) = default;
    friend constexpr auto operator<=>(Elem, Elem) = default;
};

namespace detail {
struct FieldData;
}

/**
 * GF(q), q = p^m, with 1 <= m <= 4 and q <= 2^16.
 *
 * Field is a cheap, immutable handle onto shared lookup tables, so it is
 * passed by value and may be read concurrently. Two handles compare equal
 * when they describe the same field: same p and the same modulus.
 */
class Field {
public:
    static constexpr std::uint32_t max_order = 1u << 16;
    static constexpr std::uint32_t max_degree = 4;

    /// GF(p). Throws InvalidArgument unless p is a prime below 2^16.
    static Field prime(std::uint32_t p);

    /// GF(p^m) with the given monic modulus, lowest degree first (m + 1 entries).
    /// The modulus must be irreducible over GF(p).
    static Field extension(std::uint32_t p, std::vector<std::uint32_t> modulus);

    /// GF(q) for a prime power q; extension fields use default_modulus(p, m).
    static Field of_order(std::uint32_t q);

    /// Smallest monic irreducible polynomial of degree m over GF(p), in
    /// canonical (integer-encoding) order.
    static std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t m);

    static bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic_poly);

    std::uint32_t characteristic() const noexcept;
    std::uint32_t degree() const noexcept;
    std::uint32_t order() const noexcept;
    /// Empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const noexcept;

    Elem zero() const noexcept { return Elem{0}; }
    Elem one() const noexcept { return Elem{1}; }

    /// Element with canonical index `index`; throws unless index < q.
    Elem element(std::uint64_t index) const;
    /// Image of an integer in the prime subfield.
    Elem from_int(std::int64_t value) const noexcept;
    Elem from_coeffs(std::span<const std::uint32_t> coeffs) const;
    std::vector<std::uint32_t> coeffs(Elem a) const;
    bool contains(Elem a) const noexcept { return a.v < order(); }

    Elem add(Elem a, Elem b) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept;
    Elem neg(Elem a) const noexcept;
    Elem mul(Elem a, Elem b) const noexcept;
    /// Throws DivisionByZero for a = 0.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const;
    /// a^e with the convention a^0 = 1, including 0^0.
    Elem pow(Elem a, std::uint64_t e) const noexcept;

    /// Multiplicative order of a nonzero element.
    std::uint32_t multiplicative_order(Elem a) const;
    bool is_square(Elem a) const noexcept;
    /// Every x with x^2 = a, in canonical order (exhaustive search).
    std::vector<Elem> sqrt(Elem a) const;

    /// All q elements in canonical order.
    std::vector<Elem> elements() const;

    std::string to_string(Elem a) const;
    std::string name() const;

    friend bool operator==(const Field& a, const Field& b) noexcept;

private:
    explicit Field(std::shared_ptr<const detail::FieldData> data) : d_(std::move(data)) {}

    std::shared_ptr<const detail::FieldData> d_;
};

/// x with x^n = mu, sorted canonically. Exhaustive over the field.
std::vector<Elem> roots_of_xn_minus(const Field& field, std::uint64_t n, Elem mu);

/**
 * An element bundled with its field. Binary operators throw FieldMismatch
 * when the operands come from different fields.
 */
class FieldElem {
public:
    FieldElem(Field field, Elem value);
    FieldElem(Field field, std::int64_t value) : FieldElem(field, field.from_int(value)) {}

    const Field& field() const noexcept { return field_; }
    Elem value() const noexcept { return value_; }

    FieldElem inv() const { return {field_, field_.inv(value_)}; }
    FieldElem pow(std::uint64_t e) const { return {field_, field_.pow(value_, e)}; }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
    FieldElem operator-() const { return {field_, field_.neg(value_)}; }

    friend bool operator==(const FieldElem& a, const FieldElem& b);

private:
    Field field_;
    Elem value_;
};

}  // namespace tgrs
