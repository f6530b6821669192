/**************************************************************************
 * test_field.cpp
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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support/oracles.hpp"
#include "support/reference_data.hpp"
#include "tgrs/field.hpp"

using namespace tgrs;

namespace {

Elem E(std::uint32_t v) { return Elem{v}; }

}  // namespace

TEST(Field, PrimeArithmetic) {
    const Field f7 = Field::prime(7);
    EXPECT_EQ(f7.add(E(3), E(5)), E(1));
    EXPECT_EQ(f7.mul(E(3), E(0)), E(0));
    EXPECT_EQ(f7.sub(E(2), E(5)), E(4));
    EXPECT_EQ(f7.neg(E(0)), E(0));
    EXPECT_EQ(f7.neg(E(3)), E(4));
    const Field f37 = Field::prime(37);
    EXPECT_EQ(f37.mul(E(36), E(36)), E(1));
}

TEST(Field, Inverse) {
    EXPECT_EQ(Field::prime(37).inv(E(2)), E(19));
    EXPECT_EQ(Field::prime(7).inv(E(1)), E(1));
    EXPECT_EQ(Field::prime(7).inv(E(3)), E(5));
    EXPECT_THROW(Field::prime(7).inv(E(0)), DivisionByZero);
    EXPECT_THROW(Field::prime(7).div(E(3), E(0)), DivisionByZero);
}

TEST(Field, Power) {
    const Field f7 = Field::prime(7);
    EXPECT_EQ(f7.pow(E(3), 6), E(1));
    EXPECT_EQ(f7.pow(E(0), 0), E(1));
    EXPECT_EQ(f7.pow(E(0), 5), E(0));
    EXPECT_EQ(Field::prime(37).pow(E(2), 5), E(32));
}

TEST(Field, SquareRoots) {
    const Field f37 = Field::prime(37);
    EXPECT_EQ(f37.sqrt(E(4)), (std::vector<Elem>{E(2), E(35)}));
    EXPECT_EQ(f37.sqrt(E(0)), (std::vector<Elem>{E(0)}));
    // u_1 = 4 with lambda = 1 has v_1 = 2 among its roots.
    const auto r = f37.sqrt(E(4));
    EXPECT_NE(std::find(r.begin(), r.end(), E(2)), r.end());
    EXPECT_TRUE(Field::prime(7).sqrt(E(3)).empty());
    EXPECT_FALSE(Field::prime(7).is_square(E(3)));
    EXPECT_TRUE(Field::prime(7).is_square(E(2)));
    // Characteristic 2: every element is a square with a single root.
    const Field f16 = Field::of_order(16);
    for (auto a : f16.elements()) {
        EXPECT_TRUE(f16.is_square(a));
        EXPECT_EQ(f16.sqrt(a).size(), 1u);
    }
}

TEST(Field, IsSquareMatchesSqrt) {
    for (std::uint32_t q : {5u, 7u, 9u, 13u, 25u, 27u, 37u, 49u, 81u}) {
        const Field f = Field::of_order(q);
        for (auto a : f.elements()) EXPECT_EQ(f.is_square(a), !f.sqrt(a).empty()) << f.name() << " " << a.v;
    }
}

TEST(Field, RootsOfXnMinusMu) {
    const Field f37 = Field::prime(37);
    EXPECT_EQ(roots_of_xn_minus(f37, 18, E(36)), oracle::ints(f37, testdata::gf37_alpha));
    const Field f7 = Field::prime(7);
    EXPECT_EQ(roots_of_xn_minus(f7, 6, E(1)), oracle::ints(f7, {1, 2, 3, 4, 5, 6}));
    const Field f13 = Field::prime(13);
    EXPECT_EQ(roots_of_xn_minus(f13, 4, E(1)), oracle::ints(f13, {1, 5, 8, 12}));
}

TEST(Field, RootCountProperty) {
    // Whenever n | q-1 and ord(mu) | (q-1)/n there are exactly n distinct roots.
    for (std::uint32_t q = 2; q <= 101; ++q) {
        Field f = Field::prime(2);
        try {
            f = Field::of_order(q);
        } catch (const InvalidArgument&) {
            continue;
        }
        for (std::uint32_t n = 1; n <= q - 1; ++n) {
            if ((q - 1) % n) continue;
            for (std::uint32_t x = 1; x < q; ++x) {
                const Elem mu = f.element(x);
                if (((q - 1) / n) % f.multiplicative_order(mu)) continue;
                const auto roots = roots_of_xn_minus(f, n, mu);
                ASSERT_EQ(roots.size(), n) << "q=" << q << " n=" << n << " mu=" << x;
                EXPECT_TRUE(std::is_sorted(roots.begin(), roots.end()));
                EXPECT_EQ(std::set<Elem>(roots.begin(), roots.end()).size(), n);
                for (auto r : roots) EXPECT_NE(r.v, 0u);
            }
        }
    }
}

TEST(Field, Construction) {
    EXPECT_THROW(Field::prime(1), InvalidArgument);
    EXPECT_THROW(Field::prime(15), InvalidArgument);
    EXPECT_THROW(Field::prime(65537), InvalidArgument);
    EXPECT_THROW(Field::of_order(12), InvalidArgument);
    EXPECT_THROW(Field::of_order(32), InvalidArgument);  // degree 5
    // x^2 + 1 is reducible over GF(2); x^2 + x + 1 is not.
    EXPECT_THROW(Field::extension(2, {1, 0, 1}), InvalidArgument);
    EXPECT_NO_THROW(Field::extension(2, {1, 1, 1}));
    // (x^2 + x + 1)^2 = x^4 + x^2 + 1 has no root in GF(2) yet is reducible.
    EXPECT_THROW(Field::extension(2, {1, 0, 1, 0, 1}), InvalidArgument);
    EXPECT_NO_THROW(Field::extension(2, {1, 1, 0, 0, 1}));
    EXPECT_THROW(Field::extension(3, {1, 0, 2}), InvalidArgument);  // not monic
    const Field f = Field::of_order(81);
    EXPECT_EQ(f.characteristic(), 3u);
    EXPECT_EQ(f.degree(), 4u);
    EXPECT_EQ(f.order(), 81u);
    EXPECT_TRUE(Field::is_irreducible(3, f.modulus()));
}

TEST(Field, MismatchedContexts) {
    const FieldElem a(Field::prime(7), 3);
    const FieldElem b(Field::prime(11), 3);
    EXPECT_THROW(a + b, FieldMismatch);
    EXPECT_THROW(a * b, FieldMismatch);
    EXPECT_EQ((a + FieldElem(Field::prime(7), 5)).value(), E(1));
    EXPECT_THROW(FieldElem(Field::prime(7), E(9)), InvalidArgument);
}

TEST(Field, CoefficientEncoding) {
    const Field f = Field::of_order(9);
    for (auto a : f.elements()) EXPECT_EQ(f.from_coeffs(f.coeffs(a)), a);
    // Canonical index equals the base-p reading of the coefficients.
    EXPECT_EQ(f.coeffs(E(5)), (std::vector<std::uint32_t>{2, 1}));
}

TEST(Field, AxiomsOnRandomTriples) {
    std::mt19937_64 rng(7);
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 37u, 49u, 81u, 125u, 343u, 625u, 1331u,
                            2401u, 14641u, 28561u, 65521u}) {
        const Field f = Field::of_order(q);
        std::uniform_int_distribution<std::uint32_t> d(0, q - 1);
        for (int it = 0; it < 300; ++it) {
            const Elem a = f.element(d(rng)), b = f.element(d(rng)), c = f.element(d(rng));
            ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c))) << f.name();
            ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c))) << f.name();
            ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c))) << f.name();
            ASSERT_EQ(f.add(a, b), f.add(b, a));
            ASSERT_EQ(f.mul(a, b), f.mul(b, a));
            ASSERT_EQ(f.add(a, f.neg(a)), f.zero());
            ASSERT_EQ(f.sub(a, b), f.add(a, f.neg(b)));
            if (a.v) {
                ASSERT_EQ(f.mul(a, f.inv(a)), f.one()) << f.name();
                ASSERT_EQ(f.pow(a, q - 1), f.one()) << f.name();
            }
        }
    }
}

TEST(Field, ExtensionMultiplicationMatchesSchoolbook) {
    // Compare against polynomial multiplication reduced by the modulus.
    for (std::uint32_t q : {4u, 8u, 9u, 27u, 49u, 81u}) {
        const Field f = Field::of_order(q);
        const std::uint32_t p = f.characteristic(), m = f.degree();
        const auto& mod = f.modulus();
        for (auto a : f.elements())
            for (auto b : f.elements()) {
                const auto ca = f.coeffs(a), cb = f.coeffs(b);
                std::vector<std::uint32_t> prod(2 * m - 1, 0);
                for (std::uint32_t i = 0; i < m; ++i)
                    for (std::uint32_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
                for (std::uint32_t deg = 2 * m - 2; deg >= m; --deg) {
                    const std::uint32_t lead = prod[deg];
                    for (std::uint32_t i = 0; i <= m; ++i)
                        prod[deg - m + i] = (prod[deg - m + i] + (p - lead) * mod[i]) % p;
                }
                prod.resize(m);
                ASSERT_EQ(f.coeffs(f.mul(a, b)), prod) << f.name();
            }
    }
}
