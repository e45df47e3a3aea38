/*
   Copyright 2026 hermw authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <random>

#include "hermw/poly_gcd.hpp"
#include "oracles.hpp"

using namespace hermw;

namespace {

const IntPolynomial x = oracle::poly({0, 1});

}  // namespace

TEST_CASE("content and primitive part") {
    CHECK(content(oracle::poly({4, 0, 8})) == 4);
    CHECK(content(oracle::poly({-4, 0, -8})) == 4);
    CHECK(content(IntPolynomial()) == 0);
    CHECK(primitive_part(oracle::poly({-4, 0, -8})) == oracle::poly({-1, 0, -2}));
    CHECK(primitive_part_positive(oracle::poly({-4, 0, -8})) == oracle::poly({1, 0, 2}));
}

TEST_CASE("divide_exact recovers exact quotients and rejects inexact ones") {
    const IntPolynomial a = oracle::poly({-2, 0, 4}) * oracle::poly({3, 5});
    CHECK(divide_exact(a, oracle::poly({3, 5})) == oracle::poly({-2, 0, 4}));
    CHECK_THROWS_AS(divide_exact(oracle::poly({1, 1}), IntPolynomial()), std::domain_error);
    CHECK_THROWS_AS(divide_exact(oracle::poly({1, 0, 1}), oracle::poly({1, 1})), std::logic_error);
}

TEST_CASE("gcd on the worked examples") {
    // shared factor x^2
    CHECK(gcd(x * x * oracle::poly({-1, 1}), x * x * oracle::poly({1, 1})) == x * x);
    CHECK(gcd(x * x, x * x * x) == x * x);
    // gcd with zero is the positive primitive part
    CHECK(gcd(oracle::poly({-4, 0, -8}), IntPolynomial()) == oracle::poly({1, 0, 2}));
    CHECK(gcd(IntPolynomial(), oracle::poly({0, 6})) == x);
    // coprime pair reports the constant 1 (contents dropped)
    CHECK(gcd(oracle::poly({4, 0, 8}), oracle::poly({0, 16})) == IntPolynomial(Integer(1)));
    CHECK_THROWS_AS(gcd(IntPolynomial(), IntPolynomial()), std::domain_error);
}

TEST_CASE("gcd divides both inputs exactly on the random family") {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 300; ++i) {
        IntPolynomial p = oracle::random_polynomial(rng, 8, 50);
        IntPolynomial q = oracle::random_polynomial(rng, 8, 50);
        if (i % 2 == 0) {  // inject a common factor half the time
            const IntPolynomial common = oracle::random_polynomial(rng, 3, 9);
            p *= common;
            q *= common;
        }
        const IntPolynomial g = gcd(p, q);
        CHECK(!g.is_zero());
        CHECK(sgn(g.leading()) > 0);
        CHECK(content(g) == 1);
        CHECK(divide_exact(p, g) * g == p);
        CHECK(divide_exact(q, g) * g == q);
    }
}

TEST_CASE("resultant sign convention and worked examples") {
    CHECK(resultant(oracle::poly({-1, 1}), oracle::poly({1, 1})) == 2);
    CHECK(resultant(oracle::poly({-2, 0, 4}), oracle::poly({-2, 0, 4})) == 0);
    CHECK(resultant(oracle::poly({0, 2}), oracle::poly({-2, 0, 4})) != 0);
    CHECK(resultant(oracle::poly({0, 2}), oracle::poly({-2, 0, 4})) ==
          oracle::sylvester_resultant(oracle::poly({0, 2}), oracle::poly({-2, 0, 4})));
    // constants: res(c, q) = c^deg q, res of two constants is 1
    CHECK(resultant(oracle::poly({3}), oracle::poly({1, 0, 1})) == 9);
    CHECK(resultant(oracle::poly({5}), oracle::poly({7})) == 1);
    CHECK_THROWS_AS(resultant(IntPolynomial(), x), std::domain_error);
}

TEST_CASE("resultant agrees with the cofactor Sylvester oracle, including sign") {
    std::mt19937_64 rng(202);
    for (int i = 0; i < 60; ++i) {
        const IntPolynomial p = oracle::random_polynomial(rng, 4, 9);
        const IntPolynomial q = oracle::random_polynomial(rng, 4, 9);
        CHECK(resultant(p, q) == oracle::sylvester_resultant(p, q));
    }
}

TEST_CASE("resultant vanishes exactly when the gcd has positive degree") {
    std::mt19937_64 rng(303);
    for (int i = 0; i < 200; ++i) {
        IntPolynomial p = oracle::random_polynomial(rng, 8, 50);
        IntPolynomial q = oracle::random_polynomial(rng, 8, 50);
        if (i % 2 == 0) {
            const IntPolynomial common = oracle::poly({static_cast<long>(i % 7) - 3, 1});
            p *= common;
            q *= common;
        }
        if (p.is_zero() || q.is_zero()) continue;
        CHECK((resultant(p, q) == 0) == (gcd(p, q).degree() >= 1));
    }
}

TEST_CASE("squarefree decomposition on the worked examples") {
    // (x-1)^2: gcd with derivative proportional to (x-1)
    const IntPolynomial sq = oracle::poly({1, -2, 1});
    auto [sf1, g1] = squarefree_part(sq);
    CHECK(g1 == oracle::poly({-1, 1}));
    CHECK(sf1 == oracle::poly({-1, 1}));
    CHECK(sf1 * g1 == sq);

    auto [sf2, g2] = squarefree_part(oracle::poly({-2, 0, 4}));
    CHECK(g2.degree() == 0);
    CHECK(sf2 == oracle::poly({-2, 0, 4}));

    // all three complex roots simple
    auto [sf3, g3] = squarefree_part(oracle::poly({0, 192, 0, 128}));
    CHECK(g3.degree() == 0);
    CHECK(sf3 == oracle::poly({0, 192, 0, 128}));

    CHECK_THROWS_AS(squarefree_part(IntPolynomial()), std::domain_error);
}

TEST_CASE("squarefree part times the gcd reconstructs the input") {
    std::mt19937_64 rng(404);
    for (int i = 0; i < 100; ++i) {
        IntPolynomial p = oracle::random_polynomial(rng, 5, 9);
        if (i % 3 == 0) {
            const IntPolynomial doubled = oracle::random_polynomial(rng, 2, 5);
            p *= doubled * doubled;
        }
        if (p.degree() < 1) continue;
        auto [sf, g] = squarefree_part(p);
        CHECK(sf * g == p);
        CHECK(gcd(sf, derivative(sf)).degree() == 0);
        CHECK((g.degree() == 0) == (gcd(p, derivative(p)).degree() == 0));
    }
}
