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

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "hermw/float_roots.hpp"
#include "hermw/sturm.hpp"
#include "oracles.hpp"

using namespace hermw;

TEST_CASE("Sturm counts on the worked examples") {
    CHECK(sturm_count_real_line(oracle::poly({-2, 0, 1})) == 2);  // x^2 - 2

    // 8x^2 + 4 is positive definite; discriminant cross-check
    const IntPolynomial q = oracle::poly({4, 0, 8});
    const Integer discriminant = 0 - 4 * Integer(8) * Integer(4);
    CHECK(discriminant < 0);
    CHECK(sturm_count_real_line(q) == 0);

    // 128x^3 + 192x = x(128x^2 + 192); only the origin is real
    CHECK(sturm_count_real_line(oracle::poly({0, 192, 0, 128})) == 1);

    CHECK_THROWS_AS(sturm_count_real_line(IntPolynomial()), std::domain_error);
    CHECK(sturm_count_real_line(oracle::poly({7})) == 0);
}

TEST_CASE("Sturm counts on finite and half-open intervals") {
    const IntPolynomial p = oracle::poly({-2, 0, 1});  // roots ±√2
    CHECK(sturm_count(p, ExtendedRational::finite(Rational(0)),
                      ExtendedRational::pos_infinity()) == 1);
    CHECK(sturm_count(p, ExtendedRational::finite(Rational(-2)),
                      ExtendedRational::finite(Rational(0))) == 1);
    CHECK(sturm_count(p, ExtendedRational::finite(Rational(2)),
                      ExtendedRational::finite(Rational(3))) == 0);
    // interval (a, b]: right endpoint included, left excluded
    const IntPolynomial xx1 = oracle::poly({0, -1, 1});  // x(x-1)
    CHECK(sturm_count(xx1, ExtendedRational::finite(Rational(0)),
                      ExtendedRational::finite(Rational(1))) == 1);
    CHECK(sturm_count(xx1, ExtendedRational::finite(Rational(-1)),
                      ExtendedRational::finite(Rational(0))) == 1);
    // empty / reversed interval
    CHECK(sturm_count(p, ExtendedRational::finite(Rational(5)),
                      ExtendedRational::finite(Rational(5))) == 0);
    CHECK(sturm_count(p, ExtendedRational::pos_infinity(), ExtendedRational::neg_infinity()) == 0);
}

TEST_CASE("Sturm agrees with the refined evaluation grid on split-root products") {
    std::mt19937_64 rng(606);
    std::uniform_int_distribution<int> count(1, 6);
    std::uniform_int_distribution<long> root(-20, 20);
    std::uniform_int_distribution<long> scale(1, 5);
    for (int rep = 0; rep < 60; ++rep) {
        std::set<long> roots;
        const int want = count(rng);
        while (static_cast<int>(roots.size()) < want) roots.insert(root(rng));
        const IntPolynomial p = oracle::product_of_distinct_linear_factors(
            std::vector<long>(roots.begin(), roots.end()), (rep % 2 ? 1 : -1) * scale(rng));
        CHECK(sturm_count_real_line(p) == want);
        CHECK(sturm_count_real_line(p) == oracle::grid_real_root_count(p));
    }
}

TEST_CASE("float roots on the worked examples") {
    const auto pure_imag = complex_roots_float(oracle::poly({1, 0, 1}));  // x^2 + 1
    REQUIRE(pure_imag.size() == 2);
    CHECK(std::abs(pure_imag[0] - std::complex<double>(0, -1)) < 1e-10);
    CHECK(std::abs(pure_imag[1] - std::complex<double>(0, 1)) < 1e-10);

    const auto half = complex_roots_float(oracle::poly({4, 0, 8}));  // ±i/√2
    REQUIRE(half.size() == 2);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(half[0] - std::complex<double>(0, -inv_sqrt2)) < 1e-8);
    CHECK(std::abs(half[1] - std::complex<double>(0, inv_sqrt2)) < 1e-8);

    const auto cubic = complex_roots_float(oracle::poly({0, -12, 0, 8}));  // 8x^3 - 12x
    REQUIRE(cubic.size() == 3);
    const double r = std::sqrt(1.5);
    CHECK(std::abs(cubic[0] - std::complex<double>(-r, 0)) < 1e-8);
    CHECK(std::abs(cubic[1]) < 1e-8);
    CHECK(std::abs(cubic[2] - std::complex<double>(r, 0)) < 1e-8);

    CHECK_THROWS_AS(complex_roots_float(oracle::poly({3})), std::domain_error);
    CHECK_THROWS_AS(complex_roots_float(IntPolynomial()), std::domain_error);
}

TEST_CASE("float roots split exact origin multiplicity and keep the count") {
    const auto triple = complex_roots_float(oracle::poly({0, 0, 0, 32}));  // 32x^3
    REQUIRE(triple.size() == 3);
    for (const auto& z : triple) CHECK(std::abs(z) == 0.0);

    std::mt19937_64 rng(707);
    for (int rep = 0; rep < 30; ++rep) {
        const IntPolynomial p = oracle::random_polynomial(rng, 8, 50);
        if (p.degree() < 1) continue;
        CHECK(complex_roots_float(p).size() == static_cast<std::size_t>(p.degree()));
    }
}
