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

#include "hermw/identities.hpp"
#include "hermw/wronskian.hpp"
#include "hermw/zeros.hpp"
#include "oracles.hpp"

using namespace hermw;

namespace {

IndexSet set_of(std::vector<int> v) { return IndexSet(std::move(v)); }

PolyMatrix random_constant_matrix(std::mt19937_64& rng, std::size_t n, long bound) {
    std::uniform_int_distribution<long> coeff(-bound, bound);
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = IntPolynomial(Integer(coeff(rng)));
    return m;
}

}  // namespace

TEST_CASE("Sylvester identity reduces to the determinant definition at k = 2") {
    PolyMatrix m(2, 2);
    m.at(0, 0) = oracle::poly({1, 1});
    m.at(0, 1) = oracle::poly({3});
    m.at(1, 0) = oracle::poly({0, 0, 2});
    m.at(1, 1) = oracle::poly({-1, 5});
    const IdentityVerdict v = sylvester_check(m, 1, 2, 1, 2);
    CHECK(v.holds_exactly);
    CHECK(v.discrepancy.is_zero());
}

TEST_CASE("Sylvester identity on random constant and polynomial matrices") {
    std::mt19937_64 rng(808);
    for (int rep = 0; rep < 20; ++rep) {
        const PolyMatrix m = random_constant_matrix(rng, 4, 9);
        CHECK(sylvester_check(m, 1, 3, 2, 4).holds_exactly);
    }
    for (std::size_t n = 2; n <= 4; ++n)
        for (int rep = 0; rep < 10; ++rep) {
            PolyMatrix m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    m.at(i, j) = oracle::random_polynomial(rng, 2, 9);
            for (std::size_t i0 = 1; i0 < n; ++i0)
                for (std::size_t i1 = i0 + 1; i1 <= n; ++i1)
                    for (std::size_t j0 = 1; j0 < n; ++j0)
                        for (std::size_t j1 = j0 + 1; j1 <= n; ++j1)
                            CHECK(sylvester_check(m, i0, i1, j0, j1).holds_exactly);
        }
}

TEST_CASE("Sylvester identity on the 3x3 segment Wronskian matrix, rows/cols (1,3)") {
    const IdentityVerdict v = sylvester_check(wronskian_matrix(segment(1, 3)), 1, 3, 1, 3);
    CHECK(v.holds_exactly);
}

TEST_CASE("Sylvester index validation") {
    PolyMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i) m.at(i, i) = IntPolynomial(Integer(1));
    CHECK_THROWS_AS(sylvester_check(m, 2, 1, 1, 2), std::domain_error);
    CHECK_THROWS_AS(sylvester_check(m, 1, 4, 1, 2), std::domain_error);
    CHECK_THROWS_AS(sylvester_check(m, 0, 1, 1, 2), std::domain_error);
    CHECK_THROWS_AS(sylvester_check(PolyMatrix(2, 3), 1, 2, 1, 2), std::domain_error);
}

TEST_CASE("Wronskian recurrence: one global sign, fixed at p = q = 1") {
    // frozen hand computation: LHS = 1·(8x^2+4), RHS = H2·H1' − H2'·H1 = −8x^2−4
    const IdentityVerdict base = wronskian_recurrence_check(1, 1);
    CHECK(!base.holds_exactly);
    CHECK(base.sign_flip_detected);
    CHECK(base.discrepancy == oracle::poly({8, 0, 16}));  // LHS − RHS = 2·(8x^2+4)

    CHECK(kWronskianRecurrenceSign == -1);
    for (int p = 1; p <= 4; ++p)
        for (int q = 1; q <= 3; ++q) {
            const IdentityVerdict v = wronskian_recurrence_check(p, q);
            CHECK(!v.holds_exactly);
            CHECK(v.sign_flip_detected);
        }
}

TEST_CASE("duality constants") {
    CHECK(duality_denominator(set_of({2})) == 2);
    CHECK(duality_denominator(set_of({1, 2})) == 4);   // 2^1·1!·2!
    CHECK(duality_denominator(set_of({1, 3})) == 12);  // 2^1·1!·3!
}

TEST_CASE("duality worked examples") {
    for (const auto& f : {set_of({2}), set_of({1}), set_of({1, 3})}) {
        const IdentityVerdict v = duality_check(f);
        CHECK(v.holds_exactly);
        CHECK(v.discrepancy.is_zero());
        CHECK(v.discrepancy_imag.is_zero());
    }
    CHECK_THROWS_AS(duality_check(IndexSet()), std::domain_error);
}

TEST_CASE("duality holds with a purely real right side across small sets") {
    for (const auto& f : enumerate_index_sets(7, 3)) {
        const IdentityVerdict v = duality_check(f);
        CHECK(v.holds_exactly);
    }
}

TEST_CASE("eigen-equation worked examples") {
    CHECK(eigen_ode_check(set_of({1, 2}), 0).holds_exactly);
    CHECK(eigen_ode_check(set_of({1, 2}), 3).holds_exactly);
    CHECK(eigen_ode_check(set_of({2, 3}), 2).holds_exactly);
    // outside the spectrum the bordered Wronskian vanishes: vacuous but exact
    CHECK(eigen_ode_check(set_of({1, 2}), 1).holds_exactly);
    CHECK_THROWS_AS(eigen_ode_check(set_of({2, 3}), 1), std::domain_error);
}

TEST_CASE("eigen-equation across spectra of small sets") {
    for (const auto& f : {set_of({1, 2}), set_of({2, 3}), set_of({1, 2, 3}), segment(2, 2)}) {
        const ExceptionalIndexData data = exceptional_index_data(f, 5);
        for (long long n : data.spectrum_head) CHECK(eigen_ode_check(f, n).holds_exactly);
    }
}

TEST_CASE("segment equation specializes the eigen-equation") {
    CHECK(segment_ode_check(1, 0).holds_exactly);  // classical equation for H_1
    CHECK(segment_ode_check(1, 1).holds_exactly);
    CHECK(segment_ode_check(2, 2).holds_exactly);
    for (int p = 1; p <= 4; ++p)
        for (int q = 0; q <= 3; ++q) CHECK(segment_ode_check(p, q).holds_exactly);
}

TEST_CASE("admissibility scan with 0 in the naturals") {
    CHECK(admissible(set_of({1, 2})));
    CHECK(!admissible(set_of({1})));  // x = 0 gives −1
    CHECK(admissible(set_of({2, 3})));
    CHECK(!admissible(set_of({1, 3})));  // x = 2 gives −1
    CHECK(admissible(IndexSet()));
    // even-length segments are admissible wherever they start
    for (int p = 1; p <= 6; ++p)
        for (int m = 1; m <= 3; ++m) CHECK(admissible(segment(p, 2 * m)));
}

TEST_CASE("Krein-Adler equivalence on the worked examples and small sets") {
    for (const auto& f : {set_of({1, 2}), set_of({1}), set_of({2})})
        CHECK(krein_adler_check(f).holds_exactly);
    for (const auto& f : enumerate_index_sets(6, 6))
        CHECK(krein_adler_check(f).holds_exactly);
}

TEST_CASE("numeric orthogonality for the admissible pair family") {
    const IndexSet f = set_of({1, 2});
    const OrthogonalityResult a = orthogonality_numeric_check(f, 0, 3, 1e-8);
    CHECK(a.orthogonal);
    CHECK(a.tail_bound <= 1e-9 * a.norm1 * a.norm2);
    const OrthogonalityResult b = orthogonality_numeric_check(f, 3, 4, 1e-8);
    CHECK(b.orthogonal);

    CHECK_THROWS_AS(orthogonality_numeric_check(f, 3, 3, 1e-8), std::domain_error);
    CHECK_THROWS_AS(orthogonality_numeric_check(set_of({1}), 0, 2, 1e-8), std::domain_error);
    CHECK_THROWS_AS(orthogonality_numeric_check(f, 0, 1, 1e-8), std::domain_error);
}

TEST_CASE("diagonal weighted moments are far from zero (sanity of the weight)") {
    const OrthogonalityResult r = orthogonality_numeric_check(set_of({1, 2}), 0, 3, 1e-8);
    CHECK(r.norm1 > 0);
    CHECK(r.norm2 > 0);
}
