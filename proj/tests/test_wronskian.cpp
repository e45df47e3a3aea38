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

#include "hermw/hermite.hpp"
#include "hermw/wronskian.hpp"
#include "hermw/zeros.hpp"
#include "oracles.hpp"

using namespace hermw;

namespace {

IndexSet set_of(std::vector<int> v) { return IndexSet(std::move(v)); }

}  // namespace

TEST_CASE("IndexSet validation and segments") {
    CHECK(set_of({3, 1, 2}).elements() == std::vector<int>{1, 2, 3});
    CHECK_THROWS_AS(set_of({3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(set_of({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(set_of({-2}), std::invalid_argument);

    CHECK(segment(2, 3) == set_of({2, 3, 4}));
    CHECK(segment(5, 0).empty());
    CHECK(segment(1, 1) == set_of({1}));
    CHECK_THROWS_AS(segment(0, 2), std::domain_error);
    CHECK_THROWS_AS(segment(1, -1), std::domain_error);
}

TEST_CASE("Wronskian worked examples") {
    CHECK(wronskian(IndexSet()).polynomial == IntPolynomial(Integer(1)));
    for (int p = 1; p <= 6; ++p)
        CHECK(wronskian(set_of({p})).polynomial == hermite(static_cast<unsigned>(p)));

    const WronskianResult w12 = wronskian(set_of({1, 2}));
    CHECK(w12.polynomial == oracle::poly({4, 0, 8}));
    CHECK(w12.predicted_degree == 2);

    const WronskianResult w123 = wronskian(set_of({1, 2, 3}));
    CHECK(w123.polynomial == oracle::poly({0, 192, 0, 128}));
    CHECK(w123.predicted_degree == 3);
    CHECK(w123.polynomial.degree() == 3);

    // x -> -ix duality workhorse: {1,3} collapses onto a pure power of x
    CHECK(wronskian(set_of({1, 3})).polynomial == oracle::poly({0, 0, 0, 32}));

    CHECK_THROWS_AS(wronskian_matrix(IndexSet()), std::domain_error);
}

TEST_CASE("fraction-free Wronskians match cofactor expansion") {
    for (const auto& f : {set_of({1, 2}), set_of({1, 3}), set_of({1, 2, 3}), set_of({2, 3, 5}),
                          set_of({1, 2, 4, 7})}) {
        const PolyMatrix m = wronskian_matrix(f);
        CHECK(wronskian(f).polynomial == oracle::cofactor_determinant(m));
    }
}

TEST_CASE("degree formula and parity over all subsets of {1..8}") {
    for (const auto& f : enumerate_index_sets(8, 8)) {
        const WronskianResult w = wronskian(f);
        REQUIRE(!w.polynomial.is_zero());
        CHECK(w.polynomial.degree() == w.predicted_degree);
        const IntPolynomial reflected = compose_linear(w.polynomial, Integer(-1), Integer(0));
        CHECK(reflected == (w.predicted_degree % 2 == 0 ? w.polynomial : -w.polynomial));
    }
}

TEST_CASE("segment Wronskians have degree k*n") {
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= 4; ++k)
            CHECK(wronskian(segment(n, k)).polynomial.degree() == k * n);
}

TEST_CASE("involution worked examples and properties") {
    CHECK(involution(set_of({1})) == set_of({1}));
    CHECK(involution(set_of({2})) == set_of({1, 2}));
    CHECK(involution(set_of({1, 3})) == set_of({1, 3}));
    CHECK_THROWS_AS(involution(IndexSet()), std::domain_error);

    for (const auto& f : enumerate_index_sets(9, 9)) CHECK(involution(involution(f)) == f);

    for (int p = 1; p <= 8; ++p)
        for (int q = 1; q <= 8; ++q)
            CHECK(involution(segment(p, q)) == segment(q, p));
}

TEST_CASE("spectrum offset and head") {
    const ExceptionalIndexData d12 = exceptional_index_data(set_of({1, 2}), 6);
    CHECK(d12.offset == 0);
    CHECK(d12.spectrum_head == std::vector<long long>{0, 3, 4, 5, 6, 7});

    const ExceptionalIndexData d1 = exceptional_index_data(set_of({1}), 4);
    CHECK(d1.offset == 0);
    CHECK(d1.spectrum_head == std::vector<long long>{0, 2, 3, 4});

    // offset of the shifted segment is p*q
    for (int p = 1; p <= 5; ++p)
        for (int q = 1; q <= 5; ++q)
            CHECK(spectrum_offset(segment(p + 1, q)) == static_cast<long long>(p) * q);

    CHECK_THROWS_AS(exceptional_index_data(set_of({1, 2}), 0), std::domain_error);
}

TEST_CASE("bordered Wronskian worked examples") {
    const IndexSet f = set_of({1, 2});
    CHECK(exceptional_hermite(f, 0) == IntPolynomial(Integer(16)));
    CHECK(exceptional_hermite(f, 1).is_zero());
    CHECK(exceptional_hermite(f, 2).is_zero());
    const IntPolynomial h3 = exceptional_hermite(f, 3);
    CHECK(h3.degree() == 3);
    CHECK(h3 == oracle::poly({0, 192, 0, 128}));
    CHECK_THROWS_AS(exceptional_hermite(set_of({2, 3}), 1), std::domain_error);

    // empty border degenerates to the plain Hermite polynomial
    CHECK(exceptional_hermite(IndexSet(), 4) == hermite(4));
}

TEST_CASE("degree law across the spectrum") {
    for (const auto& f :
         {set_of({1, 2}), set_of({2, 3}), set_of({1, 2, 3}), segment(2, 2)}) {
        const ExceptionalIndexData data = exceptional_index_data(f, 6);
        for (long long n : data.spectrum_head) {
            const IntPolynomial h = exceptional_hermite(f, n);
            CHECK(h.degree() == n);
        }
        for (int e : f) CHECK(exceptional_hermite(f, data.offset + e).is_zero());
    }
}

TEST_CASE("segment Wronskians are bordered Wronskians, exactly") {
    for (int p = 1; p <= 4; ++p)
        for (int q = 0; q <= 3; ++q) {
            const auto [lhs, rhs] = connection_segment(p, q);
            CHECK(lhs == rhs);
            CHECK(!lhs.is_zero());
        }
    // q = 0 degenerates to H_p on both sides
    const auto [lhs, rhs] = connection_segment(3, 0);
    CHECK(lhs == hermite(3));
    CHECK(rhs == hermite(3));
}
