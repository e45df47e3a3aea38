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

#pragma once

#include <vector>

#include "hermw/polynomial.hpp"

namespace hermw {

/// A rational endpoint extended with the two infinities.
struct ExtendedRational {
    enum class Kind { NegInfinity, Finite, PosInfinity };

    Kind kind = Kind::Finite;
    Rational value;  // meaningful only when kind == Finite

    static ExtendedRational neg_infinity() { return {Kind::NegInfinity, Rational(0)}; }
    static ExtendedRational pos_infinity() { return {Kind::PosInfinity, Rational(0)}; }
    static ExtendedRational finite(Rational v) { return {Kind::Finite, std::move(v)}; }
};

/// Sturm chain of p: p, p', then negated remainders, each member scaled to a
/// primitive integer polynomial by a positive constant (sign-preserving).
std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p);

/// Number of distinct real roots of p in the half-open interval (lo, hi],
/// by sign-variation difference of the Sturm chain. Exact. Intended for
/// squarefree p (apply squarefree_part first); the canonical chain ending at
/// gcd(p, p') makes the count of distinct roots correct regardless.
/// The zero polynomial is a domain error; a constant has no roots.
int sturm_count(const IntPolynomial& p, const ExtendedRational& lo, const ExtendedRational& hi);

/// Distinct real roots over the whole real line.
int sturm_count_real_line(const IntPolynomial& p);

}  // namespace hermw
