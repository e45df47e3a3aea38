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

#include <utility>

#include "hermw/polynomial.hpp"

namespace hermw {

/// gcd of the absolute coefficient values; positive for nonzero input, 0 for zero.
Integer content(const IntPolynomial& p);

/// p divided by its content. Keeps the sign pattern; zero stays zero.
IntPolynomial primitive_part(const IntPolynomial& p);

/// Primitive part normalized to a positive leading coefficient.
IntPolynomial primitive_part_positive(const IntPolynomial& p);

/// Exact quotient a / b in Z[x]. Throws std::domain_error when b is zero and
/// std::logic_error when the division leaves a remainder.
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);

/// True iff b divides a exactly in Q[x] (contents ignored).
bool divides_up_to_constant(const IntPolynomial& b, const IntPolynomial& a);

struct PseudoRemainder {
    IntPolynomial remainder;  ///< lc(b)^(deg a − deg b + 1) · a  mod b
    Integer scale;            ///< the multiplier lc(b)^(deg a − deg b + 1)
};

/// Pseudo-division remainder; requires deg a >= deg b >= 0, b nonzero.
PseudoRemainder pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Polynomial gcd over Q[x], returned primitive with a positive leading
/// coefficient (so coprime inputs report the constant 1). gcd(p, 0) is the
/// positive primitive part of p; both inputs zero is a domain error.
IntPolynomial gcd(const IntPolynomial& p, const IntPolynomial& q);

/// Resultant of p and q as the determinant of the Sylvester matrix whose top
/// deg(q) rows carry p's coefficients (descending) and bottom deg(p) rows
/// carry q's. Zero iff p and q share a complex root. Degree-zero inputs are
/// allowed (res(c, q) = c^deg q; res of two constants is 1); a zero
/// polynomial is a domain error.
Integer resultant(const IntPolynomial& p, const IntPolynomial& q);

struct SquarefreeDecomposition {
    IntPolynomial squarefree;           ///< p / gcd(p, p'); one copy of each distinct root
    IntPolynomial gcd_with_derivative;  ///< gcd(p, p'), primitive with positive leading coefficient
};

/// Squarefree part of a nonzero polynomial. p is squarefree iff
/// gcd_with_derivative is constant.
SquarefreeDecomposition squarefree_part(const IntPolynomial& p);

}  // namespace hermw
