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

#include "hermw/poly_gcd.hpp"

#include <stdexcept>
#include <vector>

#include "hermw/poly_matrix.hpp"

namespace hermw {

Integer content(const IntPolynomial& p) {
    Integer g = 0;
    for (const auto& c : p.coefficients()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
    if (p.is_zero()) return {};
    Integer c = content(p);
    if (c == 1) return p;
    std::vector<Integer> out;
    out.reserve(p.coefficients().size());
    for (const auto& x : p.coefficients()) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        out.push_back(std::move(q));
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial primitive_part_positive(const IntPolynomial& p) {
    IntPolynomial pp = primitive_part(p);
    if (!pp.is_zero() && sgn(pp.leading()) < 0) return -pp;
    return pp;
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw std::logic_error("inexact polynomial division");
    std::vector<Integer> rem = a.coefficients();
    const auto& bc = b.coefficients();
    const std::size_t db = bc.size() - 1;
    const std::size_t dq = rem.size() - 1 - db;
    std::vector<Integer> quot(dq + 1, Integer(0));
    for (std::size_t s = dq + 1; s-- > 0;) {
        Integer& lead = rem[s + db];
        if (lead == 0) continue;
        if (!mpz_divisible_p(lead.get_mpz_t(), bc[db].get_mpz_t()))
            throw std::logic_error("inexact polynomial division");
        Integer q;
        mpz_divexact(q.get_mpz_t(), lead.get_mpz_t(), bc[db].get_mpz_t());
        for (std::size_t j = 0; j <= db; ++j) rem[s + j] -= q * bc[j];
        quot[s] = std::move(q);
    }
    for (const auto& r : rem)
        if (r != 0) throw std::logic_error("inexact polynomial division");
    return IntPolynomial(std::move(quot));
}

bool divides_up_to_constant(const IntPolynomial& b, const IntPolynomial& a) {
    if (b.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    if (b.degree() == 0) return true;
    if (a.degree() < b.degree()) return false;
    PseudoRemainder pr = pseudo_remainder(a, b);
    return pr.remainder.is_zero();
}

PseudoRemainder pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("pseudo-division by zero");
    if (a.degree() < b.degree()) throw std::domain_error("pseudo-division requires deg a >= deg b");
    const Integer& lc = b.leading();
    const int target = b.degree();
    const int exponent = a.degree() - b.degree() + 1;
    IntPolynomial rem = a;
    int applied = 0;
    while (!rem.is_zero() && rem.degree() >= target) {
        const int shift = rem.degree() - target;
        IntPolynomial t = IntPolynomial::monomial(rem.leading(), static_cast<std::size_t>(shift)) * b;
        rem = rem * lc - t;
        ++applied;
    }
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(exponent));
    for (; applied < exponent; ++applied) rem *= lc;
    return {std::move(rem), std::move(scale)};
}

IntPolynomial gcd(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() && q.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
    if (p.is_zero()) return primitive_part_positive(q);
    if (q.is_zero()) return primitive_part_positive(p);
    // Primitive remainder sequence; contents are irrelevant to the Q[x] gcd.
    IntPolynomial a = primitive_part(p);
    IntPolynomial b = primitive_part(q);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        if (b.degree() == 0) return IntPolynomial(Integer(1));
        IntPolynomial r = primitive_part(pseudo_remainder(a, b).remainder);
        a = std::move(b);
        b = std::move(r);
    }
    if (sgn(a.leading()) < 0) return -a;
    return a;
}

Integer resultant(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() || q.is_zero()) throw std::domain_error("resultant of the zero polynomial");
    const std::size_t m = static_cast<std::size_t>(p.degree());
    const std::size_t n = static_cast<std::size_t>(q.degree());
    const std::size_t size = m + n;
    if (size == 0) return Integer(1);
    std::vector<Integer> s(size * size, Integer(0));
    const auto& pc = p.coefficients();
    const auto& qc = q.coefficients();
    for (std::size_t row = 0; row < n; ++row)
        for (std::size_t k = 0; k <= m; ++k) s[row * size + row + k] = pc[m - k];
    for (std::size_t row = 0; row < m; ++row)
        for (std::size_t k = 0; k <= n; ++k) s[(n + row) * size + row + k] = qc[n - k];
    return detail::bareiss_determinant(
        s, size, [](const Integer& x) { return x == 0; },
        [](Integer num, const Integer& den) {
            Integer out;
            mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            return out;
        });
}

SquarefreeDecomposition squarefree_part(const IntPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("squarefree part of the zero polynomial");
    if (p.degree() == 0) return {p, IntPolynomial(Integer(1))};
    IntPolynomial g = gcd(p, derivative(p));
    return {divide_exact(p, g), std::move(g)};
}

}  // namespace hermw
