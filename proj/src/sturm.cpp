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

#include "hermw/sturm.hpp"

#include <stdexcept>

#include "hermw/poly_gcd.hpp"

namespace hermw {

namespace {

// Sign of p at a finite rational point, or at ±infinity via the leading term.
int sign_at(const IntPolynomial& p, const ExtendedRational& x) {
    if (p.is_zero()) return 0;
    switch (x.kind) {
        case ExtendedRational::Kind::Finite:
            return sgn(p.evaluate(x.value));
        case ExtendedRational::Kind::PosInfinity:
            return sgn(p.leading());
        case ExtendedRational::Kind::NegInfinity:
        default:
            return (p.degree() % 2 == 0) ? sgn(p.leading()) : -sgn(p.leading());
    }
}

int sign_variations(const std::vector<IntPolynomial>& chain, const ExtendedRational& x) {
    int variations = 0;
    int prev = 0;
    for (const auto& p : chain) {
        const int s = sign_at(p, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

bool less_than(const ExtendedRational& a, const ExtendedRational& b) {
    using K = ExtendedRational::Kind;
    if (a.kind == K::NegInfinity) return b.kind != K::NegInfinity;
    if (a.kind == K::PosInfinity) return false;
    if (b.kind == K::PosInfinity) return true;
    if (b.kind == K::NegInfinity) return false;
    return a.value < b.value;
}

}  // namespace

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("Sturm chain of the zero polynomial");
    std::vector<IntPolynomial> chain;
    chain.push_back(primitive_part(p));
    if (p.degree() == 0) return chain;
    chain.push_back(primitive_part(derivative(p)));
    while (chain.back().degree() > 0) {
        const IntPolynomial& a = chain[chain.size() - 2];
        const IntPolynomial& b = chain.back();
        PseudoRemainder pr = pseudo_remainder(a, b);
        if (pr.remainder.is_zero()) break;
        // pr.remainder equals scale·(a mod b); dividing by a positive constant
        // preserves signs, so flip when the implied multiplier was negative.
        IntPolynomial next = primitive_part(pr.remainder);
        if (sgn(pr.scale) < 0) next = -next;
        chain.push_back(-next);
    }
    return chain;
}

int sturm_count(const IntPolynomial& p, const ExtendedRational& lo, const ExtendedRational& hi) {
    if (p.is_zero()) throw std::domain_error("root count of the zero polynomial");
    if (p.degree() == 0) return 0;
    if (!less_than(lo, hi)) return 0;
    const auto chain = sturm_chain(p);
    const int count = sign_variations(chain, lo) - sign_variations(chain, hi);
    if (count < 0) throw std::logic_error("negative Sturm variation difference");
    return count;
}

int sturm_count_real_line(const IntPolynomial& p) {
    return sturm_count(p, ExtendedRational::neg_infinity(), ExtendedRational::pos_infinity());
}

}  // namespace hermw
