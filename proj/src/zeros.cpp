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

#include "hermw/zeros.hpp"

#include <stdexcept>

#include "hermw/float_roots.hpp"
#include "hermw/parallel.hpp"
#include "hermw/poly_gcd.hpp"
#include "hermw/sturm.hpp"
#include "hermw/wronskian.hpp"

namespace hermw {

namespace {

long long multiplicity_at_origin(const IntPolynomial& p) {
    long long m = 0;
    while (p.coefficients()[static_cast<std::size_t>(m)] == 0) ++m;
    return m;
}

// c·x^m for some m >= 0: a single term.
bool is_monomial(const IntPolynomial& p) {
    const auto& c = p.coefficients();
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        if (c[i] != 0) return false;
    return true;
}

}  // namespace

ZeroCertificate certify(const IndexSet& f) {
    if (f.empty()) throw std::domain_error("certificate of the empty set");
    const WronskianResult w = wronskian(f);
    if (w.polynomial.is_zero()) throw std::logic_error("unexpected zero Wronskian");
    auto [sf, g] = squarefree_part(w.polynomial);

    ZeroCertificate cert;
    cert.set = f;
    cert.degree = w.polynomial.degree();
    cert.squarefree = g.degree() == 0;
    cert.gcd_with_derivative = std::move(g);
    cert.origin_multiplicity = multiplicity_at_origin(w.polynomial);
    cert.real_root_count = sturm_count_real_line(sf);
    cert.veselov_ok = is_monomial(cert.gcd_with_derivative);
    return cert;
}

SegmentCertificate certify_segment(int p, int q) {
    if (p < 1 || q < 1) throw std::domain_error("segment certificate needs p >= 1, q >= 1");
    const IntPolynomial base = wronskian(segment(p, q)).polynomial;
    const IntPolynomial shorter = wronskian(segment(p + 1, q - 1)).polynomial;
    const IntPolynomial shifted = wronskian(segment(p + 1, q)).polynomial;

    SegmentCertificate cert;
    cert.p = p;
    cert.q = q;
    cert.resultant_a1 = resultant(base, shorter);
    cert.resultant_a3 = resultant(base, shifted);
    cert.a1_coprime = cert.resultant_a1 != 0;
    cert.a3_coprime = cert.resultant_a3 != 0;
    cert.gcd_a1 = gcd(base, shorter);
    cert.gcd_a3 = gcd(base, shifted);
    cert.gcd_with_derivative = squarefree_part(base).gcd_with_derivative;
    cert.a2_squarefree = cert.gcd_with_derivative.degree() == 0;
    return cert;
}

SegmentRootCount karlin_szego_count(int n, int k) {
    if (n < 1 || k < 1) throw std::domain_error("segment root count needs n >= 1, k >= 1");
    const WronskianResult w = wronskian(segment(n, k));
    auto [sf, g] = squarefree_part(w.polynomial);

    SegmentRootCount out;
    out.n = n;
    out.k = k;
    out.expected = (k % 2 == 0) ? 0 : n;
    out.squarefree = g.degree() == 0;
    out.actual = sturm_count_real_line(sf);
    out.degree = w.polynomial.degree();
    out.expected_degree = static_cast<long long>(k) * n;
    return out;
}

std::vector<IndexSet> enumerate_index_sets(int max_element, int max_size) {
    if (max_element < 1 || max_size < 1)
        throw std::domain_error("enumeration bounds must be positive");
    std::vector<IndexSet> out;
    for (int top = 1; top <= max_element; ++top) {
        for (int size = 1; size <= max_size && size <= top; ++size) {
            // lexicographic combinations of {1..top−1} of size−1, then append top
            const int rest = size - 1;
            std::vector<int> pick(static_cast<std::size_t>(rest));
            for (int i = 0; i < rest; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
            for (;;) {
                std::vector<int> elems = pick;
                elems.push_back(top);
                out.emplace_back(std::move(elems));
                if (rest == 0) break;
                int i = rest - 1;
                while (i >= 0 && pick[static_cast<std::size_t>(i)] == top - rest + i) --i;
                if (i < 0) break;
                ++pick[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < rest; ++j)
                    pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
    }
    return out;
}

std::vector<ZeroCertificate> veselov_scan(int max_element, int max_size, unsigned workers) {
    const std::vector<IndexSet> sets = enumerate_index_sets(max_element, max_size);
    std::vector<ZeroCertificate> certs(sets.size());
    parallel_for(sets.size(), workers, [&](std::size_t i) { certs[i] = certify(sets[i]); });
    return certs;
}

std::vector<std::complex<double>> root_cloud(const IndexSet& f) {
    if (f.empty()) throw std::domain_error("root cloud of the empty set");
    const IntPolynomial omega = wronskian(f).polynomial;
    if (omega.degree() < 1) throw std::domain_error("root cloud needs a non-constant Wronskian");
    return complex_roots_float(omega);
}

}  // namespace hermw
