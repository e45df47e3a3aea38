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

#include "hermw/wronskian.hpp"

#include <stdexcept>

#include "hermw/hermite.hpp"

namespace hermw {

PolyMatrix wronskian_matrix(const IndexSet& f) {
    if (f.empty()) throw std::domain_error("Wronskian matrix of the empty set");
    const std::size_t k = f.size();
    PolyMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        const unsigned fi = static_cast<unsigned>(f.elements()[i]);
        for (std::size_t j = 0; j < k; ++j)
            m.at(i, j) = hermite_derivative(fi, static_cast<unsigned>(j));
    }
    return m;
}

WronskianResult wronskian(const IndexSet& f) {
    if (f.empty()) return {f, IntPolynomial(Integer(1)), 0};
    return {f, det_fraction_free(wronskian_matrix(f)), wronskian_degree(f)};
}

ExceptionalIndexData exceptional_index_data(const IndexSet& f, int m) {
    if (m < 1) throw std::domain_error("spectrum head length must be positive");
    const long long u = spectrum_offset(f);
    std::vector<long long> head;
    head.reserve(static_cast<std::size_t>(m));
    for (long long n = u; static_cast<int>(head.size()) < m; ++n) {
        bool excluded = false;
        for (int e : f) {
            if (n == u + e) {
                excluded = true;
                break;
            }
        }
        if (!excluded) head.push_back(n);
    }
    return {f, u, std::move(head)};
}

bool in_spectrum(const IndexSet& f, long long n) {
    const long long u = spectrum_offset(f);
    if (n < u) return false;
    for (int e : f)
        if (n == u + e) return false;
    return true;
}

IntPolynomial exceptional_hermite(const IndexSet& f, long long n) {
    const long long u = spectrum_offset(f);
    if (n < u) throw std::domain_error("bordered Wronskian index below the spectrum offset");
    const std::size_t k = f.size();
    if (k == 0) return hermite(static_cast<unsigned>(n));
    PolyMatrix m(k + 1, k + 1);
    for (std::size_t j = 0; j <= k; ++j)
        m.at(0, j) = hermite_derivative(static_cast<unsigned>(n - u), static_cast<unsigned>(j));
    for (std::size_t i = 0; i < k; ++i) {
        const unsigned fi = static_cast<unsigned>(f.elements()[i]);
        for (std::size_t j = 0; j <= k; ++j)
            m.at(i + 1, j) = hermite_derivative(fi, static_cast<unsigned>(j));
    }
    return det_fraction_free(m);
}

std::pair<IntPolynomial, IntPolynomial> connection_segment(int p, int q) {
    if (p < 1) throw std::domain_error("segment start must be positive");
    if (q < 0) throw std::domain_error("segment length must be non-negative");
    IntPolynomial lhs = wronskian(segment(p, q + 1)).polynomial;
    IntPolynomial rhs = exceptional_hermite(segment(p + 1, q),
                                            static_cast<long long>(p) * (q + 1));
    return {std::move(lhs), std::move(rhs)};
}

}  // namespace hermw
