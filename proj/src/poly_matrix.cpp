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

#include "hermw/poly_matrix.hpp"

#include <algorithm>

#include "hermw/poly_gcd.hpp"

namespace hermw {

PolyMatrix remove_rows_cols(const PolyMatrix& m, std::span<const std::size_t> rows,
                            std::span<const std::size_t> cols) {
    if (rows.size() >= m.rows() || cols.size() >= m.cols())
        throw std::domain_error("cannot remove all rows or all columns");
    auto removed = [](std::span<const std::size_t> list, std::size_t i) {
        return std::ranges::binary_search(list, i);
    };
    PolyMatrix out(m.rows() - rows.size(), m.cols() - cols.size());
    std::size_t oi = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (removed(rows, i)) continue;
        std::size_t oj = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (removed(cols, j)) continue;
            out.at(oi, oj) = m.at(i, j);
            ++oj;
        }
        ++oi;
    }
    return out;
}

IntPolynomial det_fraction_free(const PolyMatrix& m) {
    if (!m.is_square()) throw std::domain_error("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    std::vector<IntPolynomial> a;
    a.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a.push_back(m.at(i, j));
    return detail::bareiss_determinant(
        a, n, [](const IntPolynomial& p) { return p.is_zero(); },
        [](IntPolynomial num, const IntPolynomial& den) { return divide_exact(num, den); });
}

}  // namespace hermw
