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

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hermw/polynomial.hpp"

namespace hermw {

/// Rectangular matrix of integer polynomials, row-major.
class PolyMatrix {
   public:
    PolyMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {
        if (rows == 0 || cols == 0) throw std::domain_error("PolyMatrix dimensions must be positive");
    }

    PolyMatrix(std::size_t rows, std::size_t cols, std::vector<IntPolynomial> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (rows == 0 || cols == 0) throw std::domain_error("PolyMatrix dimensions must be positive");
        if (entries_.size() != rows * cols)
            throw std::invalid_argument("PolyMatrix entry count does not match dimensions");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    IntPolynomial& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const IntPolynomial& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

   private:
    std::size_t rows_, cols_;
    std::vector<IntPolynomial> entries_;
};

/// Copy of m with the given 0-based rows and columns removed.
/// Index lists must be sorted ascending and duplicate-free.
PolyMatrix remove_rows_cols(const PolyMatrix& m, std::span<const std::size_t> rows,
                            std::span<const std::size_t> cols);

/// Exact determinant by fraction-free (Bareiss) elimination.
/// Throws std::domain_error for a non-square matrix.
IntPolynomial det_fraction_free(const PolyMatrix& m);

namespace detail {

/// Fraction-free elimination over any integral domain with exact division.
/// `a` is an n×n row-major buffer, consumed in place. Divisions performed
/// by `div_exact(value, pivot)` are guaranteed exact by the Bareiss identity.
template <class Ring, class IsZero, class DivExact>
Ring bareiss_determinant(std::vector<Ring>& a, std::size_t n, IsZero is_zero, DivExact div_exact) {
    if (n == 0) return Ring(1);
    auto at = [&](std::size_t i, std::size_t j) -> Ring& { return a[i * n + j]; };
    bool negate = false;
    Ring prev_pivot(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(at(k, k))) {
            std::size_t r = k + 1;
            while (r < n && is_zero(at(r, k))) ++r;
            if (r == n) return Ring(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Ring t = at(k, k) * at(i, j) - at(i, k) * at(k, j);
                at(i, j) = div_exact(std::move(t), prev_pivot);
            }
            at(i, k) = Ring(0);
        }
        prev_pivot = at(k, k);
    }
    Ring det = std::move(at(n - 1, n - 1));
    return negate ? -det : det;
}

}  // namespace detail

}  // namespace hermw
