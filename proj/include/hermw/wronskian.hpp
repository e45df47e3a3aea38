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
#include <vector>

#include "hermw/index_set.hpp"
#include "hermw/poly_matrix.hpp"
#include "hermw/polynomial.hpp"

namespace hermw {

struct WronskianResult {
    IndexSet set;
    IntPolynomial polynomial;
    long long predicted_degree = 0;  ///< Σf − C(k,2); the computed degree must match
};

/// The k×k Wronskian matrix of the Hermite polynomials indexed by f:
/// row i carries H_{f_i}, columns are derivative orders 0 … k−1.
PolyMatrix wronskian_matrix(const IndexSet& f);

/// Hermite Wronskian of the set f (constant 1 for the empty set), computed
/// fraction-free from wronskian_matrix.
WronskianResult wronskian(const IndexSet& f);

struct ExceptionalIndexData {
    IndexSet set;
    long long offset = 0;                  ///< u_F
    std::vector<long long> spectrum_head;  ///< first m members of σ_F, increasing
};

/// u_F together with the first m members of
/// σ_F = {u_F, u_F+1, …} \ {u_F + f : f ∈ F}. Requires m >= 1.
ExceptionalIndexData exceptional_index_data(const IndexSet& f, int m);

/// Membership of n in σ_F.
bool in_spectrum(const IndexSet& f, long long n);

/// Bordered Wronskian H_n^F: the (k+1)×(k+1) determinant whose FIRST row is
/// H_{n−u_F} with derivative orders 0 … k and whose remaining rows are the
/// H_{f_i}. Degree is exactly n when n ∈ σ_F and the zero polynomial
/// otherwise. For the empty set this degenerates to H_n. n < u_F is a
/// domain error.
IntPolynomial exceptional_hermite(const IndexSet& f, long long n);

/// Both sides of the segment identification: the Wronskian of segment(p, q+1)
/// and the bordered Wronskian H_{p+pq} of segment(p+1, q). Under this
/// module's row/column convention the two determinants coincide exactly.
std::pair<IntPolynomial, IntPolynomial> connection_segment(int p, int q);

}  // namespace hermw
