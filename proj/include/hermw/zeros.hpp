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

#include <complex>
#include <vector>

#include "hermw/index_set.hpp"
#include "hermw/polynomial.hpp"
#include "hermw/scalars.hpp"

namespace hermw {

/// Exact zero-structure record for one Hermite Wronskian.
struct ZeroCertificate {
    IndexSet set;
    long long degree = 0;
    bool squarefree = false;             ///< gcd(Ω, Ω′) is constant
    IntPolynomial gcd_with_derivative;   ///< primitive, positive leading coefficient
    long long origin_multiplicity = 0;   ///< multiplicity of the root x = 0
    int real_root_count = 0;             ///< distinct real roots (Sturm, squarefree part)
    bool veselov_ok = false;             ///< gcd(Ω, Ω′) = c·x^m: every zero simple except possibly 0
};

/// Exact certificates for the three segment properties: coprimality with the
/// shifted shorter segment (a1), simple zeros (a2), coprimality with the
/// shifted equal-length segment (a3). The resultants and gcds behind the
/// booleans are kept for reports.
struct SegmentCertificate {
    int p = 0;
    int q = 0;
    bool a1_coprime = false;
    bool a2_squarefree = false;
    bool a3_coprime = false;
    Integer resultant_a1;
    Integer resultant_a3;
    IntPolynomial gcd_a1;
    IntPolynomial gcd_a3;
    IntPolynomial gcd_with_derivative;
};

/// Real-root count of a segment Wronskian against the classical prediction:
/// zero real roots for even k, exactly n for odd k, with degree k·n.
struct SegmentRootCount {
    int n = 0;
    int k = 0;
    int expected = 0;
    int actual = 0;
    long long degree = 0;
    long long expected_degree = 0;
    bool squarefree = false;
};

/// Fills every certificate field exactly. Non-empty f only.
ZeroCertificate certify(const IndexSet& f);

/// Certificates for segment(p, q); p, q >= 1.
SegmentCertificate certify_segment(int p, int q);

/// Root count for segment(n, k); n, k >= 1.
SegmentRootCount karlin_szego_count(int n, int k);

/// All non-empty subsets of {1, …, max_element} with size <= max_size,
/// ordered by (max element, size, lexicographic); the scan and the test
/// suites share this enumeration.
std::vector<IndexSet> enumerate_index_sets(int max_element, int max_size);

/// Certifies every set from enumerate_index_sets, fanning out across
/// `workers` threads (0 = hardware concurrency) with a deterministic merge.
/// Certificates with veselov_ok = false are counterexample candidates and are
/// returned like any other — callers report them, nothing asserts them away.
std::vector<ZeroCertificate> veselov_scan(int max_element, int max_size, unsigned workers = 0);

/// Best-effort float roots of the Wronskian of f, for plotting/CSV export.
/// Count equals the degree; not certified. Requires degree >= 1.
std::vector<std::complex<double>> root_cloud(const IndexSet& f);

}  // namespace hermw
