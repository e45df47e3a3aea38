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

#include <mutex>
#include <vector>

#include "hermw/polynomial.hpp"

namespace hermw {

/// Grow-only table of physicists' Hermite polynomials, built by the
/// three-term recurrence H_{n+1} = 2x·H_n − 2n·H_{n−1} with H_0 = 1,
/// H_1 = 2x. Entry n has degree n, leading coefficient 2^n, and the parity
/// of n. Lookups are guarded, so one cache may serve concurrent callers.
class HermiteCache {
   public:
    HermiteCache();

    /// H_n by value (the table may reallocate while growing).
    IntPolynomial get(unsigned n);

   private:
    std::mutex mutex_;
    std::vector<IntPolynomial> table_;
};

/// H_n from a process-wide cache.
IntPolynomial hermite(unsigned n);

/// The order-th derivative of H_n: 2^order · n!/(n−order)! · H_{n−order},
/// via H' = 2n·H_{n−1} applied order times; zero when order > n.
IntPolynomial hermite_derivative(unsigned n, unsigned order);

}  // namespace hermw
