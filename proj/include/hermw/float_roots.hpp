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

#include "hermw/polynomial.hpp"

namespace hermw {

/// Approximate complex roots via companion-matrix eigenvalues of a monic
/// double-precision copy. Best effort, not certified: exact roots at the
/// origin are split off first, everything else inherits double rounding.
/// Returns exactly degree(p) values sorted by (re, im). Requires degree >= 1.
std::vector<std::complex<double>> complex_roots_float(const IntPolynomial& p);

}  // namespace hermw
