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

#include "hermw/hermite.hpp"

namespace hermw {

HermiteCache::HermiteCache() {
    table_.push_back(IntPolynomial(Integer(1)));            // H_0
    table_.push_back(IntPolynomial({Integer(0), Integer(2)}));  // H_1
}

IntPolynomial HermiteCache::get(unsigned n) {
    std::lock_guard<std::mutex> lock(mutex_);
    const IntPolynomial two_x({Integer(0), Integer(2)});
    while (table_.size() <= n) {
        const std::size_t m = table_.size() - 1;  // next entry is H_{m+1}
        IntPolynomial next =
            two_x * table_[m] - Integer(2 * static_cast<unsigned long>(m)) * table_[m - 1];
        table_.push_back(std::move(next));
    }
    return table_[n];
}

IntPolynomial hermite(unsigned n) {
    static HermiteCache cache;
    return cache.get(n);
}

IntPolynomial hermite_derivative(unsigned n, unsigned order) {
    if (order > n) return {};
    Integer factor = 1;
    for (unsigned j = 0; j < order; ++j) factor *= 2 * static_cast<unsigned long>(n - j);
    return factor * hermite(n - order);
}

}  // namespace hermw
