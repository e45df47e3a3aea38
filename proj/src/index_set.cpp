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

#include "hermw/index_set.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hermw {

IndexSet::IndexSet(std::vector<int> elements) : elements_(std::move(elements)) {
    std::ranges::sort(elements_);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (elements_[i] < 1) throw std::invalid_argument("index set elements must be positive");
        if (i > 0 && elements_[i] == elements_[i - 1])
            throw std::invalid_argument("index set elements must be distinct");
    }
}

int IndexSet::max() const {
    if (elements_.empty()) throw std::domain_error("max of the empty index set");
    return elements_.back();
}

long long IndexSet::sum() const {
    return std::accumulate(elements_.begin(), elements_.end(), 0LL);
}

std::string IndexSet::str() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i) os << ",";
        os << elements_[i];
    }
    os << "}";
    return os.str();
}

IndexSet segment(int p, int q) {
    if (p < 1) throw std::domain_error("segment start must be positive");
    if (q < 0) throw std::domain_error("segment length must be non-negative");
    std::vector<int> v(static_cast<std::size_t>(q));
    std::iota(v.begin(), v.end(), p);
    return IndexSet(std::move(v));
}

IndexSet involution(const IndexSet& f) {
    if (f.empty()) throw std::domain_error("involution of the empty index set");
    const int m = f.max();
    std::vector<bool> excluded(static_cast<std::size_t>(m) + 1, false);
    for (int e : f) excluded[static_cast<std::size_t>(m - e)] = true;
    std::vector<int> out;
    for (int x = 1; x <= m; ++x)
        if (!excluded[static_cast<std::size_t>(x)]) out.push_back(x);
    return IndexSet(std::move(out));
}

long long wronskian_degree(const IndexSet& f) {
    const long long k = static_cast<long long>(f.size());
    return f.sum() - k * (k - 1) / 2;
}

long long spectrum_offset(const IndexSet& f) {
    const long long k = static_cast<long long>(f.size());
    return f.sum() - (k + 1) * k / 2;
}

}  // namespace hermw
