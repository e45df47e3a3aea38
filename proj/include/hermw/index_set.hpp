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

#include <string>
#include <vector>

namespace hermw {

/// Finite set of distinct positive integers, stored strictly increasing.
/// The empty set is valid.
class IndexSet {
   public:
    IndexSet() = default;

    /// Validates and sorts; duplicates or non-positive entries throw
    /// std::invalid_argument.
    explicit IndexSet(std::vector<int> elements);

    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }

    /// Largest element; domain error on the empty set.
    int max() const;

    const std::vector<int>& elements() const { return elements_; }
    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }

    long long sum() const;

    friend bool operator==(const IndexSet& a, const IndexSet& b) {
        return a.elements_ == b.elements_;
    }
    friend bool operator!=(const IndexSet& a, const IndexSet& b) { return !(a == b); }

    /// "{1,2,5}" / "{}" rendering for diagnostics and reports.
    std::string str() const;

   private:
    std::vector<int> elements_;
};

/// The q consecutive integers starting at p; empty when q = 0.
/// p < 1 is a domain error.
IndexSet segment(int p, int q);

/// {1, …, max F} \ {max F − f : f ∈ F}. An involution on non-empty sets;
/// maps segment(p, q) to segment(q, p). Empty input is a domain error.
IndexSet involution(const IndexSet& f);

/// Wronskian degree: Σf − C(k, 2).
long long wronskian_degree(const IndexSet& f);

/// Spectrum offset for the bordered Wronskian family: Σf − C(k+1, 2).
/// Non-negative for every valid set.
long long spectrum_offset(const IndexSet& f);

}  // namespace hermw
