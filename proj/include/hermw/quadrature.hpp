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

#include <functional>
#include <vector>

namespace hermw {

/// Nodes and weights of the n-point Gauss–Legendre rule on [-1, 1],
/// computed by Newton iteration on the Legendre recurrence.
struct GaussLegendreRule {
    explicit GaussLegendreRule(int points);

    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Composite Gauss–Legendre integration of f over [a, b] split into equal
/// panels of width at most max_panel_width.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double max_panel_width, const GaussLegendreRule& rule);

}  // namespace hermw
