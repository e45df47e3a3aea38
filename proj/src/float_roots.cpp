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

#include "hermw/float_roots.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <stdexcept>

namespace hermw {

std::vector<std::complex<double>> complex_roots_float(const IntPolynomial& p) {
    if (p.degree() < 1) throw std::domain_error("root finding needs degree >= 1");

    const auto& c = p.coefficients();
    std::size_t origin_mult = 0;
    while (c[origin_mult] == 0) ++origin_mult;

    std::vector<std::complex<double>> roots(origin_mult, std::complex<double>(0.0, 0.0));

    const std::size_t d = c.size() - 1 - origin_mult;  // degree after removing x^m
    if (d == 1) {
        roots.emplace_back(-c[origin_mult].get_d() / c.back().get_d(), 0.0);
    } else if (d >= 2) {
        const double lead = c.back().get_d();
        Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d),
                                                          static_cast<Eigen::Index>(d));
        for (std::size_t i = 0; i + 1 < d; ++i)
            companion(static_cast<Eigen::Index>(i + 1), static_cast<Eigen::Index>(i)) = 1.0;
        for (std::size_t i = 0; i < d; ++i)
            companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(d - 1)) =
                -c[origin_mult + i].get_d() / lead;
        Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
        if (solver.info() != Eigen::Success)
            throw std::runtime_error("companion-matrix eigenvalue solve failed");
        for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
            roots.push_back(solver.eigenvalues()[i]);
    }

    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return roots;
}

}  // namespace hermw
