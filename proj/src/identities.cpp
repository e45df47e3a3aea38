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

#include "hermw/identities.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hermw/poly_gcd.hpp"
#include "hermw/quadrature.hpp"
#include "hermw/sturm.hpp"
#include "hermw/wronskian.hpp"

namespace hermw {

namespace {

IdentityVerdict compare_sides(std::string name, std::string instance, const IntPolynomial& lhs,
                              const IntPolynomial& rhs) {
    IdentityVerdict v;
    v.name = std::move(name);
    v.instance = std::move(instance);
    v.discrepancy = lhs - rhs;
    v.holds_exactly = v.discrepancy.is_zero();
    v.sign_flip_detected = !v.holds_exactly && (lhs + rhs).is_zero();
    return v;
}

IntPolynomial x_times(const IntPolynomial& p) {
    return IntPolynomial::monomial(Integer(1), 1) * p;
}

/// −Ω·y″ + 2(x·Ω + Ω′)·y′ + (2(k+u)·Ω − 2x·Ω′ − Ω″)·y − 2n·Ω·y
IntPolynomial eigen_residual(const IntPolynomial& omega, const IntPolynomial& y, long long k,
                             long long u, long long n) {
    const IntPolynomial omega1 = derivative(omega);
    const IntPolynomial omega2 = derivative(omega1);
    const IntPolynomial y1 = derivative(y);
    const IntPolynomial y2 = derivative(y1);
    const Integer two(2);
    IntPolynomial res = -(omega * y2);
    res += two * ((x_times(omega) + omega1) * y1);
    IntPolynomial zero_order =
        Integer(static_cast<long>(2 * (k + u))) * omega - two * x_times(omega1) - omega2;
    res += zero_order * y;
    res -= Integer(static_cast<long>(2 * n)) * (omega * y);
    return res;
}

}  // namespace

IdentityVerdict sylvester_check(const PolyMatrix& m, std::size_t row0, std::size_t row1,
                                std::size_t col0, std::size_t col1) {
    if (!m.is_square() || m.rows() < 2)
        throw std::domain_error("Sylvester check needs a square matrix of size >= 2");
    const std::size_t k = m.rows();
    if (!(1 <= row0 && row0 < row1 && row1 <= k) || !(1 <= col0 && col0 < col1 && col1 <= k))
        throw std::domain_error("Sylvester check indices out of range");

    const std::size_t r0 = row0 - 1, r1 = row1 - 1, c0 = col0 - 1, c1 = col1 - 1;
    auto minor = [&](std::size_t r, std::size_t c) {
        const std::size_t rows[] = {r}, cols[] = {c};
        return det_fraction_free(remove_rows_cols(m, rows, cols));
    };
    IntPolynomial both;
    if (k == 2) {
        both = IntPolynomial(Integer(1));  // 0×0 determinant
    } else {
        const std::size_t rows[] = {r0, r1}, cols[] = {c0, c1};
        both = det_fraction_free(remove_rows_cols(m, rows, cols));
    }

    const IntPolynomial lhs = det_fraction_free(m) * both;
    const IntPolynomial rhs = minor(r0, c0) * minor(r1, c1) - minor(r0, c1) * minor(r1, c0);

    std::ostringstream inst;
    inst << k << "x" << k << " matrix, rows (" << row0 << "," << row1 << "), cols (" << col0 << ","
         << col1 << ")";
    return compare_sides("sylvester", inst.str(), lhs, rhs);
}

IdentityVerdict wronskian_recurrence_check(int p, int q) {
    if (p < 1 || q < 1) throw std::domain_error("recurrence check needs p >= 1, q >= 1");
    const IntPolynomial big = wronskian(segment(p, q + 1)).polynomial;
    const IntPolynomial inner = wronskian(segment(p + 1, q - 1)).polynomial;
    const IntPolynomial upper = wronskian(segment(p + 1, q)).polynomial;
    const IntPolynomial lower = wronskian(segment(p, q)).polynomial;

    const IntPolynomial lhs = inner * big;
    const IntPolynomial rhs = upper * derivative(lower) - derivative(upper) * lower;

    std::ostringstream inst;
    inst << "p=" << p << ", q=" << q;
    return compare_sides("wronskian_recurrence", inst.str(), lhs, rhs);
}

Integer duality_denominator(const IndexSet& f) {
    const unsigned long k = f.size();
    Integer d;
    mpz_ui_pow_ui(d.get_mpz_t(), 2, k * (k - 1) / 2);
    for (int e : f) {
        Integer fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(e));
        d *= fact;
    }
    return d;
}

IdentityVerdict duality_check(const IndexSet& f) {
    if (f.empty()) throw std::domain_error("duality check needs a non-empty set");
    const IndexSet dual = involution(f);
    const long long w = wronskian_degree(f);
    const Integer denom_f = duality_denominator(f);
    const Integer denom_dual = duality_denominator(dual);

    const GaussPolynomial lhs = to_gauss(denom_dual * wronskian(f).polynomial);
    GaussPolynomial rhs = substitute_neg_ix(wronskian(dual).polynomial);
    rhs *= GaussianInteger::i_power(w);
    rhs *= GaussianInteger(denom_f, Integer(0));

    const GaussPolynomial diff = lhs - rhs;
    IdentityVerdict v;
    v.name = "duality";
    std::ostringstream inst;
    inst << "F=" << f.str() << ", I(F)=" << dual.str() << ", w_F=" << w;
    v.instance = inst.str();
    v.discrepancy = real_part(diff);
    v.discrepancy_imag = imag_part(diff);
    v.holds_exactly = v.discrepancy.is_zero() && v.discrepancy_imag.is_zero();
    const GaussPolynomial sum = lhs + rhs;
    v.sign_flip_detected = !v.holds_exactly && real_part(sum).is_zero() && imag_part(sum).is_zero();
    return v;
}

IdentityVerdict eigen_ode_check(const IndexSet& f, long long n) {
    const long long u = spectrum_offset(f);
    if (n < u) throw std::domain_error("eigen-equation index below the spectrum offset");
    const IntPolynomial omega = wronskian(f).polynomial;
    const IntPolynomial y = exceptional_hermite(f, n);
    const IntPolynomial res =
        eigen_residual(omega, y, static_cast<long long>(f.size()), u, n);

    IdentityVerdict v;
    v.name = "eigen_ode";
    std::ostringstream inst;
    inst << "F=" << f.str() << ", n=" << n << (in_spectrum(f, n) ? "" : " (outside spectrum)");
    v.instance = inst.str();
    v.discrepancy = res;
    v.holds_exactly = res.is_zero();
    return v;
}

IdentityVerdict segment_ode_check(int p, int q) {
    if (p < 1 || q < 0) throw std::domain_error("segment equation needs p >= 1, q >= 0");
    const IntPolynomial omega = wronskian(segment(p + 1, q)).polynomial;
    const IntPolynomial y = wronskian(segment(p, q + 1)).polynomial;
    const long long n = static_cast<long long>(p) * (q + 1);
    const IntPolynomial res =
        eigen_residual(omega, y, q, static_cast<long long>(p) * q, n);

    IdentityVerdict v;
    v.name = "segment_ode";
    std::ostringstream inst;
    inst << "p=" << p << ", q=" << q;
    v.instance = inst.str();
    v.discrepancy = res;
    v.holds_exactly = res.is_zero();
    return v;
}

bool admissible(const IndexSet& f) {
    if (f.empty()) return true;
    for (int x = 0; x <= f.max(); ++x) {
        Integer prod = 1;
        for (int e : f) prod *= Integer(x - e);
        if (sgn(prod) < 0) return false;
    }
    return true;
}

IdentityVerdict krein_adler_check(const IndexSet& f) {
    const bool adm = admissible(f);
    const IntPolynomial omega = wronskian(f).polynomial;
    const int real_roots = sturm_count_real_line(squarefree_part(omega).squarefree);
    const bool equivalence = adm == (real_roots == 0);

    IdentityVerdict v;
    v.name = "krein_adler";
    std::ostringstream inst;
    inst << "F=" << f.str() << ", admissible=" << (adm ? "true" : "false")
         << ", real_roots=" << real_roots;
    v.instance = inst.str();
    // Indicator discrepancy: the two sides are booleans, not polynomials.
    v.discrepancy = equivalence ? IntPolynomial() : IntPolynomial(Integer(1));
    v.holds_exactly = equivalence;
    return v;
}

OrthogonalityResult orthogonality_numeric_check(const IndexSet& f, long long n1, long long n2,
                                                double tolerance) {
    if (!admissible(f))
        throw std::domain_error("orthogonality weight needs an admissible set");
    if (n1 == n2) throw std::domain_error("orthogonality needs two distinct indices");
    if (!in_spectrum(f, n1) || !in_spectrum(f, n2))
        throw std::domain_error("orthogonality indices must lie in the spectrum");
    if (!(tolerance > 0)) throw std::domain_error("tolerance must be positive");

    const IntPolynomial omega = wronskian(f).polynomial;
    const IntPolynomial y1 = exceptional_hermite(f, n1);
    const IntPolynomial y2 = exceptional_hermite(f, n2);

    auto to_doubles = [](const IntPolynomial& p) {
        std::vector<double> c;
        c.reserve(p.coefficients().size());
        for (const auto& z : p.coefficients()) c.push_back(z.get_d());
        return c;
    };
    const std::vector<double> oc = to_doubles(omega), c1 = to_doubles(y1), c2 = to_doubles(y2);
    auto horner = [](const std::vector<double>& c, double x) {
        double acc = 0.0;
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    };
    auto abs_sum_below = [](const std::vector<double>& c, std::size_t limit) {
        double s = 0.0;
        for (std::size_t i = 0; i < c.size() && i < limit; ++i) s += std::abs(c[i]);
        return s;
    };
    auto abs_sum = [&](const std::vector<double>& c) { return abs_sum_below(c, c.size()); };

    // Tail control: for |x| >= max(x0, sqrt(m')) with
    //   x0 = max(1, 2·Σ_{i<deg}|Ω_i| / |lc(Ω)|)
    // the weight denominator satisfies |Ω(x)| >= |lc|·x^deg / 2, so
    //   ∫_{|x|>=R} |y1·y2|·e^{−x²}/Ω² <= (8A/lc²)·R^{m'−1}·e^{−R²},
    // with A the product of coefficient L1 norms and m' = max(0, d1+d2−2·degΩ).
    const double lc = std::abs(oc.back());
    const double x0 = std::max(1.0, 2.0 * abs_sum_below(oc, oc.size() - 1) / lc);
    const double amp = abs_sum(c1) * abs_sum(c2);
    const int mprime =
        std::max(0, static_cast<int>(c1.size() + c2.size()) - 2 -
                        2 * static_cast<int>(oc.size() - 1));
    auto tail_bound = [&](double r) {
        return 8.0 * amp / (lc * lc) * std::pow(r, mprime - 1) * std::exp(-r * r);
    };

    const GaussLegendreRule rule(16);
    auto weighted = [&](const std::vector<double>& a, const std::vector<double>& b, double x) {
        const double den = horner(oc, x);
        return horner(a, x) * horner(b, x) * std::exp(-x * x) / (den * den);
    };

    OrthogonalityResult out;
    out.tolerance = tolerance;
    double radius = std::max({x0, std::sqrt(static_cast<double>(mprime)), 6.0});
    for (int attempt = 0; attempt < 64; ++attempt) {
        const double i12 =
            integrate([&](double x) { return weighted(c1, c2, x); }, -radius, radius, 0.25, rule);
        const double i11 =
            integrate([&](double x) { return weighted(c1, c1, x); }, -radius, radius, 0.25, rule);
        const double i22 =
            integrate([&](double x) { return weighted(c2, c2, x); }, -radius, radius, 0.25, rule);
        out.integral = i12;
        out.norm1 = std::sqrt(i11);
        out.norm2 = std::sqrt(i22);
        out.radius = radius;
        out.tail_bound = tail_bound(radius);
        if (out.tail_bound <= tolerance * out.norm1 * out.norm2 / 10.0) break;
        radius += 1.0;
    }
    out.relative = std::abs(out.integral) / (out.norm1 * out.norm2);
    out.orthogonal = out.relative <= tolerance;
    return out;
}

}  // namespace hermw
