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

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hermw/scalars.hpp"

namespace hermw {

/// Dense univariate polynomial with exact coefficients, ascending by power.
///
/// Canonical form: no trailing zero coefficients are stored; the zero
/// polynomial stores an empty coefficient list and reports degree() == -1.
template <class Coeff>
class Polynomial {
   public:
    Polynomial() = default;

    explicit Polynomial(Coeff constant) {
        if (!scalar_is_zero(constant)) coeffs_.push_back(std::move(constant));
    }

    explicit Polynomial(std::vector<Coeff> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
        trim();
    }

    Polynomial(std::initializer_list<Coeff> ascending_coeffs)
        : coeffs_(ascending_coeffs) {
        trim();
    }

    static Polynomial monomial(Coeff c, std::size_t power) {
        if (scalar_is_zero(c)) return {};
        std::vector<Coeff> v(power + 1);
        v[power] = std::move(c);
        return Polynomial(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree of the polynomial; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<Coeff>& coefficients() const { return coeffs_; }

    /// Coefficient of x^i (zero beyond the degree).
    Coeff coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Coeff(0);
    }

    const Coeff& leading() const {
        if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
        return coeffs_.back();
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Coeff> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(prod));
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial& operator*=(const Coeff& s) {
        if (scalar_is_zero(s)) {
            coeffs_.clear();
            return *this;
        }
        for (auto& c : coeffs_) c = c * s;
        trim();
        return *this;
    }

    friend Polynomial operator*(Polynomial p, const Coeff& s) { return p *= s; }
    friend Polynomial operator*(const Coeff& s, Polynomial p) { return p *= s; }

    /// Horner evaluation; Value must absorb Coeff (e.g. Integer or Rational).
    template <class Value>
    Value evaluate(const Value& x) const {
        Value acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + Value(coeffs_[i]);
        return acc;
    }

    std::string str(const std::string& var = "x") const;

   private:
    void trim() {
        while (!coeffs_.empty() && scalar_is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<Coeff> coeffs_;
};

using IntPolynomial = Polynomial<Integer>;
using GaussPolynomial = Polynomial<GaussianInteger>;

template <class Coeff>
Polynomial<Coeff> derivative(const Polynomial<Coeff>& p) {
    if (p.degree() <= 0) return {};
    std::vector<Coeff> d(static_cast<std::size_t>(p.degree()));
    for (std::size_t i = 1; i < p.coefficients().size(); ++i)
        d[i - 1] = p.coefficients()[i] * Coeff(static_cast<long>(i));
    return Polynomial<Coeff>(std::move(d));
}

template <class Coeff>
Polynomial<Coeff> derivative(const Polynomial<Coeff>& p, unsigned order) {
    Polynomial<Coeff> r = p;
    for (unsigned i = 0; i < order && !r.is_zero(); ++i) r = derivative(r);
    return r;
}

/// Substitution p(a·x + b), exact.
template <class Coeff>
Polynomial<Coeff> compose_linear(const Polynomial<Coeff>& p, const Coeff& a, const Coeff& b) {
    Polynomial<Coeff> lin({b, a});
    Polynomial<Coeff> acc;
    for (std::size_t i = p.coefficients().size(); i-- > 0;)
        acc = acc * lin + Polynomial<Coeff>(p.coefficients()[i]);
    return acc;
}

inline GaussPolynomial to_gauss(const IntPolynomial& p) {
    std::vector<GaussianInteger> c;
    c.reserve(p.coefficients().size());
    for (const auto& x : p.coefficients()) c.emplace_back(x, Integer(0));
    return GaussPolynomial(std::move(c));
}

inline IntPolynomial real_part(const GaussPolynomial& p) {
    std::vector<Integer> c;
    c.reserve(p.coefficients().size());
    for (const auto& g : p.coefficients()) c.push_back(g.re);
    return IntPolynomial(std::move(c));
}

inline IntPolynomial imag_part(const GaussPolynomial& p) {
    std::vector<Integer> c;
    c.reserve(p.coefficients().size());
    for (const auto& g : p.coefficients()) c.push_back(g.im);
    return IntPolynomial(std::move(c));
}

inline bool is_real(const GaussPolynomial& p) {
    for (const auto& g : p.coefficients())
        if (g.im != 0) return false;
    return true;
}

/// q(x) = p(−i·x): coefficient c_n picks up the unit (−i)^n.
inline GaussPolynomial substitute_neg_ix(const IntPolynomial& p) {
    std::vector<GaussianInteger> c;
    c.reserve(p.coefficients().size());
    for (std::size_t n = 0; n < p.coefficients().size(); ++n) {
        GaussianInteger unit = GaussianInteger::i_power(-static_cast<long long>(n));
        c.push_back(unit * GaussianInteger(p.coefficients()[n], Integer(0)));
    }
    return GaussPolynomial(std::move(c));
}

template <class Coeff>
std::string Polynomial<Coeff>::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (scalar_is_zero(coeffs_[i])) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs_[i] << ")";
        if (i == 1)
            os << "*" << var;
        else if (i > 1)
            os << "*" << var << "^" << i;
    }
    return os.str();
}

}  // namespace hermw
