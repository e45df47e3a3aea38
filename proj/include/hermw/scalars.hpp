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

#include <gmpxx.h>

#include <ostream>
#include <string>

namespace hermw {

using Integer = mpz_class;
using Rational = mpq_class;

/// Gaussian integer a + b·i with arbitrary-precision parts.
struct GaussianInteger {
    Integer re;
    Integer im;

    GaussianInteger() : re(0), im(0) {}
    GaussianInteger(Integer real, Integer imag) : re(std::move(real)), im(std::move(imag)) {}
    explicit GaussianInteger(long real) : re(real), im(0) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    friend bool operator==(const GaussianInteger& a, const GaussianInteger& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianInteger& a, const GaussianInteger& b) { return !(a == b); }

    GaussianInteger operator-() const { return {-re, -im}; }

    GaussianInteger& operator+=(const GaussianInteger& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianInteger& operator-=(const GaussianInteger& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }

    friend GaussianInteger operator+(GaussianInteger a, const GaussianInteger& b) { return a += b; }
    friend GaussianInteger operator-(GaussianInteger a, const GaussianInteger& b) { return a -= b; }
    friend GaussianInteger operator*(const GaussianInteger& a, const GaussianInteger& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }

    /// The unit i^k for any k (cycle length 4).
    static GaussianInteger i_power(long long k) {
        switch (((k % 4) + 4) % 4) {
            case 0: return {Integer(1), Integer(0)};
            case 1: return {Integer(0), Integer(1)};
            case 2: return {Integer(-1), Integer(0)};
            default: return {Integer(0), Integer(-1)};
        }
    }

    std::string str() const {
        return re.get_str() + (sgn(im) >= 0 ? "+" : "") + im.get_str() + "i";
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussianInteger& g) {
        return os << g.str();
    }
};

inline bool scalar_is_zero(const Integer& x) { return x == 0; }
inline bool scalar_is_zero(const GaussianInteger& x) { return x.is_zero(); }

}  // namespace hermw
