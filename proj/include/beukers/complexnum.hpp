// Copyright (c) 2026 beukers contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "beukers/real.hpp"

namespace beukers {

/// Complex number as a pair of Reals.
struct Complex {
    Real re;
    Real im;

    explicit Complex(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    static Complex of(const Real& r) { return Complex(r, Real(r.prec())); }

    mpfr_prec_t prec() const { return re.prec() > im.prec() ? re.prec() : im.prec(); }

    std::string to_decimal(long digits10) const {
        return "(" + re.to_decimal(digits10) + ", " + im.to_decimal(digits10) + ")";
    }
};

inline Complex conj(const Complex& z) { return Complex(z.re, -z.im); }

inline Complex operator+(const Complex& a, const Complex& b) {
    return Complex(a.re + b.re, a.im + b.im);
}
inline Complex operator-(const Complex& a, const Complex& b) {
    return Complex(a.re - b.re, a.im - b.im);
}
inline Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
inline Complex operator*(const Complex& a, const Complex& b) {
    return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}
inline Complex operator*(const Complex& a, const Real& b) {
    return Complex(a.re * b, a.im * b);
}
inline Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return Complex((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
}
inline Complex operator/(const Complex& a, const Real& b) {
    return Complex(a.re / b, a.im / b);
}

inline Real abs(const Complex& z) { return sqrt(z.re * z.re + z.im * z.im); }

inline Complex exp(const Complex& z) {
    Real m = exp(z.re);
    Real s(z.im.prec()), c(z.im.prec());
    sin_cos(s, c, z.im);
    return Complex(m * c, m * s);
}

/// Principal branch.
inline Complex log(const Complex& z) {
    Real half(z.prec());
    mpfr_set_d(half.raw(), 0.5, MPFR_RNDN);
    return Complex(half * log(z.re * z.re + z.im * z.im), atan2(z.im, z.re));
}

/// z^w = exp(w log z), principal branch.
inline Complex pow(const Complex& z, const Complex& w) { return exp(w * log(z)); }

/// sin z = sin x cosh y + i cos x sinh y.
inline Complex sin(const Complex& z) {
    Real s(z.re.prec()), c(z.re.prec()), sh(z.im.prec()), ch(z.im.prec());
    sin_cos(s, c, z.re);
    sinh_cosh(sh, ch, z.im);
    return Complex(s * ch, c * sh);
}

} // namespace beukers
