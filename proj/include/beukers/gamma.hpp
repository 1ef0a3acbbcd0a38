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

#include <map>
#include <mutex>
#include <vector>

#include "beukers/complexnum.hpp"
#include "beukers/precision.hpp"
#include "beukers/real.hpp"

namespace beukers {

/// Gamma of a real argument, accurate to ctx.digits.
/// Raises PoleError on 0, -1, -2, ...
inline Real gamma_real(const Real& x, const PrecisionContext& ctx) {
    if (x.is_integer() && x.sign() <= 0)
        throw PoleError("gamma pole at " + x.to_decimal(8));
    Real in(ctx.bits());
    mpfr_set(in.raw(), x.raw(), MPFR_RNDN);
    Real r(ctx.bits());
    mpfr_gamma(r.raw(), in.raw(), MPFR_RNDN);
    return r;
}

inline Real gamma_real(const Rational& q, const PrecisionContext& ctx) {
    if (q.is_nonpositive_integer())
        throw PoleError("gamma pole at " + q.str());
    return gamma_real(Real::of(q, ctx.bits()), ctx);
}

namespace detail {

/// Spouge coefficients c_0..c_{a-1} for the approximation
///   Gamma(w+1) = (w+a)^(w+1/2) e^(-(w+a)) [c_0 + sum_k c_k/(w+k) + eps],
/// with |eps| <= a^(-1/2) (2pi)^(-(a+1/2)) relative, valid for Re w >= 0.
/// The parameter is a = ceil(D ln10 / ln 2pi) + 2 for D requested digits.
struct SpougeTable {
    long a;
    std::vector<Real> c;
};

inline const SpougeTable& spouge_table(long a, mpfr_prec_t prec) {
    static std::mutex mu;
    static std::map<std::pair<long, mpfr_prec_t>, SpougeTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(a, prec);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    SpougeTable t;
    t.a = a;
    t.c.reserve(static_cast<size_t>(a));
    Real two_pi = Real::pi(prec) * 2;
    t.c.push_back(sqrt(two_pi));
    Real fact = Real::of(1, prec);
    for (long k = 1; k < a; ++k) {
        if (k > 1) fact = fact * (k - 1);
        Real ak = Real::of(a - k, prec);
        Real half(prec);
        mpfr_set_d(half.raw(), static_cast<double>(k) - 0.5, MPFR_RNDN);
        Real ck = exp(half * log(ak) + ak) / fact;
        if (k % 2 == 0) ck = -ck;
        t.c.push_back(std::move(ck));
    }
    return cache.emplace(key, std::move(t)).first->second;
}

inline long spouge_param(long work_digits) {
    return static_cast<long>(std::ceil(static_cast<double>(work_digits) * 2.302585092994046 /
                                       1.8378770664093453)) + 2;
}

/// Core sum for Re w >= 0.
inline Complex spouge_core(const Complex& w, const SpougeTable& t, mpfr_prec_t prec) {
    Complex s = Complex::of(t.c[0]);
    for (long k = 1; k < t.a; ++k) {
        Complex d(w.re + k, w.im);
        s = s + Complex(t.c[static_cast<size_t>(k)] / (d.re * d.re + d.im * d.im), Real(prec)) * conj(d);
    }
    Complex wa(w.re + t.a, w.im);
    Real half(prec);
    mpfr_set_d(half.raw(), 0.5, MPFR_RNDN);
    Complex expo(w.re + half, w.im);
    return exp(expo * log(wa) - wa) * s;
}

inline Complex gamma_complex_at(const Complex& z, mpfr_prec_t prec, long work_digits) {
    const SpougeTable& t = spouge_table(spouge_param(work_digits), prec);
    Real half(prec);
    mpfr_set_d(half.raw(), 0.5, MPFR_RNDN);
    if (z.re >= 1 + half) {
        return spouge_core(Complex(z.re - 1, z.im), t, prec);
    }
    if (!(z.re < half)) {
        // Gamma(z) = Gamma(z+1)/z with the core on w = z (Re w >= 1/2).
        return spouge_core(z, t, prec) / z;
    }
    // Reflection keeps the core on its validated region.
    Real pi = Real::pi(prec);
    Complex pz(pi * z.re, pi * z.im);
    Complex s = sin(pz);
    Complex g = gamma_complex_at(Complex(1 - z.re, -z.im), prec, work_digits);
    return Complex(pi, Real(prec)) / (s * g);
}

} // namespace detail

/// Gamma of a complex argument via a parameterized Spouge scheme; the
/// parameter follows from ctx.digits so the truncation error stays below the
/// target. Arguments left of Re z = 1/2 are routed through reflection first.
/// Satisfies Gamma(conj z) = conj Gamma(z) bit-for-bit.
inline Complex gamma_complex(const Complex& z, const PrecisionContext& ctx) {
    if (z.im.is_zero() && z.re.is_integer() && z.re.sign() <= 0)
        throw PoleError("gamma pole at " + z.re.to_decimal(8));
    // A few extra digits absorb the mild cancellation in the Spouge sum.
    long wd = ctx.work_digits() + 5;
    mpfr_prec_t prec = ctx.bits() + 24;
    Complex in(prec);
    mpfr_set(in.re.raw(), z.re.raw(), MPFR_RNDN);
    mpfr_set(in.im.raw(), z.im.raw(), MPFR_RNDN);
    Complex g = detail::gamma_complex_at(in, prec, wd);
    Complex out(ctx.bits());
    mpfr_set(out.re.raw(), g.re.raw(), MPFR_RNDN);
    mpfr_set(out.im.raw(), g.im.raw(), MPFR_RNDN);
    return out;
}

namespace detail {

/// B_{2j}/(2j)! = (-1)^(j+1) 2 zeta(2j) / (2pi)^(2j), j = 1..n, at `prec`.
inline std::vector<Real> bernoulli_factors(long n, mpfr_prec_t prec) {
    static std::mutex mu;
    static std::map<mpfr_prec_t, std::vector<Real>> cache;
    std::lock_guard<std::mutex> lock(mu);
    std::vector<Real>& v = cache[prec];
    if (static_cast<long>(v.size()) < n) {
        Real two_pi_sq = pow(Real::pi(prec) * 2, 2);
        Real p = Real::of(1, prec);
        for (long j = 1; j <= static_cast<long>(v.size()); ++j) p = p / two_pi_sq;
        for (long j = static_cast<long>(v.size()) + 1; j <= n; ++j) {
            p = p / two_pi_sq;
            Real z(prec);
            mpfr_zeta_ui(z.raw(), static_cast<unsigned long>(2 * j), MPFR_RNDN);
            Real f = z * p * 2;
            if (j % 2 == 0) f = -f;
            v.push_back(std::move(f));
        }
    }
    std::vector<Real> out(v.begin(), v.begin() + n);
    return out;
}

} // namespace detail

/// Hurwitz zeta(s, a) = sum_{k>=0} (k+a)^(-s) for s > 1, a > 0, by
/// Euler-Maclaurin with the correction tail driven to the working precision.
inline Real hurwitz_zeta(const Real& s, const Real& a, const PrecisionContext& ctx) {
    if (!(s > 1)) throw DomainError("hurwitz_zeta requires s > 1");
    if (!(a > 0)) throw DomainError("hurwitz_zeta requires a > 0");
    mpfr_prec_t prec = ctx.bits() + 16;
    long wd = ctx.work_digits();
    Real sw(prec), aw(prec);
    mpfr_set(sw.raw(), s.raw(), MPFR_RNDN);
    mpfr_set(aw.raw(), a.raw(), MPFR_RNDN);

    // Cutoff so the correction terms decay like (|s|+2j)^2/(2pi(a+N))^2.
    double ad = aw.to_double();
    double sd = sw.to_double();
    long N = 0;
    double want = 0.42 * static_cast<double>(wd) + 0.2 * sd + 8.0;
    if (ad < want) N = static_cast<long>(std::ceil(want - ad));

    const long kMaxBernoulli = 4 * wd + 64;
    for (int attempt = 0; attempt < 6; ++attempt) {
        Real sum(prec);
        for (long k = 0; k < N; ++k)
            sum = sum + exp(-sw * log(aw + k));
        Real x = aw + N;
        Real lx = log(x);
        Real xms = exp(-sw * lx);                     // x^(-s)
        sum = sum + x * xms / (sw - 1);               // x^(1-s)/(s-1)
        Real halfterm = xms / 2;
        sum = sum + halfterm;

        Real x2 = x * x;
        Real r = sw * xms / x;                        // poch(s,1) x^(-s-1)
        Real tiny = abs(sum) / Real::pow10(wd + 6, prec);
        bool converged = false;
        Real prev_mag(prec);
        long j = 1;
        std::vector<Real> bf = detail::bernoulli_factors(64, prec);
        while (true) {
            if (j > static_cast<long>(bf.size()))
                bf = detail::bernoulli_factors(2 * j, prec);
            Real term = bf[static_cast<size_t>(j - 1)] * r;
            sum = sum + term;
            Real mag = abs(term);
            if (mag < tiny) { converged = true; break; }
            if (j > 4 && mag > prev_mag) break;       // asymptotic tail turned; N too small
            if (j > kMaxBernoulli) break;
            prev_mag = mag;
            r = r * (sw + (2 * j - 1)) * (sw + (2 * j)) / x2;
            ++j;
        }
        if (converged) {
            Real out(ctx.bits());
            mpfr_set(out.raw(), sum.raw(), MPFR_RNDN);
            return out;
        }
        N = 2 * N + 16;
    }
    throw NoConvergence("hurwitz_zeta Euler-Maclaurin tail did not settle");
}

inline Real hurwitz_zeta(const Rational& s, const Rational& a, const PrecisionContext& ctx) {
    return hurwitz_zeta(Real::of(s, ctx.bits()), Real::of(a, ctx.bits()), ctx);
}

} // namespace beukers
