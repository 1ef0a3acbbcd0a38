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

#include <string>
#include <vector>

#include "beukers/gamma.hpp"
#include "beukers/precision.hpp"
#include "beukers/rational.hpp"
#include "beukers/real.hpp"

namespace beukers {

/// p+1Fp series at unit argument, parameters kept as exact rationals so that
/// termination, divergence and pole tests are exact.
struct HypergeometricSpec {
    std::vector<Rational> numerators;
    std::vector<Rational> denominators;

    HypergeometricSpec(std::vector<Rational> num, std::vector<Rational> den)
        : numerators(std::move(num)), denominators(std::move(den)) {
        if (numerators.size() != denominators.size() + 1)
            throw DomainError("only p+1Fp at unit argument is supported");
        if (numerators.empty()) throw DomainError("empty hypergeometric spec");
    }

    std::string str() const {
        auto join = [](const std::vector<Rational>& v) {
            std::string s;
            for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
            return s;
        };
        return std::to_string(numerators.size()) + "F" + std::to_string(denominators.size()) +
               "(" + join(numerators) + "; " + join(denominators) + "; 1)";
    }
};

/// Sum(denominators) - Sum(numerators). The non-terminating series converges
/// at 1 iff this is positive; terms then decay like k^(-1-excess).
inline Rational parametric_excess(const HypergeometricSpec& spec) {
    Rational s;
    for (const auto& b : spec.denominators) s = s + b;
    for (const auto& a : spec.numerators) s = s - a;
    return s;
}

/// Value of a unit-argument series together with its error estimate.
struct SeriesResult {
    Real value;
    Real error_estimate;
    long terms_used = 0;
};

namespace detail {

/// -1 if no numerator parameter is a non-positive integer, otherwise the
/// number of terms K such that the series terminates with last index K
/// (smallest |m| wins).
inline long termination_index(const HypergeometricSpec& spec) {
    long best = -1;
    for (const auto& a : spec.numerators)
        if (a.is_nonpositive_integer()) {
            long k = static_cast<long>(-a.num());
            if (best < 0 || k < best) best = k;
        }
    return best;
}

inline void check_denominator_poles(const HypergeometricSpec& spec, long terminate_at) {
    for (const auto& b : spec.denominators) {
        if (!b.is_nonpositive_integer()) continue;
        long p = static_cast<long>(-b.num());
        if (terminate_at < 0 || p < terminate_at)
            throw PoleError("denominator parameter " + b.str() + " hits a pole in " + spec.str());
    }
}

inline std::vector<Real> series_mul(const std::vector<Real>& a, const std::vector<Real>& b,
                                    size_t n, mpfr_prec_t prec) {
    std::vector<Real> r(n, Real(prec));
    for (size_t i = 0; i < a.size() && i < n; ++i)
        for (size_t j = 0; j < b.size() && i + j < n; ++j)
            r[i + j] = r[i + j] + a[i] * b[j];
    return r;
}

/// r = a / b with b[0] = 1.
inline std::vector<Real> series_div(const std::vector<Real>& a, const std::vector<Real>& b,
                                    size_t n, mpfr_prec_t prec) {
    std::vector<Real> r(n, Real(prec));
    for (size_t m = 0; m < n; ++m) {
        Real acc = m < a.size() ? a[m] : Real(prec);
        for (size_t i = 1; i <= m && i < b.size(); ++i)
            acc = acc - b[i] * r[m - i];
        r[m] = acc;
    }
    return r;
}

/// Coefficients c_0..c_J (c_0 = 1) of the asymptotic expansion
///   t_k = C k^(-1-s) (c_0 + c_1/k + c_2/k^2 + ...),
/// obtained by matching the exact term ratio t_{k+1}/t_k order by order.
/// With sigma(w) = w/(1+w) and Phi(w) = prod(1+alpha w) (1+w)^s / prod(1+beta w),
/// u satisfies u(sigma(w)) = u(w) Phi(w); equating coefficients at order r+1
/// determines c_r.
inline std::vector<Real> tail_coefficients(const HypergeometricSpec& spec, const Real& s,
                                           size_t J, mpfr_prec_t prec) {
    const size_t n = J + 2;
    std::vector<Real> phi{Real::of(1, prec)};
    for (const auto& a : spec.numerators) {
        std::vector<Real> lin{Real::of(1, prec), Real::of(a, prec)};
        phi = series_mul(phi, lin, n, prec);
    }
    // (1+w)^s via the binomial series
    std::vector<Real> bin(n, Real(prec));
    bin[0] = Real::of(1, prec);
    for (size_t i = 1; i < n; ++i)
        bin[i] = bin[i - 1] * (s - static_cast<long>(i - 1)) / static_cast<long>(i);
    phi = series_mul(phi, bin, n, prec);
    for (const auto& b : spec.denominators) {
        std::vector<Real> lin{Real::of(1, prec), Real::of(b, prec)};
        phi = series_div(phi, lin, n, prec);
    }

    std::vector<Real> c{Real::of(1, prec)};
    // binomial row binom(r, i) maintained as exact integers in Real form
    for (size_t r = 1; r <= J; ++r) {
        // [w^{r+1}] (u_r * Phi)
        Real lhs(prec);
        for (size_t j = 0; j < r; ++j) lhs = lhs + c[j] * phi[r + 1 - j];
        // [w^{r+1}] (u_r o sigma): sum_j c_j (-1)^(r+1-j) binom(r, r+1-j)
        Real rhs(prec);
        std::vector<Real> row(r + 1, Real(prec));
        row[0] = Real::of(1, prec);
        for (size_t i = 1; i <= r; ++i) row[i] = row[i - 1] * static_cast<long>(r - i + 1) / static_cast<long>(i);
        for (size_t j = 1; j < r; ++j) {
            size_t i = r + 1 - j;
            Real term = c[j] * row[i];
            if (i % 2 == 1) term = -term;
            rhs = rhs + term;
        }
        c.push_back(-(lhs - rhs) / static_cast<long>(r));
    }
    return c;
}

} // namespace detail

/// Sums a p+1Fp at unit argument to ctx.digits. Terminating series are summed
/// exactly; convergent series get N = max(64, 8 digits) explicit terms plus a
/// tail resummed through Hurwitz zetas of the fitted asymptotic expansion.
inline SeriesResult sum_unit(const HypergeometricSpec& spec, const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.bits() + 24;
    const long wd = ctx.work_digits();

    long K = detail::termination_index(spec);
    detail::check_denominator_poles(spec, K);

    Rational excess = parametric_excess(spec);
    if (K < 0 && !(Rational(0) < excess))
        throw DivergentError(spec.str() + " diverges: parametric excess " + excess.str() + " <= 0");

    std::vector<Real> alphas, betas;
    for (const auto& a : spec.numerators) alphas.push_back(Real::of(a, prec));
    for (const auto& b : spec.denominators) betas.push_back(Real::of(b, prec));

    auto ratio_at = [&](long k) {
        Real num = Real::of(1, prec);
        for (const auto& a : alphas) num = num * (a + k);
        Real den = Real::of(static_cast<long long>(k) + 1, prec);
        for (const auto& b : betas) den = den * (b + k);
        return num / den;
    };

    if (K >= 0) {
        // exact finite sum
        Real sum = Real::of(1, prec);
        Real term = Real::of(1, prec);
        for (long k = 0; k < K; ++k) {
            term = term * ratio_at(k);
            sum = sum + term;
        }
        SeriesResult r{Real(ctx.bits()), Real(ctx.bits()), K + 1};
        mpfr_set(r.value.raw(), sum.raw(), MPFR_RNDN);
        r.error_estimate = abs(r.value) * Real::pow10(-wd, ctx.bits());
        return r;
    }

    const long N = std::max<long>(64, 8 * ctx.digits);
    Real sum(prec);
    Real term = Real::of(1, prec);
    sum = sum + term;
    for (long k = 0; k < N; ++k) {
        term = term * ratio_at(k);
        sum = sum + term;
    }

    // amplitude C = prod Gamma(beta) / prod Gamma(alpha)
    PrecisionContext inner(ctx.digits + 8, ctx.guard);
    Real amp = Real::of(1, prec);
    for (const auto& b : spec.denominators) amp = amp * gamma_real(b, inner);
    for (const auto& a : spec.numerators) amp = amp / gamma_real(a, inner);

    Real s = Real::of(excess, prec);
    const size_t Jcap = static_cast<size_t>(2 * wd + 16);
    size_t Jchunk = static_cast<size_t>(wd / 2 + 12);
    std::vector<Real> coeffs = detail::tail_coefficients(spec, s, Jchunk, prec);

    Real tiny = (abs(sum) + 1) * Real::pow10(-(wd + 6), prec);
    Real tail(prec);
    Real last_inc(prec);
    bool converged = false;
    Rational base = excess + Rational(1);
    for (size_t j = 0; j < Jcap; ++j) {
        if (j >= coeffs.size()) {
            Jchunk = std::min(Jcap, Jchunk * 2);
            coeffs = detail::tail_coefficients(spec, s, Jchunk, prec);
            if (j >= coeffs.size()) break;
        }
        Real zeta_j = hurwitz_zeta(Real::of(base, prec) + static_cast<long>(j),
                                   Real::of(N + 1, prec), inner);
        last_inc = amp * coeffs[j] * zeta_j;
        tail = tail + last_inc;
        if (abs(last_inc) < tiny) { converged = true; break; }
    }
    if (!converged)
        throw NoConvergence("tail resummation stalled for " + spec.str());

    sum = sum + tail;
    SeriesResult r{Real(ctx.bits()), Real(ctx.bits()), N + 1};
    mpfr_set(r.value.raw(), sum.raw(), MPFR_RNDN);
    Real err = abs(last_inc) + abs(sum) * Real::pow10(-wd, prec);
    mpfr_set(r.error_estimate.raw(), err.raw(), MPFR_RNDN);
    return r;
}

/// Parameters of the double integral family. Exponents are x^(n-a1) (1-x)^(n-a2)
/// y^(n-b1) (1-y)^(n-b2) over (1-xy)^(n+1).
struct I2Params {
    Rational a1, a2, b1, b2;
    long n = 0;

    void validate() const {
        Rational lim(n + 1);
        if (!(a1 < lim && a2 < lim && b1 < lim && b2 < lim))
            throw DomainError("I2 exponents must satisfy n - a_i > -1, n - b_i > -1");
        if (!(a2 + b2 < lim))
            throw DomainError("I2 requires a2 + b2 < n + 1 for integrability near (1,1)");
    }

    /// The series identification used at n = 0: C = 3F2(1, 1-a1, 1-b1;
    /// 2-a1-a2, 2-b1-b2; 1).
    HypergeometricSpec c_spec() const {
        return HypergeometricSpec(
            {Rational(1), Rational(1) - a1, Rational(1) - b1},
            {Rational(2) - a1 - a2, Rational(2) - b1 - b2});
    }

    std::string str() const {
        return "(" + a1.str() + "," + a2.str() + "," + b1.str() + "," + b2.str() + ";" +
               std::to_string(n) + ")";
    }
};

/// Parameters of the triple integral family: x^(n+b) (1-x)^(n+c) y^(n+e)
/// (1-y)^(n+a) z^(n+a) (1-z)^(n+c) over (1-(1-xy)z)^(n+d).
struct J3Params {
    Rational a, b, c, d, e;
    long n = 0;

    J3Params shifted() const {
        Rational s(n);
        return J3Params{a + s, b + s, c + s, d + s, e + s, 0};
    }

    /// Integrability of the triple integral: a,b,c,e > -1 after the n-shift,
    /// and near the edge z=1, xy=0 the kernel needs d < c + 2 + min(b, e)
    /// (d < c + 1 is the simpler sufficient condition when the kernel term
    /// stays bounded, but the general bound is the sharp one).
    void validate() const {
        J3Params s = shifted();
        Rational m1(-1);
        if (!(m1 < s.a && m1 < s.b && m1 < s.c && m1 < s.e))
            throw DomainError("J3 requires a,b,c,e > -1 (after shifting by n)");
        Rational bmin = s.b < s.e ? s.b : s.e;
        if (!(s.d < s.c + bmin + Rational(2)))
            throw DomainError("J3 requires d < c + 2 + min(b,e) (after shifting by n) "
                              "for integrability near z=1");
    }

    std::string str() const {
        return "(" + a.str() + "," + b.str() + "," + c.str() + "," + d.str() + "," + e.str() +
               ";" + std::to_string(n) + ")";
    }
};

/// C(a1,a2,b1,b2) through the 3F2 identification.
inline SeriesResult c_value(const I2Params& p, const PrecisionContext& ctx) {
    if (p.n != 0) throw DomainError("the C identification applies at n = 0");
    p.validate();
    return sum_unit(p.c_spec(), ctx);
}

namespace detail {

/// One of the two 4F3 terms of the reduction, with its gamma prefactor.
/// Returns zero when a reciprocal prefactor gamma sits at a pole.
struct ReductionTerm {
    HypergeometricSpec spec;
    std::vector<Rational> gamma_num; // Gamma factors multiplying
    std::vector<Rational> gamma_den; // Gamma factors dividing
};

inline Real eval_reduction_term(const ReductionTerm& t, const PrecisionContext& ctx,
                                SeriesResult* series_out) {
    const mpfr_prec_t prec = ctx.bits();
    for (const auto& g : t.gamma_den)
        if (g.is_nonpositive_integer()) {
            if (series_out) series_out->terms_used = 0;
            return Real(prec); // reciprocal gamma vanishes; whole term is zero
        }
    for (const auto& g : t.gamma_num)
        if (g.is_nonpositive_integer())
            throw PoleError("reduction prefactor Gamma(" + g.str() + ") is at a pole");
    Real f = Real::of(1, prec);
    for (const auto& g : t.gamma_num) f = f * gamma_real(g, ctx);
    for (const auto& g : t.gamma_den) f = f / gamma_real(g, ctx);
    SeriesResult sr = sum_unit(t.spec, ctx);
    if (series_out) *series_out = sr;
    return f * sr.value;
}

} // namespace detail

/// The two 4F3 specs of the hypergeometric reduction of J3 (applied to the
/// n-shifted parameters). Exposed so the excess-1 property can be checked
/// symbolically.
inline std::pair<HypergeometricSpec, HypergeometricSpec> j3_reduction_specs(const J3Params& p) {
    J3Params q = p.shifted();
    const Rational one(1), two(2), three(3);
    HypergeometricSpec f1({q.a + one, q.b + one, q.d, q.e + one},
                          {q.d - q.c, q.a + q.e + two, q.b + q.c + two});
    HypergeometricSpec f2(
        {q.a + q.c - q.d + two, q.b + q.c - q.d + two, q.c + one, q.e + q.c - q.d + two},
        {q.c - q.d + two, q.a + q.e + q.c - q.d + three, q.b + two * q.c - q.d + three});
    return {f1, f2};
}

/// J3 by the two-term 4F3 reduction, valid when c-d is not an integer:
///   J3 = pi/sin(pi(d-c)) * (U1 - U2)
/// with
///   U1 = G(a+1)^2 G(b+1) G(c+1) G(e+1)
///        / (G(d-c) G(a+e+2) G(b+c+2) G(a+c-d+2)) * 4F3(...)
///   U2 = G(a+1) G(c+1)^2 G(b+c-d+2) G(e+c-d+2)
///        / (G(d) G(c-d+2) G(a+e+c-d+3) G(b+2c-d+3)) * 4F3(...),
/// everything evaluated on the n-shifted parameters.
inline SeriesResult j3_reduced(const J3Params& p, const PrecisionContext& ctx) {
    if ((p.c - p.d).is_integer())
        throw ReductionInapplicable("c - d = " + (p.c - p.d).str() +
                                    " is an integer; use the contour or quadrature route");
    J3Params q = p.shifted();
    {
        Rational m1(-1);
        if (!(m1 < q.a && m1 < q.b && m1 < q.c && m1 < q.e))
            throw DomainError("J3 reduction requires a,b,c,e > -1 (after shifting by n)");
    }
    auto [f1, f2] = j3_reduction_specs(p);
    const Rational one(1), two(2), three(3);

    detail::ReductionTerm t1{
        f1,
        {q.a + one, q.a + one, q.b + one, q.c + one, q.e + one},
        {q.d - q.c, q.a + q.e + two, q.b + q.c + two, q.a + q.c - q.d + two}};
    detail::ReductionTerm t2{
        f2,
        {q.a + one, q.c + one, q.c + one, q.b + q.c - q.d + two, q.e + q.c - q.d + two},
        {q.d, q.c - q.d + two, q.a + q.e + q.c - q.d + three, q.b + two * q.c - q.d + three}};

    SeriesResult s1, s2;
    Real u1 = detail::eval_reduction_term(t1, ctx, &s1);
    Real u2 = detail::eval_reduction_term(t2, ctx, &s2);

    const mpfr_prec_t prec = ctx.bits();
    Real factor = Real::pi(prec) / sin_pi(q.d - q.c, prec);
    SeriesResult out{factor * (u1 - u2),
                     Real(prec), s1.terms_used + s2.terms_used};
    out.error_estimate = abs(factor) * (s1.error_estimate + s2.error_estimate) +
                         abs(out.value) * Real::pow10(-ctx.work_digits(), prec);
    return out;
}

/// K(a,b,c,d,e) = J3(a,b,c,d+1,e;0) / J3(a,b,c,d,e;0), both sides through the
/// reduction at a slightly deepened context before the final division.
inline Real k_value(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                    const Rational& e, const PrecisionContext& ctx) {
    PrecisionContext work(ctx.digits + 5, ctx.guard + 5);
    J3Params den{a, b, c, d, e, 0};
    J3Params num{a, b, c, d + Rational(1), e, 0};
    Real dv = j3_reduced(den, work).value;
    Real nv = j3_reduced(num, work).value;
    if (abs(dv) < Real::pow10(-ctx.digits, work.bits()))
        throw DivisionByNearZero("denominator J3" + den.str() + " is below 10^-digits");
    Real out(ctx.bits());
    mpfr_set(out.raw(), (nv / dv).raw(), MPFR_RNDN);
    return out;
}

} // namespace beukers
