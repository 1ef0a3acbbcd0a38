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

#include <mpfr.h>

#include <string>
#include <utility>

#include "beukers/errors.hpp"
#include "beukers/precision.hpp"
#include "beukers/rational.hpp"

namespace beukers {

/// Arbitrary-precision real number. Thin RAII wrapper around mpfr_t; each
/// value carries its own precision, binary operations produce results at the
/// wider of the two operand precisions, rounding to nearest throughout.
class Real {
public:
    explicit Real(mpfr_prec_t prec = 64) {
        mpfr_init2(v_, prec < MPFR_PREC_MIN ? MPFR_PREC_MIN : prec);
        mpfr_set_zero(v_, 1);
    }
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real of(long long n, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_si(r.v_, static_cast<long>(n), MPFR_RNDN);
        return r;
    }
    static Real of(const Rational& q, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_si(r.v_, static_cast<long>(q.num()), MPFR_RNDN);
        if (q.den() != 1) mpfr_div_si(r.v_, r.v_, static_cast<long>(q.den()), MPFR_RNDN);
        return r;
    }
    /// Parses a decimal string (as produced by to_decimal()).
    static Real parse(const std::string& s, mpfr_prec_t prec) {
        Real r(prec);
        if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw ParseError("not a decimal number: '" + s + "'");
        return r;
    }
    static Real pi(mpfr_prec_t prec) {
        Real r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    static Real pow10(long e, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_ui(r.v_, 10, MPFR_RNDN);
        mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_negative() const { return mpfr_sgn(v_) < 0; }
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    /// Full-precision decimal serialization, round-trippable through parse()
    /// to within 1 ulp. Format: -d.ddddde±xx.
    std::string to_decimal() const {
        long d = static_cast<long>(static_cast<double>(prec()) * 0.30102999566398120) + 3;
        return to_decimal(d);
    }
    std::string to_decimal(long digits10) const {
        if (mpfr_nan_p(v_)) return "nan";
        if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
        if (mpfr_zero_p(v_)) return "0";
        if (digits10 < 2) digits10 = 2;
        mpfr_exp_t e = 0;
        char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits10), v_, MPFR_RNDN);
        std::string mant(s);
        mpfr_free_str(s);
        std::string sign;
        if (!mant.empty() && mant[0] == '-') {
            sign = "-";
            mant.erase(0, 1);
        }
        std::string out = sign + mant.substr(0, 1) + "." + mant.substr(1);
        out += "e" + std::to_string(static_cast<long long>(e) - 1);
        return out;
    }

    friend void swap(Real& a, Real& b) noexcept { mpfr_swap(a.v_, b.v_); }

private:
    mpfr_t v_;
};

namespace detail {
inline mpfr_prec_t join(const Real& a, const Real& b) {
    return a.prec() > b.prec() ? a.prec() : b.prec();
}
} // namespace detail

#define BEUKERS_REAL_BINOP(op, fn)                                     \
    inline Real operator op(const Real& a, const Real& b) {            \
        Real r(detail::join(a, b));                                    \
        fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);                      \
        return r;                                                      \
    }                                                                  \
    inline Real operator op(const Real& a, long b) {                   \
        Real r(a.prec());                                              \
        fn##_si(r.raw(), a.raw(), b, MPFR_RNDN);                       \
        return r;                                                      \
    }

BEUKERS_REAL_BINOP(+, mpfr_add)
BEUKERS_REAL_BINOP(-, mpfr_sub)
BEUKERS_REAL_BINOP(*, mpfr_mul)
BEUKERS_REAL_BINOP(/, mpfr_div)
#undef BEUKERS_REAL_BINOP

inline Real operator+(long a, const Real& b) { return b + a; }
inline Real operator*(long a, const Real& b) { return b * a; }
inline Real operator-(long a, const Real& b) {
    Real r(b.prec());
    mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN);
    return r;
}
inline Real operator/(long a, const Real& b) {
    Real r(b.prec());
    mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN);
    return r;
}
inline Real operator-(const Real& a) {
    Real r(a.prec());
    mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

inline bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.raw(), b.raw()) == 0; }
inline bool operator!=(const Real& a, const Real& b) { return !(a == b); }
inline bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.raw(), b.raw()) < 0; }
inline bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.raw(), b.raw()) <= 0; }
inline bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.raw(), b.raw()) > 0; }
inline bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.raw(), b.raw()) >= 0; }
inline bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) < 0; }
inline bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) > 0; }
inline bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) == 0; }

#define BEUKERS_REAL_FN1(name, fn)             \
    inline Real name(const Real& a) {          \
        Real r(a.prec());                      \
        fn(r.raw(), a.raw(), MPFR_RNDN);       \
        return r;                              \
    }

BEUKERS_REAL_FN1(abs, mpfr_abs)
BEUKERS_REAL_FN1(sqrt, mpfr_sqrt)
BEUKERS_REAL_FN1(exp, mpfr_exp)
BEUKERS_REAL_FN1(log, mpfr_log)
BEUKERS_REAL_FN1(log1p, mpfr_log1p)
BEUKERS_REAL_FN1(sin, mpfr_sin)
BEUKERS_REAL_FN1(cos, mpfr_cos)
BEUKERS_REAL_FN1(sinh, mpfr_sinh)
BEUKERS_REAL_FN1(cosh, mpfr_cosh)
#undef BEUKERS_REAL_FN1

inline Real floor(const Real& a) {
    Real r(a.prec());
    mpfr_floor(r.raw(), a.raw());
    return r;
}
inline Real atan2(const Real& y, const Real& x) {
    Real r(detail::join(y, x));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline Real pow(const Real& a, const Real& b) {
    Real r(detail::join(a, b));
    mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
inline Real pow(const Real& a, long n) {
    Real r(a.prec());
    mpfr_pow_si(r.raw(), a.raw(), n, MPFR_RNDN);
    return r;
}
inline void sin_cos(Real& s, Real& c, const Real& a) {
    mpfr_sin_cos(s.raw(), c.raw(), a.raw(), MPFR_RNDN);
}
inline void sinh_cosh(Real& s, Real& c, const Real& a) {
    mpfr_sinh_cosh(s.raw(), c.raw(), a.raw(), MPFR_RNDN);
}

/// sin(pi*q) with the argument reduced exactly in rational arithmetic first,
/// so values at integers and half-integers come out exact.
inline Real sin_pi(const Rational& q, mpfr_prec_t prec) {
    // reduce q mod 2 into [0,2)
    long long fl = (q / Rational(2)).floor_ll();
    Rational r = q - Rational(2 * fl);
    int sign = 1;
    if (r >= Rational(1)) { r = r - Rational(1); sign = -1; } // sin(pi(1+x)) = -sin(pi x)
    if (r > Rational(1, 2)) r = Rational(1) - r;              // sin(pi(1-x)) = sin(pi x)
    if (r.is_zero()) return Real::of(0, prec);
    if (r == Rational(1, 2)) return Real::of(sign, prec);
    Real x = Real::pi(prec) * Real::of(r, prec);
    Real s = sin(x);
    return sign < 0 ? -s : s;
}

} // namespace beukers
