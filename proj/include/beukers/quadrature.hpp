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

#include <functional>
#include <map>
#include <mutex>
#include <vector>

#include "beukers/gamma.hpp"
#include "beukers/hyperseries.hpp"
#include "beukers/precision.hpp"
#include "beukers/real.hpp"

namespace beukers {

struct QuadratureResult {
    Real value;
    Real error_estimate;
    int levels_used = 0;
};

namespace detail {

/// One tanh-sinh abscissa on the t > 0 side. x(t) -> 1 as t grows; the
/// mirrored node at -t has x and 1-x exchanged. 1-x is stored separately so
/// integrands never reconstruct it by cancellation.
struct DENode {
    Real x;
    Real omx;
    Real w; // pi cosh(t) x (1-x), the full dx/dt factor
};

/// Node rows for one precision: rows[0] holds t = 1h0, 2h0, ... (h0 = 1) and
/// rows[l] for l >= 1 the odd multiples of 2^-l. The t = 0 node is fixed.
struct DETable {
    std::vector<std::vector<DENode>> rows;
    double tmax = 0;
    Real w0{2}; // weight at t = 0 (x = 1/2): pi/4
};

inline DENode make_de_node(double t, mpfr_prec_t prec) {
    Real tt(prec);
    mpfr_set_d(tt.raw(), t, MPFR_RNDN);
    Real sh(prec), ch(prec);
    sinh_cosh(sh, ch, tt);
    Real u = Real::pi(prec) * sh; // 2u = pi sinh t
    Real emu = exp(-u);
    Real den = emu + 1;
    DENode n{1 / den, emu / den, Real(prec)};
    n.w = Real::pi(prec) * ch * n.x * n.omx;
    return n;
}

inline const DETable& de_table(mpfr_prec_t prec, int level, double tmax) {
    static std::mutex mu;
    static std::map<mpfr_prec_t, DETable> cache;
    std::lock_guard<std::mutex> lock(mu);
    DETable& t = cache[prec];
    if (t.rows.empty()) {
        Real quarter(prec);
        mpfr_set_d(quarter.raw(), 0.25, MPFR_RNDN);
        t.w0 = Real::pi(prec) * quarter;
    }
    bool extend = tmax > t.tmax;
    if (extend) {
        t.rows.clear();
        t.tmax = tmax;
    }
    while (static_cast<int>(t.rows.size()) <= level) {
        int l = static_cast<int>(t.rows.size());
        std::vector<DENode> row;
        double h = std::ldexp(1.0, -l);
        if (l == 0) {
            for (double tt = 1; tt <= t.tmax; tt += 1) row.push_back(make_de_node(tt, prec));
        } else {
            for (double tt = h; tt <= t.tmax; tt += 2 * h) row.push_back(make_de_node(tt, prec));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

} // namespace detail

/// Integrand signature: f(x, 1-x); both arguments carry full precision at
/// their respective ends of (0,1).
using Integrand1D = std::function<Real(const Real&, const Real&)>;

/// Tanh-sinh quadrature over (0,1) for integrands with at worst algebraic
/// endpoint singularities x^alpha, (1-x)^beta, alpha,beta > -1. Levels double
/// until two successive levels agree to 10^(-digits). `alpha` and `beta` are
/// decay hints (the worst exponents at each end) controlling how far into the
/// corners the node set reaches; the conservative default covers exponents
/// down to -0.9.
inline QuadratureResult tanh_sinh_1d(const Integrand1D& f, const PrecisionContext& ctx,
                                     int max_level = 10, double alpha = -0.9,
                                     double beta = -0.9) {
    const mpfr_prec_t prec = ctx.bits();
    const long wd = ctx.work_digits();
    const double L = (static_cast<double>(wd) + 6) * 2.302585092994046;
    auto cut = [&](double expo) {
        double tm = std::log(2 * L / (3.141592653589793 * (1 + expo)));
        return tm < 3.5 ? 3.5 : tm;
    };
    const double tmax = std::max(cut(alpha), cut(beta));

    Real half(prec);
    mpfr_set_d(half.raw(), 0.5, MPFR_RNDN);
    const Real tol = Real::pow10(-ctx.digits, prec);
    const Real term_floor = Real::pow10(-(wd + 8), prec);

    Real sum(prec);
    Real prev(prec);
    Real diff(prec);
    int level = 0;
    for (; level <= max_level; ++level) {
        const detail::DETable& table = detail::de_table(prec, level, tmax);
        Real h(prec);
        mpfr_set_d(h.raw(), std::ldexp(1.0, -level), MPFR_RNDN);
        Real inc(prec);
        if (level == 0) inc = table.w0 * f(half, half);
        int quiet = 0;
        for (const detail::DENode& n : table.rows[static_cast<size_t>(level)]) {
            Real term = n.w * (f(n.x, n.omx) + f(n.omx, n.x));
            inc = inc + term;
            if (abs(term) < term_floor * (abs(sum) + abs(inc) + 1)) {
                if (++quiet >= 3) break;
            } else {
                quiet = 0;
            }
        }
        sum = (level == 0) ? h * inc : sum * half + h * inc;
        if (level >= 2) {
            diff = abs(sum - prev);
            Real scale = abs(sum);
            if (scale < 1) scale = Real::of(1, prec);
            if (diff <= tol * scale) {
                Real err = diff + abs(sum) * Real::pow10(-wd, prec);
                return QuadratureResult{sum, err, level};
            }
        }
        prev = sum;
    }
    throw NoConvergence("tanh_sinh_1d did not reach 10^-" + std::to_string(ctx.digits) +
                        " agreement by level " + std::to_string(max_level));
}

namespace detail {

/// Endpoint power factor s^p computed in log space unless p is an integer.
inline Real power_factor(const Real& s, const Rational& p, mpfr_prec_t prec) {
    if (p.is_zero()) return Real::of(1, prec);
    if (p.is_integer()) return pow(s, static_cast<long>(p.num()));
    return exp(Real::of(p, prec) * log(s));
}

/// Per-level cache of weight * x^px * (1-x)^pq factors over the node table,
/// for one direction of traversal (x ascending toward 1 uses (x, omx); the
/// mirrored nodes use (omx, x)).
class FactorRows {
public:
    FactorRows(Rational p_at0, Rational p_at1, mpfr_prec_t prec, double tmax)
        : p0_(std::move(p_at0)), p1_(std::move(p_at1)), prec_(prec), tmax_(tmax) {}

    // side: +1 for the x -> 1 branch, -1 for the x -> 0 branch.
    const std::vector<Real>& row(int level, int side) {
        auto& rows = side > 0 ? up_ : down_;
        while (static_cast<int>(rows.size()) <= level) {
            int l = static_cast<int>(rows.size());
            const DETable& table = de_table(prec_, l, tmax_);
            std::vector<Real> r;
            r.reserve(table.rows[static_cast<size_t>(l)].size());
            for (const DENode& n : table.rows[static_cast<size_t>(l)]) {
                const Real& x = side > 0 ? n.x : n.omx;
                const Real& omx = side > 0 ? n.omx : n.x;
                r.push_back(n.w * power_factor(x, p0_, prec_) * power_factor(omx, p1_, prec_));
            }
            rows.push_back(std::move(r));
        }
        return rows[static_cast<size_t>(level)];
    }

    Real center(mpfr_prec_t prec) const {
        Real half(prec);
        mpfr_set_d(half.raw(), 0.5, MPFR_RNDN);
        const DETable& table = de_table(prec, 0, tmax_);
        return table.w0 * power_factor(half, p0_, prec) * power_factor(half, p1_, prec);
    }

private:
    Rational p0_, p1_;
    mpfr_prec_t prec_;
    double tmax_;
    std::vector<std::vector<Real>> up_, down_;
};

/// Generic level-doubling loop over a map from (level) to the level increment.
template <typename LevelInc>
QuadratureResult de_levels(LevelInc&& level_inc, mpfr_prec_t prec, long digits, long wd,
                           int max_level, const char* what) {
    Real half(prec);
    mpfr_set_d(half.raw(), 0.5, MPFR_RNDN);
    const Real tol = Real::pow10(-digits, prec);
    Real sum(prec), prev(prec);
    for (int level = 0; level <= max_level; ++level) {
        Real h(prec);
        mpfr_set_d(h.raw(), std::ldexp(1.0, -level), MPFR_RNDN);
        Real inc = level_inc(level);
        sum = (level == 0) ? h * inc : sum * half + h * inc;
        if (level >= 2) {
            Real diff = abs(sum - prev);
            Real scale = abs(sum);
            if (scale < 1) scale = Real::of(1, prec);
            if (diff <= tol * scale)
                return QuadratureResult{sum, diff + abs(sum) * Real::pow10(-wd, prec), level};
        }
        prev = sum;
    }
    throw NoConvergence(std::string(what) + " did not converge by level " +
                        std::to_string(max_level));
}

inline double de_tmax_for(const Rational& worst, long wd) {
    double expo = static_cast<double>(worst.num()) / static_cast<double>(worst.den());
    double L = (static_cast<double>(wd) + 6) * 2.302585092994046;
    double tm = std::log(2 * L / (3.141592653589793 * (1 + expo)));
    return tm < 3.5 ? 3.5 : tm;
}

} // namespace detail

/// Double integral I2 with its gamma prefactor, by iterated tanh-sinh.
/// The (1-xy)^-(n+1) kernel is evaluated as (1-y) + y(1-x) so no digits are
/// lost near (1,1).
inline QuadratureResult integral_I2(const I2Params& p, const PrecisionContext& ctx) {
    p.validate();
    const PrecisionContext work(ctx.digits + 4, ctx.guard);
    const mpfr_prec_t prec = work.bits();
    const long wd = work.work_digits();

    Rational two(2), one(1);
    for (const Rational& g : {two - p.a1 - p.a2, two - p.b1 - p.b2, one - p.a1, one - p.a2,
                              one - p.b1, one - p.b2})
        if (g.is_nonpositive_integer())
            throw PoleError("I2 prefactor Gamma(" + g.str() + ") is at a pole");
    Real pref = gamma_real(two - p.a1 - p.a2, work) * gamma_real(two - p.b1 - p.b2, work) /
                (gamma_real(one - p.a1, work) * gamma_real(one - p.a2, work) *
                 gamma_real(one - p.b1, work) * gamma_real(one - p.b2, work));

    Rational nx0(p.n), nx1(p.n), ny0(p.n), ny1(p.n);
    nx0 = nx0 - p.a1; nx1 = nx1 - p.a2; ny0 = ny0 - p.b1; ny1 = ny1 - p.b2;
    Rational worst = nx0;
    for (const Rational& q : {nx1, ny0, ny1}) if (q < worst) worst = q;
    const double tmax = detail::de_tmax_for(worst, wd);
    const long kernel_pow = -(p.n + 1);

    detail::FactorRows yrows(ny0, ny1, prec, tmax);
    detail::FactorRows xrows(nx0, nx1, prec, tmax);
    const int inner_max = 9, outer_max = 9;

    // inner integral over y at fixed x
    auto inner = [&](const Real& x, const Real& omx) {
        auto level_inc = [&](int level) {
            Real inc(prec);
            auto add = [&](const Real& fac, const Real& y, const Real& omy) {
                // 1 - x y = (1-y) + y (1-x)
                Real base = omy + y * omx;
                inc = inc + fac * pow(base, kernel_pow);
            };
            if (level == 0) {
                Real half(prec);
                mpfr_set_d(half.raw(), 0.5, MPFR_RNDN);
                add(yrows.center(prec), half, half);
            }
            const detail::DETable& table = detail::de_table(prec, level, tmax);
            const auto& nodes = table.rows[static_cast<size_t>(level)];
            const auto& up = yrows.row(level, +1);
            const auto& dn = yrows.row(level, -1);
            for (size_t i = 0; i < nodes.size(); ++i) {
                add(up[i], nodes[i].x, nodes[i].omx);
                add(dn[i], nodes[i].omx, nodes[i].x);
            }
            (void)x;
            return inc;
        };
        return detail::de_levels(level_inc, prec, ctx.digits + 3, wd, inner_max, "I2 inner").value;
    };

    auto outer_inc = [&](int level) {
        Real inc(prec);
        if (level == 0) {
            Real half(prec);
            mpfr_set_d(half.raw(), 0.5, MPFR_RNDN);
            inc = inc + xrows.center(prec) * inner(half, half);
        }
        const detail::DETable& table = detail::de_table(prec, level, tmax);
        const auto& nodes = table.rows[static_cast<size_t>(level)];
        const auto& up = xrows.row(level, +1);
        const auto& dn = xrows.row(level, -1);
        for (size_t i = 0; i < nodes.size(); ++i) {
            inc = inc + up[i] * inner(nodes[i].x, nodes[i].omx);
            inc = inc + dn[i] * inner(nodes[i].omx, nodes[i].x);
        }
        return inc;
    };
    QuadratureResult r = detail::de_levels(outer_inc, prec, ctx.digits + 1, wd, outer_max, "I2");

    QuadratureResult out{Real(ctx.bits()), Real(ctx.bits()), r.levels_used};
    mpfr_set(out.value.raw(), (pref * r.value).raw(), MPFR_RNDN);
    mpfr_set(out.error_estimate.raw(), (abs(pref) * r.error_estimate).raw(), MPFR_RNDN);
    return out;
}

/// Triple integral J3 by iterated tanh-sinh. The kernel 1-(1-xy)z is
/// evaluated as (1-z) + z x y. Endpoint factor tables are cached per level,
/// so each inner node costs one log and one exp.
inline QuadratureResult integral_J3(const J3Params& p, const PrecisionContext& ctx) {
    p.validate();
    J3Params q = p.shifted();
    const PrecisionContext work(ctx.digits + 4, ctx.guard);
    const mpfr_prec_t prec = work.bits();
    const long wd = work.work_digits();

    Rational worst = q.a;
    for (const Rational& r : {q.b, q.c, q.e}) if (r < worst) worst = r;
    const double tmax = detail::de_tmax_for(worst, wd);

    detail::FactorRows zrows(q.a, q.c, prec, tmax); // z^a (1-z)^c
    detail::FactorRows yrows(q.e, q.a, prec, tmax); // y^e (1-y)^a
    detail::FactorRows xrows(q.b, q.c, prec, tmax); // x^b (1-x)^c
    const Real minus_d = -Real::of(q.d, prec);
    const bool d_zero = q.d.is_zero();
    const bool d_int = q.d.is_integer();
    const long d_neg = d_int ? static_cast<long>(-q.d.num()) : 0;

    const int inner_max = 9;

    // innermost: Z(m) = int z^a (1-z)^c ((1-z) + z m)^(-d) dz, m = x y
    auto z_integral = [&](const Real& m) {
        auto level_inc = [&](int level) {
            Real inc(prec);
            auto add = [&](const Real& fac, const Real& z, const Real& omz) {
                if (d_zero) { inc = inc + fac; return; }
                Real base = omz + z * m;
                if (d_int) inc = inc + fac * pow(base, d_neg);
                else inc = inc + fac * exp(minus_d * log(base));
            };
            if (level == 0) {
                Real half(prec);
                mpfr_set_d(half.raw(), 0.5, MPFR_RNDN);
                add(zrows.center(prec), half, half);
            }
            const detail::DETable& table = detail::de_table(prec, level, tmax);
            const auto& nodes = table.rows[static_cast<size_t>(level)];
            const auto& up = zrows.row(level, +1);
            const auto& dn = zrows.row(level, -1);
            for (size_t i = 0; i < nodes.size(); ++i) {
                add(up[i], nodes[i].x, nodes[i].omx);
                add(dn[i], nodes[i].omx, nodes[i].x);
            }
            return inc;
        };
        return detail::de_levels(level_inc, prec, ctx.digits + 3, wd, inner_max, "J3 z").value;
    };

    auto y_integral = [&](const Real& x) {
        auto level_inc = [&](int level) {
            Real inc(prec);
            if (level == 0) {
                Real half(prec);
                mpfr_set_d(half.raw(), 0.5, MPFR_RNDN);
                inc = inc + yrows.center(prec) * z_integral(x * half);
            }
            const detail::DETable& table = detail::de_table(prec, level, tmax);
            const auto& nodes = table.rows[static_cast<size_t>(level)];
            const auto& up = yrows.row(level, +1);
            const auto& dn = yrows.row(level, -1);
            for (size_t i = 0; i < nodes.size(); ++i) {
                inc = inc + up[i] * z_integral(x * nodes[i].x);
                inc = inc + dn[i] * z_integral(x * nodes[i].omx);
            }
            return inc;
        };
        return detail::de_levels(level_inc, prec, ctx.digits + 2, wd, inner_max, "J3 y").value;
    };

    auto x_inc = [&](int level) {
        Real inc(prec);
        if (level == 0) {
            Real half(prec);
            mpfr_set_d(half.raw(), 0.5, MPFR_RNDN);
            inc = inc + xrows.center(prec) * y_integral(half);
        }
        const detail::DETable& table = detail::de_table(prec, level, tmax);
        const auto& nodes = table.rows[static_cast<size_t>(level)];
        const auto& up = xrows.row(level, +1);
        const auto& dn = xrows.row(level, -1);
        for (size_t i = 0; i < nodes.size(); ++i) {
            inc = inc + up[i] * y_integral(nodes[i].x);
            inc = inc + dn[i] * y_integral(nodes[i].omx);
        }
        return inc;
    };
    QuadratureResult r = detail::de_levels(x_inc, prec, ctx.digits + 1, wd, inner_max, "J3");

    QuadratureResult out{Real(ctx.bits()), Real(ctx.bits()), r.levels_used};
    mpfr_set(out.value.raw(), r.value.raw(), MPFR_RNDN);
    mpfr_set(out.error_estimate.raw(), r.error_estimate.raw(), MPFR_RNDN);
    return out;
}

} // namespace beukers
