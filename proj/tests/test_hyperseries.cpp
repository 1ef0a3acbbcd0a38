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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "beukers/hyperseries.hpp"
#include "oracles.hpp"

using namespace beukers;

namespace {

bool close_to(const Real& a, const Real& b, long digits) {
    Real scale = abs(b);
    if (scale < 1) scale = Real::of(1, a.prec());
    return abs(a - b) <= scale * Real::pow10(-digits, a.prec());
}

Rational R(long long n, long long d = 1) { return Rational(n, d); }

} // namespace

TEST_CASE("parametric excess is exact rational arithmetic") {
    HypergeometricSpec z2({R(1), R(1), R(1)}, {R(2), R(2)});
    REQUIRE(parametric_excess(z2) == R(1));

    I2Params p{R(0), R(-1, 2), R(1, 6), R(-1, 2), 0};
    REQUIRE(parametric_excess(p.c_spec()) == R(2));
    // equals 1 - a2 - b2
    REQUIRE(parametric_excess(p.c_spec()) == R(1) - p.a2 - p.b2);

    // both 4F3s of the reduction have excess exactly 1, whatever the params
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> num(-6, 12);
    for (int i = 0; i < 25; ++i) {
        J3Params q{R(num(rng), 7), R(num(rng), 7), R(num(rng), 7), R(num(rng), 7), R(num(rng), 7),
                   static_cast<long>(i % 3)};
        auto [f1, f2] = j3_reduction_specs(q);
        REQUIRE(parametric_excess(f1) == R(1));
        REQUIRE(parametric_excess(f2) == R(1));
    }
}

TEST_CASE("spec shape is validated") {
    REQUIRE_THROWS_AS(HypergeometricSpec({R(1), R(1)}, {R(2), R(2)}), DomainError);
}

TEST_CASE("terminating series sum exactly") {
    PrecisionContext ctx(30);
    // 2F1(-1, 2; 3; 1) = 1 - 2/3 = 1/3
    SeriesResult r = sum_unit(HypergeometricSpec({R(-1), R(2)}, {R(3)}), ctx);
    REQUIRE(close_to(r.value, Real::of(R(1, 3), ctx.bits()), 30));
    REQUIRE(r.terms_used == 2);

    // smallest |m| terminates first even with a non-positive denominator beyond it
    SeriesResult s = sum_unit(HypergeometricSpec({R(-2), R(1)}, {R(-5)}), ctx);
    // 1 + (-2)(1)/(-5) + (-2)(-1)(1)(2)/((-5)(-4) 2) = 1 + 2/5 + 1/10
    REQUIRE(close_to(s.value, Real::of(R(3, 2), ctx.bits()), 30));

    // pole reached before termination
    REQUIRE_THROWS_AS(sum_unit(HypergeometricSpec({R(-4), R(1)}, {R(-2)}), ctx), PoleError);
}

TEST_CASE("divergence is detected from the excess") {
    PrecisionContext ctx(20);
    REQUIRE_THROWS_AS(sum_unit(HypergeometricSpec({R(1), R(1)}, {R(2)}), ctx), DivergentError);
    REQUIRE_THROWS_AS(sum_unit(HypergeometricSpec({R(1), R(3, 2)}, {R(2)}), ctx), DivergentError);
}

TEST_CASE("3F2(1,1,1;2,2;1) = zeta(2) against the Richardson oracle") {
    PrecisionContext ctx(12);
    SeriesResult r = sum_unit(HypergeometricSpec({R(1), R(1), R(1)}, {R(2), R(2)}), ctx);
    Real want = oracles::zeta_richardson(2, 128);
    REQUIRE(close_to(r.value, want, 12));

    PrecisionContext fine(50);
    SeriesResult rf = sum_unit(HypergeometricSpec({R(1), R(1), R(1)}, {R(2), R(2)}), fine);
    Real basel = Real::pi(fine.bits()) * Real::pi(fine.bits()) / 6;
    REQUIRE(close_to(rf.value, basel, 50));
}

TEST_CASE("Gauss summation via gamma closes 2F1 at unit argument") {
    PrecisionContext ctx(40);
    SeriesResult r = sum_unit(HypergeometricSpec({R(1, 3), R(1, 4)}, {R(3)}), ctx);
    Real g = gamma_real(R(3), ctx) * gamma_real(R(3) - R(1, 3) - R(1, 4), ctx) /
             (gamma_real(R(3) - R(1, 3), ctx) * gamma_real(R(3) - R(1, 4), ctx));
    REQUIRE(close_to(r.value, g, 40));
}

TEST_CASE("Gauss summation at 50 random parameter triples") {
    PrecisionContext ctx(30);
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> pick(-20, 20), denpick(1, 12);
    int done = 0;
    while (done < 50) {
        Rational a(pick(rng), denpick(rng));
        Rational b(pick(rng), denpick(rng));
        Rational c(pick(rng), denpick(rng));
        Rational excess = c - a - b;
        if (!(R(1, 2) < excess)) continue;
        if (c.is_nonpositive_integer() || (c - a).is_nonpositive_integer() ||
            (c - b).is_nonpositive_integer())
            continue;
        if (a.is_nonpositive_integer() || b.is_nonpositive_integer()) continue;
        ++done;
        SeriesResult r = sum_unit(HypergeometricSpec({a, b}, {c}), ctx);
        Real g = gamma_real(c, ctx) * gamma_real(excess, ctx) /
                 (gamma_real(c - a, ctx) * gamma_real(c - b, ctx));
        REQUIRE(close_to(r.value, g, ctx.digits - 2));
    }
}

TEST_CASE("refinement: sum_unit at 2x digits agrees with the digits-level value") {
    HypergeometricSpec spec({R(1), R(1), R(5, 6)}, {R(5, 2), R(7, 3)});
    SeriesResult lo = sum_unit(spec, PrecisionContext(25));
    SeriesResult hi = sum_unit(spec, PrecisionContext(50));
    REQUIRE(close_to(lo.value, hi.value, 25));
}

TEST_CASE("c_value of the two gamma-evaluable cases") {
    PrecisionContext ctx(50);
    // C(0,-1/2,1/6,-1/2) = -24 - 81 sqrt(pi) Gamma(7/3)/Gamma(-1/6) = 3 C1 - 24
    SeriesResult c1 = c_value(I2Params{R(0), R(-1, 2), R(1, 6), R(-1, 2), 0}, ctx);
    Real rhs1 = Real::of(-24, ctx.bits()) -
                Real::of(81, ctx.bits()) * sqrt(Real::pi(ctx.bits())) *
                    gamma_real(R(7, 3), ctx) / gamma_real(R(-1, 6), ctx);
    REQUIRE(close_to(c1.value, rhs1, 45));

    // C(-2/3,-1/2,1/2,-1/2) = 13/2 - 6 Gamma(19/6)/(sqrt(pi) Gamma(8/3))
    SeriesResult c2 = c_value(I2Params{R(-2, 3), R(-1, 2), R(1, 2), R(-1, 2), 0}, ctx);
    Real rhs2 = Real::of(R(13, 2), ctx.bits()) -
                Real::of(6, ctx.bits()) * gamma_real(R(19, 6), ctx) /
                    (sqrt(Real::pi(ctx.bits())) * gamma_real(R(8, 3), ctx));
    REQUIRE(close_to(c2.value, rhs2, 45));
}

TEST_CASE("c_value(0,0,0,0) = zeta(2)") {
    PrecisionContext ctx(30);
    SeriesResult r = c_value(I2Params{R(0), R(0), R(0), R(0), 0}, ctx);
    Real basel = Real::pi(ctx.bits()) * Real::pi(ctx.bits()) / 6;
    REQUIRE(close_to(r.value, basel, 30));
}

TEST_CASE("C symmetry under (a1,a2) <-> (b1,b2) at 20 random tuples") {
    PrecisionContext ctx(25);
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> pick(-11, 5), denpick(2, 9);
    int done = 0;
    while (done < 20) {
        Rational a1(pick(rng), denpick(rng)), a2(pick(rng), denpick(rng));
        Rational b1(pick(rng), denpick(rng)), b2(pick(rng), denpick(rng));
        I2Params p{a1, a2, b1, b2, 0};
        I2Params q{b1, b2, a1, a2, 0};
        try {
            p.validate();
        } catch (const DomainError&) {
            continue;
        }
        if (!(parametric_excess(p.c_spec()) > Rational(0))) continue;
        ++done;
        Real vp = c_value(p, ctx).value;
        Real vq = c_value(q, ctx).value;
        REQUIRE(close_to(vp, vq, ctx.digits - 2));
    }
}

TEST_CASE("I2Params validation rejects non-integrable exponents") {
    I2Params bad{R(3, 2), R(0), R(0), R(0), 0};
    REQUIRE_THROWS_AS(bad.validate(), DomainError);
    I2Params corner{R(0), R(3, 4), R(0), R(1, 2), 0}; // a2+b2 = 5/4 >= 1
    REQUIRE_THROWS_AS(corner.validate(), DomainError);
}

TEST_CASE("j3_reduced matches the K1-line value") {
    PrecisionContext ctx(40);
    SeriesResult den = j3_reduced(J3Params{R(0), R(0), R(0), R(2, 3), R(1, 3), 0}, ctx);
    SeriesResult num = j3_reduced(J3Params{R(0), R(0), R(0), R(5, 3), R(1, 3), 0}, ctx);
    Real k = num.value / den.value;
    Real k1 = log(Real::of(3, ctx.bits())) + Real::pi(ctx.bits()) / sqrt(Real::of(3, ctx.bits()));
    Real want = -(k1 - 2) / ((k1 - 3) * 2);
    REQUIRE(close_to(k, want, 38));
}

TEST_CASE("j3_reduced rejects integer c-d") {
    PrecisionContext ctx(20);
    REQUIRE_THROWS_AS(j3_reduced(J3Params{R(0), R(0), R(0), R(1), R(0), 0}, ctx),
                      ReductionInapplicable);
    REQUIRE_THROWS_AS(j3_reduced(J3Params{R(0), R(0), R(1, 2), R(5, 2), R(0), 0}, ctx),
                      ReductionInapplicable);
}

TEST_CASE("j3_reduced shift consistency: n=1 equals shifted n=0") {
    PrecisionContext ctx(30);
    J3Params base{R(1, 7), R(0), R(2, 7), R(3, 7), R(4, 7), 1};
    J3Params shifted{R(8, 7), R(7, 7), R(9, 7), R(10, 7), R(11, 7), 0};
    Real lhs = j3_reduced(base, ctx).value;
    Real rhs = j3_reduced(shifted, ctx).value;
    REQUIRE(close_to(lhs, rhs, ctx.digits));
}

TEST_CASE("k_value reproduces all six findings") {
    PrecisionContext ctx(50);
    const long check = 40;
    const mpfr_prec_t pb = ctx.bits();
    Real pi = Real::pi(pb);
    Real sqrt3 = sqrt(Real::of(3, pb));

    SECTION("K(0,0,0,2/3,1/3) via K1 = log3 + pi/sqrt3") {
        Real k1 = log(Real::of(3, pb)) + pi / sqrt3;
        Real want = -(k1 - 2) / ((k1 - 3) * 2);
        REQUIRE(close_to(k_value(R(0), R(0), R(0), R(2, 3), R(1, 3), ctx), want, check));
    }
    SECTION("K(0,0,0,1/3,2/3) via K2 = log3 - pi/sqrt3 (sign-corrected)") {
        Real k2 = log(Real::of(3, pb)) - pi / sqrt3;
        Real want = -((k2 + 1) * 2) / (k2 + Real::of(R(1, 2), pb));
        REQUIRE(close_to(k_value(R(0), R(0), R(0), R(1, 3), R(2, 3), ctx), want, check));
    }
    SECTION("K(0,1/3,2/3,1/3,2/3) via K3 = Gamma(2/3)^3/Gamma(1/3)^3") {
        Real k3 = pow(gamma_real(R(2, 3), ctx) / gamma_real(R(1, 3), ctx), 3);
        Real want = -(Real::of(7, pb) - 54 * k3) * 20 / (Real::of(52, pb) - 405 * k3);
        REQUIRE(close_to(k_value(R(0), R(1, 3), R(2, 3), R(1, 3), R(2, 3), ctx), want, check));
    }
    SECTION("K(0,1/5,0,3/5,2/5) via K4 = log((sqrt5+1)/2)/sqrt5") {
        Real sqrt5 = sqrt(Real::of(5, pb));
        Real k4 = log((sqrt5 + 1) / 2) / sqrt5;
        Real want = -(Real::of(1, pb) - 4 * k4) * 4 / (Real::of(5, pb) - 24 * k4);
        REQUIRE(close_to(k_value(R(0), R(1, 5), R(0), R(3, 5), R(2, 5), ctx), want, check));
    }
    SECTION("K(1/7,0,2/7,3/7,4/7) via K5") {
        Real k5 = pow(Real::of(2, pb), Real::of(R(2, 7), pb)) * sqrt(pi) *
                  gamma_real(R(9, 14), ctx) /
                  (cos(pi * Real::of(R(3, 14), pb)) * pow(gamma_real(R(4, 7), ctx), 2));
        Real want = -(Real::of(8, pb) - 5 * k5) * 189 / (Real::of(832, pb) - 525 * k5);
        REQUIRE(close_to(k_value(R(1, 7), R(0), R(2, 7), R(3, 7), R(4, 7), ctx), want, check));
    }
    SECTION("K(1/3,0,2/3,1/2,5/6) via t = 2^(2/3), display-corrected coefficients") {
        Real t = pow(Real::of(2, pb), Real::of(R(2, 3), pb));
        // true Mobius relation (3780, -2385, 1944, -1223)
        Real want = -(Real::of(3780, pb) - 2385 * t) / (Real::of(1944, pb) - 1223 * t);
        REQUIRE(close_to(k_value(R(1, 3), R(0), R(2, 3), R(1, 2), R(5, 6), ctx), want, check));
    }
}

TEST_CASE("k_value propagates reduction errors") {
    PrecisionContext ctx(20);
    REQUIRE_THROWS_AS(k_value(R(0), R(0), R(0), R(1), R(0), ctx), ReductionInapplicable);
}
