// Copyright Contributors to the hzeta Project
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hzeta/continuation.hpp"

using namespace hzeta;

namespace {

template <class R>
double cmag(const Cplx<R>& z) {
    return std::sqrt(Real<R>::to_double(abs2(z)));
}

template <class R>
PrecisionContext cctx() {
    return std::is_same_v<R, double> ? PrecisionContext{} : PrecisionContext::high();
}

} // namespace

TEST_CASE_TEMPLATE("zeta_h dispatch and trivial zeros", R, double, DDouble) {
    PrecisionContext ctx = cctx<R>();
    double t = std::is_same_v<R, double> ? 2e-13 : 1e-25;

    // series region
    Cplx<R> v2 = zeta_h(Cplx<R>(R(2)), ctx);
    R expect = R(1.75) * detail::zeta_int<R>(3);
    CHECK(std::abs(Real<R>::to_double(v2.re - expect)) <= t);

    // trivial zeros at s = -2, -4, -6
    for (int n = 1; n <= 3; ++n) {
        Cplx<R> z = zeta_h(Cplx<R>(R(-2 * n)), ctx);
        CHECK(cmag(z) <= 1e-8);
        CHECK(cmag(z) <= (std::is_same_v<R, double> ? 1e-12 : 1e-24));
    }

    // pole errors carry location/order/residue
    try {
        zeta_h(Cplx<R>(R(1)), ctx);
        FAIL("expected pole_error at s=1");
    } catch (const pole_error& e) {
        CHECK(e.order() == 2);
        CHECK(e.location() == std::complex<double>(1.0, 0.0));
        CHECK(e.residue() ==
              doctest::Approx(std::log(2.0) + 0.5 * 0.5772156649015329).epsilon(1e-12));
    }
    try {
        zeta_h(Cplx<R>(R(-1)), ctx);
        FAIL("expected pole_error at s=-1");
    } catch (const pole_error& e) {
        CHECK(e.order() == 1);
        CHECK(e.residue() == doctest::Approx(1.0 / 48.0).epsilon(1e-12));
    }

    // near-pole warning
    auto near = zeta_h_ex(Cplx<R>(R(1) + R(1e-7)), ctx);
    CHECK(near.near_pole);
    auto far = zeta_h_ex(Cplx<R>(R(2)), ctx);
    CHECK_FALSE(far.near_pole);
}

TEST_CASE_TEMPLATE("continuation agrees with the series on the overlap", R, double, DDouble) {
    PrecisionContext ctx = cctx<R>();
    double t = std::is_same_v<R, double> ? 1e-10 : 1e-14; // w/c series truncation limited
    for (double s : {2.0, 2.5, 3.0, 4.0}) {
        Cplx<R> a = zeta_h_mellin_split(Cplx<R>(R(s)), ctx);
        Cplx<R> b = zeta_h_series(Cplx<R>(R(s)), ctx);
        CHECK(cmag(a - b) <= t);
    }
    Cplx<R> a = zeta_h_mellin_split(Cplx<R>(R(2), R(3)), ctx);
    Cplx<R> b = zeta_h_series(Cplx<R>(R(2), R(3)), ctx);
    CHECK(cmag(a - b) <= t);
}

TEST_CASE("left half-plane: Mellin split vs the G-route piecewise definition") {
    // zeta_h(s) = -2^{s-1} pi^{s-2} sin(pi s/2) Gamma(2-s) G(2-s) for sigma <= 1
    PrecisionContext ctx;
    for (double s : {0.5, -0.5, -1.5}) {
        Cplx<double> lhs = zeta_h_mellin_split(Cplx<double>(s), ctx);
        Cplx<double> g = G_fun(Cplx<double>(2.0 - s), ctx);
        Cplx<double> rhs = -std::pow(2.0, s - 1.0) * std::pow(M_PI, s - 2.0) *
                           std::sin(M_PI * s / 2.0) *
                           gamma(Cplx<double>(2.0 - s)) * g;
        CAPTURE(s);
        CHECK(cmag(lhs - rhs) <= 2e-9);
    }
}

TEST_CASE_TEMPLATE("hurwitz route cross-paths", R, double, DDouble) {
    PrecisionContext ctx = cctx<R>();
    double t = std::is_same_v<R, double> ? 1e-9 : 1e-20;
    for (double s : {2.2, 2.5, 3.5, 4.0}) {
        Cplx<R> a = zeta_h_via_hurwitz(Cplx<R>(Real<R>::parse(std::to_string(s))), ctx);
        Cplx<R> b = zeta_h_series(Cplx<R>(Real<R>::parse(std::to_string(s))), ctx);
        CAPTURE(s);
        CHECK(cmag(a - b) <= t);
    }
    CHECK_THROWS_AS(zeta_h_via_hurwitz(Cplx<R>(R(3.0005)), ctx), domain_error);
    CHECK_THROWS_AS(zeta_h_via_hurwitz(Cplx<R>(R(0.5)), ctx), domain_error);
}

TEST_CASE("G function: overlap of direct quadrature and continuation") {
    PrecisionContext ctx;
    // G(-1) = 0 exactly: zeta(-1, 2x/pi) = -B_2(2x/pi)/2 is symmetric about pi/4
    Cplx<double> gm1 = G_direct(Cplx<double>(-1.0), ctx);
    CHECK(cmag(gm1) <= 1e-11);
    Cplx<double> gm1c = G_continuation(Cplx<double>(-1.0), ctx);
    CHECK(cmag(gm1c) <= 1e-9);

    // G(1/2) by both routes, against a frozen quadrature reference
    Cplx<double> gd = G_direct(Cplx<double>(0.5), ctx);
    Cplx<double> gc = G_continuation(Cplx<double>(0.5), ctx);
    CHECK(std::abs(gd.re - (-4.551634951225480949176319)) <= 1e-10);
    CHECK(cmag(gd - gc) <= 1e-9);

    // chained: prefactor * G(2-s) reproduces the series at s = 3.5
    double s = 3.5;
    Cplx<double> pref = std::pow(2 * M_PI, s - 1.0) /
                        (2.0 * std::cos(M_PI * s / 2.0)) * rgamma(Cplx<double>(s - 1.0));
    Cplx<double> chained = pref * G_fun(Cplx<double>(2.0 - s), ctx);
    CHECK(cmag(chained - zeta_h_series(Cplx<double>(s), ctx)) <= 1e-9);

    CHECK_THROWS_AS(G_fun(Cplx<double>(3.0), ctx), pole_error);
}

TEST_CASE_TEMPLATE("pole data: exact vs numeric Laurent coefficients", R, double, DDouble) {
    PrecisionContext ctx = cctx<R>();
    auto p0 = pole_info<R>(0, ctx);
    CHECK(p0.order == 2);
    CHECK(std::abs(Real<R>::to_double(p0.leading_exact) - 0.5) == 0.0);
    CHECK(std::abs(Real<R>::to_double(p0.leading_numeric - p0.leading_exact)) <= 1e-6);
    CHECK(std::abs(Real<R>::to_double(p0.residue_numeric - p0.residue_exact)) <= 1e-6);

    auto p1 = pole_info<R>(1, ctx);
    CHECK(p1.order == 1);
    CHECK(std::abs(Real<R>::to_double(p1.residue_exact) - 1.0 / 48.0) <= 1e-16);
    CHECK(std::abs(Real<R>::to_double(p1.residue_numeric - p1.residue_exact)) <= 1e-6);

    auto p2 = pole_info<R>(2, ctx);
    CHECK(std::abs(Real<R>::to_double(p2.residue_numeric - p2.residue_exact)) <= 1e-6);
}

TEST_CASE("residue formulas agree exactly: -B_2n(1/2)/(4n) = -w_n 4^{-2n} (2n)!") {
    for (int n = 1; n <= 5; ++n) {
        Rational lhs = zeta_h_residue_exact(n);
        Rational rhs = -w_coefficient(n).coef / Rational(4).pow(2 * n) *
                       Rational(factorial(static_cast<unsigned>(2 * n)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE_TEMPLATE("alpha/beta recursions", R, double, DDouble) {
    PrecisionContext ctx = cctx<R>();
    double t = std::is_same_v<R, double> ? 1e-14 : 1e-26;

    // beta_1 = (7/4) alpha_1
    R b1 = beta_coeff<R>(1, ctx), a1 = alpha_coeff<R>(1, ctx);
    CHECK(std::abs(Real<R>::to_double(b1 - R(1.75) * a1)) <= t);

    // forward recursion beta_n = -1/2 sum_k (2^{2k+1}-1) r_{n-k} alpha_k
    for (int n = 1; n <= 4; ++n) {
        R rhs(0);
        for (int k = 1; k <= n; ++k)
            rhs = rhs + (Rational(2).pow(2 * k + 1) - Rational(1)).to_real<R>() *
                            zeta_even_rational(n - k).to_real<R>() * alpha_coeff<R>(k, ctx);
        rhs = R(-0.5) * rhs;
        CHECK(std::abs(Real<R>::to_double(beta_coeff<R>(n, ctx) - rhs)) <= 10 * t);
    }

    // inverse recursion alpha_n = 8/(2^{2n+1}-1) sum_k (2^{2(n-k)+2}-1) r_{n-k+1} beta_k
    for (int n = 1; n <= 4; ++n) {
        R rhs(0);
        for (int k = 1; k <= n; ++k)
            rhs = rhs + (Rational(2).pow(2 * (n - k) + 2) - Rational(1)).to_real<R>() *
                            zeta_even_rational(n - k + 1).to_real<R>() * beta_coeff<R>(k, ctx);
        rhs = R(8) / (Rational(2).pow(2 * n + 1) - Rational(1)).to_real<R>() * rhs;
        CHECK(std::abs(Real<R>::to_double(alpha_coeff<R>(n, ctx) - rhs)) <= 10 * t);
    }

    for (int n = 2; n <= 4; ++n)
        CHECK(std::abs(Real<R>::to_double(recursion_residual<R>(n, ctx))) <= 10 * t);
}

TEST_CASE_TEMPLATE("tangent power series", R, double, DDouble) {
    PrecisionContext ctx = cctx<R>();
    for (double x : {0.25, 0.5, 1.0}) {
        auto [lhs, rhs] = tan_series_check(R(x), ctx);
        CAPTURE(x);
        CHECK(std::abs(Real<R>::to_double(lhs - rhs)) <= (x < 0.9 ? 1e-11 : 1e-9));
    }
    CHECK_THROWS_AS(tan_series_check(R(1.3), ctx), accuracy_error);
}

TEST_CASE_TEMPLATE("exp kernel identity", R, double, DDouble) {
    PrecisionContext ctx = cctx<R>();
    double t = std::is_same_v<R, double> ? 1e-10 : 1e-22;

    // frozen both-sides value at z = 1
    auto [l1, r1] = exp_kernel_identity(Cplx<R>(R(1)), ctx);
    R frozen = Real<R>::parse("13.22188950284324659386735425382557782097");
    CHECK(std::abs(Real<R>::to_double(l1.re - frozen)) <= 1e-9);
    CHECK(cmag(l1 - r1) <= t);

    for (auto z : {Cplx<R>(R(1), R(1)), Cplx<R>(R(3))}) {
        auto [lhs, rhs] = exp_kernel_identity(z, ctx);
        CHECK(cmag(lhs - rhs) <= 10 * t * (1.0 + cmag(rhs)));
    }

    // z = 0 degenerates to int log tan = 0
    auto [l0, r0] = exp_kernel_identity(Cplx<R>(R(0)), ctx);
    CHECK(cmag(l0) <= 1e-11);
    CHECK(cmag(r0) == 0.0);

    CHECK_THROWS_AS(exp_kernel_identity(Cplx<R>(R(0), R(2.00001)), ctx), domain_error);

    // limit form at z = 2ik
    for (int k = 1; k <= 3; ++k) {
        auto [lhs, rhs] = exp_kernel_limit<R>(k, ctx);
        CHECK(cmag(lhs - rhs) <= 1e-9);
        CHECK(std::abs(Real<R>::to_double(lhs.re)) <= 1e-9);
    }
    auto [lm, rm] = exp_kernel_limit<R>(-2, ctx);
    CHECK(std::abs(Real<R>::to_double(rm.im) - (4.0 / 3.0) / 2.0) <= 1e-15);
    CHECK(cmag(lm - rm) <= 1e-9);
}

TEST_CASE_TEMPLATE("digamma identity", R, double, DDouble) {
    PrecisionContext ctx = cctx<R>();
    double t = std::is_same_v<R, double> ? 1e-11 : 1e-23;
    for (double z : {0.5, 1.0, 2.0}) {
        auto [lhs, rhs] = digamma_identity_check(Cplx<R>(R(z)), ctx);
        CAPTURE(z);
        CHECK(cmag(lhs - rhs) <= t);
    }
    // continuity probe near z = 0
    auto [l, r] = digamma_identity_check(Cplx<R>(R(0.001)), ctx);
    CHECK(cmag(l - r) <= 1e-8);
    CHECK_THROWS_AS(digamma_identity_check(Cplx<R>(R(0)), ctx), domain_error);
}

TEST_CASE_TEMPLATE("polylog route to odd h-zeta values", R, double, DDouble) {
    PrecisionContext ctx = cctx<R>();
    for (int n : {1, 2}) {
        auto [integral, rhs] = zhodd_polylog_check<R>(n, ctx);
        CAPTURE(n);
        CHECK(std::abs(Real<R>::to_double(integral.im - rhs)) <= 1e-9);
        CHECK(std::abs(Real<R>::to_double(integral.re)) <= 1e-10);
    }
}

TEST_CASE_TEMPLATE("hurwitz connection sum", R, double, DDouble) {
    PrecisionContext ctx = cctx<R>();
    double t = std::is_same_v<R, double> ? 1e-10 : 1e-22;
    for (double s : {3.0, 2.5}) {
        Cplx<R> a = zeta_h_hurwitz_connection(Cplx<R>(R(s)), ctx);
        Cplx<R> b = zeta_h_series(Cplx<R>(R(s)), ctx);
        CAPTURE(s);
        CHECK(cmag(a - b) <= t);
    }
}

TEST_CASE("conjugate symmetry of zeta_h") {
    PrecisionContext ctx;
    for (auto s : {Cplx<double>(2.0, 3.0), Cplx<double>(0.3, 2.0), Cplx<double>(-1.2, 1.0)}) {
        Cplx<double> a = zeta_h(conj(s), ctx);
        Cplx<double> b = conj(zeta_h(s, ctx));
        CHECK(cmag(a - b) <= 1e-13 * (1.0 + cmag(b)));
    }
}
