// Copyright Contributors to the hzeta Project
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: every criterion below is checked at its stated
// tolerance and reported as one PASS/FAIL line.  Exit status is nonzero
// if any criterion fails.  Pass --high to run the double-double kernels.

#include "hzeta/continuation.hpp"
#include "hzeta/identities.hpp"

#include <cstdio>
#include <cstring>
#include <random>
#include <string>
#include <vector>

using namespace hzeta;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool ok, const std::string& detail) {
    std::printf("[%2d] %s  %-18s %s\n", index, ok ? "PASS" : "FAIL", name.c_str(),
                detail.c_str());
    if (!ok) ++g_failures;
}

template <class R>
double mag(const Cplx<R>& v) {
    return std::sqrt(Real<R>::to_double(abs2(v)));
}

template <class R>
std::string errstr(double worst) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "worst err %.2e", worst);
    return buf;
}

template <class R>
void run_all(const PrecisionContext& ctx) {
    using RT = Real<R>;
    const R pi = RT::pi();

    // 1. PARSEVAL-PI3
    {
        auto q = tanh_sinh<R, R>(
            [&](R x, R da, R db) {
                R lt = log_tan_01<R>(x, da, db);
                return lt * lt;
            },
            R(0), RT::half_pi(), ctx);
        double err = std::abs(RT::to_double(q.value - pow(pi, 3) / R(8)));
        report(1, "PARSEVAL-PI3", err <= 1e-10, errstr<R>(err));
    }

    // 2. LEMMA1 grid n = 1..12
    {
        double worst = 0;
        for (int n = 1; n <= 12; ++n) {
            auto got = log_tangent_sin_integral<R>(n, ctx);
            R expect = (HarmonicCache::h(n) / Rational(n)).to_real<R>();
            worst = std::max(worst, std::abs(RT::to_double(got.value + expect)));
        }
        report(2, "LEMMA1 n=1..12", worst <= 1e-9, errstr<R>(worst));
    }

    // 3. HSQ-PI4
    {
        R got = weighted_h_sum(HWeight::squared, R(2), {}, ctx);
        double err = std::abs(RT::to_double(got - pow(pi, 4) / R(32)));
        report(3, "HSQ-PI4", err <= 1e-10, errstr<R>(err));
    }

    // 4. CHEN + ALT-SUM + EVEN-INDEX-SUM
    {
        R zh2 = zeta_h_series(Cplx<R>(R(2)), ctx).re;
        double chen = std::abs(RT::to_double(zh2 - R(1.75) * detail::zeta_int<R>(3)));
        R alt = weighted_h_sum(HWeight::alternating, R(2), {}, ctx);
        double alt_err = std::abs(RT::to_double(
            alt - (R(1.75) * detail::zeta_int<R>(3) - pi * RT::catalan())));
        R even = weighted_h_sum(HWeight::even_indices, R(2), {}, ctx);
        double even_err = std::abs(RT::to_double(
            even - (R(1.75) * detail::zeta_int<R>(3) - RT::half_pi() * RT::catalan())));
        bool ok = chen <= 1e-10 && alt_err <= 1e-8 && even_err <= 1e-8;
        report(4, "CHEN/ALT/EVEN", ok, errstr<R>(std::max({chen, alt_err, even_err})));
    }

    // 5. COR1 grid + BRADLEY-SYM
    {
        double worst_c = 0;
        for (double r : {0.0, 0.05, 0.10, 0.15, 0.20, 0.25}) {
            R lhs = bradley_T(RT::of(r), ctx).value;
            HWeightParams p{r};
            R cosine = weighted_h_sum(HWeight::cosine, R(2), p, ctx);
            R rhs = (cosine - R(1.75) * detail::zeta_int<R>(3)) / pi;
            worst_c = std::max(worst_c, std::abs(RT::to_double(lhs - rhs)));
        }
        double worst_b = 0;
        for (double r : {0.0, 0.05, 0.10, 0.15, 0.20, 0.25}) {
            R lhs = bradley_T(RT::of(r), ctx).value;
            R rhs = bradley_T(R(0.5) - RT::of(r), ctx).value;
            worst_b = std::max(worst_b, std::abs(RT::to_double(lhs - rhs)));
        }
        report(5, "COR1/BRADLEY-SYM", worst_c <= 1e-6 && worst_b <= 1e-9,
               errstr<R>(std::max(worst_c, worst_b)));
    }

    // 6. COR2, COR3 (m = 1..5) and the COR2 -> COR3 round trip
    {
        auto zeta_r = [&](int j) { return j == 0 ? R(-0.5) : detail::zeta_int<R>(j); };
        double worst = 0;
        std::vector<R> zh_from_cor2(6);
        for (int m = 1; m <= 5; ++m) {
            R rhs(0);
            for (int k = 1; k <= m; ++k)
                rhs = rhs + (Rational(2).pow(2 * k + 1) - Rational(1)).to_real<R>() *
                                zeta_r(2 * m - 2 * k) * zeta_r(2 * k + 1);
            rhs = R(-0.5) * rhs;
            zh_from_cor2[static_cast<size_t>(m)] = rhs;
            R lhs = zeta_h_series(Cplx<R>(R(2 * m)), ctx).re;
            worst = std::max(worst, std::abs(RT::to_double(lhs - rhs)));
        }
        for (int m = 1; m <= 5; ++m) {
            R rhs(0);
            for (int k = 1; k <= m; ++k)
                rhs = rhs + zeta_h_series(Cplx<R>(R(2 * k)), ctx).re *
                                (Rational(2).pow(2 * m - 2 * k + 2) - Rational(1)).to_real<R>() *
                                zeta_r(2 * m - 2 * k + 2);
            rhs = rhs * R(8) /
                  (pow(pi, 2) * (Rational(2).pow(2 * m + 1) - Rational(1)).to_real<R>());
            worst = std::max(worst, std::abs(RT::to_double(zeta_r(2 * m + 1) - rhs)));
        }
        // round trip: feed the COR2 values through COR3
        double worst_rt = 0;
        for (int m = 1; m <= 5; ++m) {
            R rhs(0);
            for (int k = 1; k <= m; ++k)
                rhs = rhs + zh_from_cor2[static_cast<size_t>(k)] *
                                (Rational(2).pow(2 * m - 2 * k + 2) - Rational(1)).to_real<R>() *
                                zeta_r(2 * m - 2 * k + 2);
            rhs = rhs * R(8) /
                  (pow(pi, 2) * (Rational(2).pow(2 * m + 1) - Rational(1)).to_real<R>());
            worst_rt = std::max(worst_rt, std::abs(RT::to_double(zeta_r(2 * m + 1) - rhs)));
        }
        report(6, "COR2/COR3", worst <= 1e-10 && worst_rt <= 1e-9,
               errstr<R>(std::max(worst, worst_rt)));
    }

    // 7. APERY-REP
    {
        HWeightParams r1{1.0 / 20.0}, r3{3.0 / 20.0};
        R c1 = weighted_h_sum(HWeight::cosine, R(2), r1, ctx);
        R c3 = weighted_h_sum(HWeight::cosine, R(2), r3, ctx);
        R alt = weighted_h_sum(HWeight::alternating, R(2), {}, ctx);
        R rhs = (R(5) * c1 - R(5) * c3 + R(2) * alt) * R(2) / R(7);
        double err = std::abs(RT::to_double(detail::zeta_int<R>(3) - rhs));
        report(7, "APERY-REP", err <= 1e-5, errstr<R>(err));
    }

    // 8. continuation cross-paths
    {
        double worst = 0;
        for (double s : {2.2, 2.5, 3.5, 4.0}) {
            Cplx<R> a = zeta_h_via_hurwitz(Cplx<R>(RT::of(s)), ctx);
            Cplx<R> b = zeta_h_series(Cplx<R>(RT::of(s)), ctx);
            worst = std::max(worst, mag(a - b));
        }
        bool hurwitz_ok = worst <= 1e-8;
        double worst_m = 0;
        for (auto s : {Cplx<R>(R(2)), Cplx<R>(R(3)), Cplx<R>(R(2), R(3))}) {
            Cplx<R> mellin = mellin_log_tanh_sq(s, ctx).value * rpow(R(4), s - R(2)) *
                             rgamma(s - R(1));
            Cplx<R> series = zeta_h_series(s, ctx);
            worst_m = std::max(worst_m, mag(mellin - series));
        }
        report(8, "CROSS-PATHS", hurwitz_ok && worst_m <= 1e-8,
               errstr<R>(std::max(worst, worst_m)));
    }

    // 9. pole structure and trivial zeros
    {
        auto p0 = pole_info<R>(0, ctx);
        double lead = std::abs(RT::to_double(p0.leading_numeric) - 0.5);
        double res0 = std::abs(
            RT::to_double(p0.residue_numeric - (RT::ln2() + R(0.5) * RT::euler_gamma())));
        auto p1 = pole_info<R>(1, ctx);
        double res1 = std::abs(RT::to_double(p1.residue_numeric) - 1.0 / 48.0);
        double worst_z = 0;
        for (int n = 1; n <= 3; ++n)
            worst_z = std::max(worst_z, mag(zeta_h(Cplx<R>(R(-2 * n)), ctx)));
        bool ok = lead <= 1e-6 && res0 <= 1e-6 && res1 <= 1e-6 && worst_z <= 1e-8;
        report(9, "POLES/ZEROS", ok, errstr<R>(std::max({lead, res0, res1, worst_z})));
    }

    // 10. EXPZ + EXPZ-LIMIT + DIGAMMA-ID
    {
        double worst_e = 0;
        for (auto z : {Cplx<R>(R(1)), Cplx<R>(R(1), R(1)), Cplx<R>(R(3))}) {
            auto [lhs, rhs] = exp_kernel_identity(z, ctx);
            worst_e = std::max(worst_e, mag(lhs - rhs));
        }
        double worst_l = 0;
        for (int k = 1; k <= 6; ++k) {
            auto [lhs, rhs] = exp_kernel_limit<R>(k, ctx);
            worst_l = std::max(worst_l, mag(lhs - rhs));
        }
        double worst_d = 0;
        for (double z : {0.5, 1.0, 2.0}) {
            auto [lhs, rhs] = digamma_identity_check(Cplx<R>(RT::of(z)), ctx);
            worst_d = std::max(worst_d, mag(lhs - rhs));
        }
        bool ok = worst_e <= 1e-8 && worst_l <= 1e-9 && worst_d <= 1e-8;
        report(10, "EXPZ/DIGAMMA", ok, errstr<R>(std::max({worst_e, worst_l, worst_d})));
    }

    // 11. TAN-SC
    {
        double worst = 0;
        for (double x : {0.25, 0.5, 1.0}) {
            auto [lhs, rhs] = tan_series_check(RT::of(x), ctx);
            worst = std::max(worst, std::abs(RT::to_double(lhs - rhs)));
        }
        report(11, "TAN-SC", worst <= 1e-8, errstr<R>(worst));
    }

    // 12. the Mellin suite: H(s), Parseval line, zeta(3) line formula
    {
        double worst_h = 0;
        for (double s : {2.0, 3.0, 2.5}) {
            Cplx<R> sc(RT::of(s));
            Cplx<R> sm2 = sc - R(2);
            auto head = tanh_sinh<R, Cplx<R>>(
                [&](R, R da, R) {
                    using std::log;
                    return Cplx<R>(-log_tanh_accurate(da)) * exp(sm2 * log(da));
                },
                R(0), R(1), ctx);
            auto tail = tanh_sinh<R, Cplx<R>>(
                [&](R x, R, R) {
                    using std::log;
                    return Cplx<R>(-log_tanh_accurate(x)) * exp(sm2 * log(x));
                },
                R(1), RT::of(RT::working_digits > 20 ? 42.0 : 24.0), ctx);
            Cplx<R> lhs = head.value + tail.value;
            Cplx<R> rhs = rpow(R(4), Cplx<R>(R(1)) - sc) * gamma(sc - R(1)) *
                          hurwitz_zeta(sc, R(0.5), ctx);
            worst_h = std::max(worst_h, mag(lhs - rhs));
        }
        auto line = vertical_line_integral<R>(
            [&](Cplx<R> s) {
                return abs2(gamma(s - R(1)) * hurwitz_zeta(s, R(0.5), ctx));
            },
            R(1.5), ctx);
        double pm = std::abs(
            RT::to_double(line.value / (R(8) * pi) - zeta_h_series(Cplx<R>(R(2)), ctx).re));
        using std::cos;
        using std::cosh;
        using std::sqrt;
        R s2 = sqrt(R(2));
        auto zl = vertical_line_integral<R>(
            [&](Cplx<R> s) {
                R t = s.im;
                R weight = (R(9) - R(4) * s2 * cos(t * RT::ln2())) / cosh(pi * t);
                return weight * abs2(riemann_zeta(s, ctx));
            },
            R(1.5), ctx);
        double z3 = std::abs(
            RT::to_double(R(0.5) * zl.value / R(7) - detail::zeta_int<R>(3)));
        bool ok = worst_h <= 1e-9 && pm <= 1e-6 && z3 <= 1e-6;
        report(12, "MELLIN-SUITE", ok, errstr<R>(std::max({worst_h, pm, z3})));
    }

    // 13. ZHODD-POLYLOG
    {
        double worst_im = 0, worst_re = 0;
        for (int n : {1, 2}) {
            auto [integral, rhs] = zhodd_polylog_check<R>(n, ctx);
            worst_im = std::max(worst_im, std::abs(RT::to_double(integral.im - rhs)));
            worst_re = std::max(worst_re, std::abs(RT::to_double(integral.re)));
        }
        report(13, "ZHODD-POLYLOG", worst_im <= 1e-8 && worst_re <= 1e-9,
               errstr<R>(std::max(worst_im, worst_re)));
    }

    // 14. exact-arithmetic suite (no floats anywhere)
    {
        bool ok = true;
        for (int n = 1; n <= 40 && ok; ++n) {
            Rational s;
            for (int k = 0; k <= n; ++k)
                s += Rational(binomial(static_cast<unsigned>(n) + 1,
                                       static_cast<unsigned>(k))) *
                     bernoulli_number(k);
            ok = s.is_zero();
        }
        for (int n = 0; n <= 12 && ok; ++n) {
            Rational lhs = bernoulli_polynomial(n).eval(Rational::of(1, 2));
            Rational rhs = (Rational(2).pow(1 - n) - Rational(1)) * bernoulli_number(n);
            ok = lhs == rhs;
        }
        std::mt19937 rng(77);
        std::uniform_int_distribution<long> coef(-9, 9);
        for (int trial = 0; trial < 10 && ok; ++trial) {
            RationalPoly p;
            for (int k = 1; k <= 5; ++k) {
                long c = coef(rng);
                if (c != 0) p = p + bernoulli_polynomial(2 * k - 1).scaled(Rational(c));
            }
            if (p.is_zero()) continue;
            auto lam = antisymmetric_bernoulli_decomposition(p);
            RationalPoly back;
            for (size_t k = 0; k < lam.size(); ++k)
                back = back + bernoulli_polynomial(2 * static_cast<int>(k) + 1)
                                  .scaled(lam[k].coef);
            ok = back == p;
        }
        report(14, "EXACT-SUITE", ok, ok ? "all equalities exact" : "exact check failed");
    }

    // 15. property suite
    {
        std::mt19937 rng(4242);
        std::uniform_real_distribution<double> U(-8.0, 8.0);
        double worst_g = 0;
        for (int i = 0; i < 40; ++i) {
            double re = U(rng), im = U(rng);
            if (std::abs(im) < 0.05 && std::abs(re - std::round(re)) < 0.05) continue;
            Cplx<R> s(RT::of(re), RT::of(im));
            Cplx<R> lhs = gamma(s) * gamma(Cplx<R>(R(1)) - s) * sin(s * pi) / pi;
            worst_g = std::max(worst_g, mag(lhs - Cplx<R>(R(1))));
        }
        double worst_p = 0;
        std::uniform_real_distribution<double> Up(-20.0, 20.0);
        for (int i = 0; i < 100; ++i) {
            double re = Up(rng), im = Up(rng);
            if (std::abs(im) < 0.1 && std::abs(re - std::round(re)) < 0.05) continue;
            Cplx<R> s(RT::of(re), RT::of(im));
            Cplx<R> lhs = digamma(s + R(1)) - digamma(s);
            worst_p = std::max(
                worst_p, mag(lhs - Cplx<R>(R(1)) / s) / (1.0 + mag(Cplx<R>(R(1)) / s)));
        }
        double worst_s = 0;
        std::uniform_real_distribution<double> Ux(0.05, 1.0), Us(-3.0, 6.0);
        for (int i = 0; i < 30; ++i) {
            R x = RT::of(Ux(rng));
            Cplx<R> s(RT::of(Us(rng)), RT::of(Us(rng)));
            if (std::abs(RT::to_double(s.re) - 1.0) < 0.05) continue;
            Cplx<R> lhs = hurwitz_zeta(s, x, ctx) - rpow(x, -s);
            Cplx<R> rhs = hurwitz_zeta(s, x + R(1), ctx);
            worst_s = std::max(worst_s, mag(lhs - rhs) / (1.0 + mag(rhs)));
        }
        double worst_c = 0;
        for (auto s : {Cplx<R>(R(2), R(3)), Cplx<R>(R(0.3), R(2))}) {
            Cplx<R> a = zeta_h(conj(s), ctx);
            Cplx<R> b = conj(zeta_h(s, ctx));
            worst_c = std::max(worst_c, mag(a - b));
        }
        auto suite_a = IdentityCatalog::instance().run_suite("GF", ctx, 1);
        auto suite_b = IdentityCatalog::instance().run_suite("GF", ctx, 4);
        bool deterministic = suite_a.reports.size() == suite_b.reports.size();
        for (size_t i = 0; deterministic && i < suite_a.reports.size(); ++i)
            deterministic = suite_a.reports[i].same_result(suite_b.reports[i]);
        bool ok = worst_g <= 1e-10 && worst_p <= 1e-10 && worst_s <= 1e-9 &&
                  worst_c <= 1e-12 && deterministic;
        report(15, "PROPERTIES", ok,
               errstr<R>(std::max({worst_g, worst_p, worst_s, worst_c})) +
                   (deterministic ? "" : " [nondeterministic suite]"));
    }
}

} // namespace

int main(int argc, char** argv) {
    bool high = argc > 1 && std::strcmp(argv[1], "--high") == 0;
    PrecisionContext ctx = high ? PrecisionContext::high() : PrecisionContext::standard();
    std::printf("acceptance suite (%s precision kernels)\n", high ? "double-double" : "double");
    if (high)
        run_all<DDouble>(ctx);
    else
        run_all<double>(ctx);
    std::printf("%s: %d criterion(s) failed\n", g_failures == 0 ? "OK" : "FAILURES",
                g_failures);
    return g_failures == 0 ? 0 : 1;
}
