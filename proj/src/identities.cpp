// Copyright Contributors to the hzeta Project
// SPDX-License-Identifier: Apache-2.0

#include "hzeta/identities.hpp"

#include "hzeta/continuation.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

namespace hzeta {

namespace {

template <class R>
std::string fmt_real(R v) {
    return Real<R>::str(v, std::is_same_v<R, double> ? 17 : 34);
}

template <class R>
std::string fmt_value(const Cplx<R>& v) {
    if (Real<R>::to_double(v.im) == 0.0) return fmt_real(v.re);
    using std::abs;
    std::string s = fmt_real(v.re);
    s += Real<R>::to_double(v.im) < 0 ? " - " : " + ";
    s += fmt_real(abs(v.im));
    s += "i";
    return s;
}

template <class R>
void fill_report(IdentityReport& rep, const Cplx<R>& lhs, const Cplx<R>& rhs) {
    rep.lhs = fmt_value(lhs);
    rep.rhs = fmt_value(rhs);
    double d = std::sqrt(Real<R>::to_double(abs2(lhs - rhs)));
    double scale = std::sqrt(Real<R>::to_double(abs2(rhs)));
    rep.abs_err = d;
    rep.rel_err = scale > 0.0 ? d / scale : d;
}

template <class R>
void fill_report(IdentityReport& rep, R lhs, R rhs) {
    fill_report(rep, Cplx<R>(lhs), Cplx<R>(rhs));
}

template <class R>
struct RealTag {
    using type = R;
};

template <class F>
std::function<void(const PrecisionContext&, IdentityReport&)> make_eval(F f) {
    return [f](const PrecisionContext& ctx, IdentityReport& rep) {
        if (ctx.use_dd())
            f(RealTag<DDouble>{}, ctx, rep);
        else
            f(RealTag<double>{}, ctx, rep);
    };
}

std::string num_str(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

// ---------------------------------------------------------------------------
// shared evaluation helpers
// ---------------------------------------------------------------------------

/// int_0^{pi/2} P(2x/pi) log tan x dx by quadrature.
template <class R>
R poly_log_tan_integral(const RationalPoly& p, const PrecisionContext& ctx) {
    auto coeffs = p.real_coeffs<R>();
    R two_over_pi = R(2) / Real<R>::pi();
    auto est = tanh_sinh<R, R>(
        [&](R x, R da, R db) {
            R u = two_over_pi * x;
            R acc(0);
            for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * u + *it;
            return acc * log_tan_01<R>(x, da, db);
        },
        R(0), Real<R>::half_pi(), ctx);
    return est.value;
}

/// H(s) = -int_0^infty log(tanh x) x^{s-2} dx, Re s > 1.
template <class R>
Cplx<R> h_mellin_first_power(Cplx<R> s, const PrecisionContext& ctx) {
    using RT = Real<R>;
    Cplx<R> sm2 = s - R(2);
    auto head = tanh_sinh<R, Cplx<R>>(
        [&](R, R da, R) {
            using std::log;
            return Cplx<R>(-log_tanh_accurate(da)) * exp(sm2 * log(da));
        },
        R(0), R(1), ctx);
    double sigma = RT::to_double(s.re);
    double goal = std::min(ctx.goal(1.0), RT::working_digits > 20 ? 1e-30 : 1e-14);
    double X = 8.0;
    while (2.0 * std::exp(-2.0 * X) * std::pow(X, std::max(sigma, 2.0) - 2.0) > 0.02 * goal &&
           X < 400.0)
        X += 2.0;
    auto tail = tanh_sinh<R, Cplx<R>>(
        [&](R x, R, R) {
            using std::log;
            return Cplx<R>(-log_tanh_accurate(x)) * exp(sm2 * log(x));
        },
        R(1), RT::of(X), ctx);
    return head.value + tail.value;
}

/// sum_{k>=0} cos((2k+1) theta)/(2k+1): direct block plus Euler-transformed tail.
template <class R>
R odd_cosine_series(R theta, const PrecisionContext&) {
    using RT = Real<R>;
    long K = RT::working_digits > 20 ? 600 : 240;
    CompensatedSum<R> block;
    using std::cos;
    for (long k = 0; k < K; ++k)
        block.add(cos(R(static_cast<double>(2 * k + 1)) * theta) / R(static_cast<double>(2 * k + 1)));
    // tail: Re[ e^{i theta} sum_{k>=K} a_k e^{2 i k theta} ], a_k = 1/(2k+1)
    auto a = [](long k) { return R(1) / R(static_cast<double>(2 * k + 1)); };
    Cplx<R> tail = detail::oscillatory_tail(a, K, R(2) * theta);
    R st, ct;
    if constexpr (std::is_same_v<R, double>) {
        st = std::sin(theta);
        ct = std::cos(theta);
    } else {
        sincos(theta, st, ct);
    }
    return block.value() + (Cplx<R>(ct, st) * tail).re;
}

std::vector<std::pair<std::string, RationalPoly>> antisymmetric_test_polys() {
    std::vector<std::pair<std::string, RationalPoly>> polys;
    for (int m = 1; m <= 5; ++m)
        polys.emplace_back("B" + std::to_string(2 * m - 1), bernoulli_polynomial(2 * m - 1));
    for (int m = 1; m <= 5; ++m)
        polys.emplace_back("E" + std::to_string(2 * m - 1), euler_polynomial(2 * m - 1));
    // seeded random combinations in the odd Bernoulli basis
    std::mt19937 rng(20240811u);
    std::uniform_int_distribution<long> coef(-9, 9);
    for (int trial = 1; trial <= 5; ++trial) {
        RationalPoly p;
        for (int k = 1; k <= 5; ++k) {
            long c = coef(rng);
            if (c != 0) p = p + bernoulli_polynomial(2 * k - 1).scaled(Rational(c));
        }
        if (p.is_zero()) p = bernoulli_polynomial(1);
        polys.emplace_back("R" + std::to_string(trial), p);
    }
    return polys;
}

// ---------------------------------------------------------------------------
// family builders
// ---------------------------------------------------------------------------

IdentityFamily f_lemma1() {
    IdentityFamily fam{"LEMMA1", "int_0^{pi/2} sin(4nx) log(tan x) dx = -h_n/n",
                       "lhs: tanh-sinh quadrature of the oscillatory integrand; "
                       "rhs: exact rational h_n/n",
                       {}};
    for (int n = 1; n <= 12; ++n) {
        fam.instances.push_back(
            {"n=" + std::to_string(n), 1e-9,
             make_eval([n](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
                 using R = typename decltype(tag)::type;
                 auto lhs = log_tangent_sin_integral<R>(n, ctx);
                 R rhs = -(HarmonicCache::h(n) / Rational(n)).to_real<R>();
                 fill_report(rep, lhs.value, rhs);
             })});
    }
    return fam;
}

IdentityFamily f_logtan_fourier() {
    IdentityFamily fam{"LOGTAN-FOURIER",
                       "log(tan x) = -2 sum_k cos(2(2k+1)x)/(2k+1) on (0, pi/2)",
                       "lhs: direct log tan; rhs: Fourier series with Euler-transformed tail",
                       {}};
    for (double x : {0.3, 0.7, 1.1}) {
        fam.instances.push_back(
            {"x=" + num_str(x), 1e-8,
             make_eval([x](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
                 using R = typename decltype(tag)::type;
                 using std::log;
                 using std::tan;
                 R xx(x);
                 R lhs = log(tan(xx));
                 R rhs = R(-2) * odd_cosine_series(R(2) * xx, ctx);
                 fill_report(rep, lhs, rhs);
             })});
    }
    return fam;
}

IdentityFamily f_parseval_pi3() {
    IdentityFamily fam{"PARSEVAL-PI3", "int_0^{pi/2} log^2(tan x) dx = pi^3/8",
                       "lhs: tanh-sinh quadrature; rhs: closed form pi^3/8", {}};
    fam.instances.push_back(
        {"", 1e-10, make_eval([](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
             using R = typename decltype(tag)::type;
                 using std::pow;
             auto lhs = tanh_sinh<R, R>(
                 [&](R x, R da, R db) {
                     R lt = log_tan_01<R>(x, da, db);
                     return lt * lt;
                 },
                 R(0), Real<R>::half_pi(), ctx);
             R rhs = pow(Real<R>::pi(), 3) / R(8);
             fill_report(rep, lhs.value, rhs);
         })});
    return fam;
}

IdentityFamily f_hsq_pi4() {
    IdentityFamily fam{"HSQ-PI4", "sum h_n^2/n^2 = pi^4/32",
                       "lhs: Euler-Maclaurin accelerated series; rhs: closed form", {}};
    fam.instances.push_back(
        {"", 1e-10, make_eval([](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
             using R = typename decltype(tag)::type;
                 using std::pow;
             R lhs = weighted_h_sum(HWeight::squared, R(2), {}, ctx);
             R rhs = pow(Real<R>::pi(), 4) / R(32);
             fill_report(rep, lhs, rhs);
         })});
    return fam;
}

IdentityFamily f_chen() {
    IdentityFamily fam{"CHEN", "sum h_n/n^2 = (7/4) zeta(3)",
                       "lhs: h-series with digamma-asymptotic tail; rhs: zeta(3) by "
                       "Euler-Maclaurin",
                       {}};
    fam.instances.push_back(
        {"", 1e-10, make_eval([](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
             using R = typename decltype(tag)::type;
             R lhs = zeta_h_series(Cplx<R>(R(2)), ctx).re;
             R rhs = R(1.75) * detail::zeta_int<R>(3);
             fill_report(rep, lhs, rhs);
         })});
    return fam;
}

IdentityFamily f_catalan_step() {
    IdentityFamily fam{"CATALAN-STEP", "L(step at pi/4) = -T(1/4) = G",
                       "lhs: quadrature of -int_0^{pi/4} log tan; rhs: Catalan constant "
                       "by its binomial series",
                       {}};
    fam.instances.push_back(
        {"", 1e-10, make_eval([](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
             using R = typename decltype(tag)::type;
             R lhs = -bradley_T(R(0.25), ctx).value;
             fill_report(rep, lhs, Real<R>::catalan());
         })});
    return fam;
}

IdentityFamily f_alt_sum() {
    IdentityFamily fam{"ALT-SUM", "sum (-1)^n h_n/n^2 = (7/4) zeta(3) - pi G",
                       "lhs: even/total series split; rhs: zeta(3) and Catalan constants", {}};
    fam.instances.push_back(
        {"", 1e-8, make_eval([](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
             using R = typename decltype(tag)::type;
             R lhs = weighted_h_sum(HWeight::alternating, R(2), {}, ctx);
             R rhs = R(1.75) * detail::zeta_int<R>(3) - Real<R>::pi() * Real<R>::catalan();
             fill_report(rep, lhs, rhs);
         })});
    return fam;
}

IdentityFamily f_even_index_sum() {
    IdentityFamily fam{"EVEN-INDEX-SUM",
                       "sum h_{2n}/(2n)^2 = (7/4) zeta(3) - (pi/2) G",
                       "lhs: even-index series with shifted-log tail; rhs: closed form", {}};
    fam.instances.push_back(
        {"", 1e-8, make_eval([](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
             using R = typename decltype(tag)::type;
             R lhs = weighted_h_sum(HWeight::even_indices, R(2), {}, ctx);
             R rhs = R(1.75) * detail::zeta_int<R>(3) -
                     Real<R>::half_pi() * Real<R>::catalan();
             fill_report(rep, lhs, rhs);
         })});
    return fam;
}

IdentityFamily f_cor1() {
    IdentityFamily fam{"COR1",
                       "T(r) = -(7/(4pi)) zeta(3) + (1/pi) sum h_n cos(4n r pi)/n^2",
                       "lhs: tanh-sinh quadrature of T(r); rhs: oscillatory h-series with "
                       "Euler-transformed tails",
                       {}};
    for (double r : {0.0, 0.05, 0.10, 0.15, 0.20, 0.25}) {
        fam.instances.push_back(
            {"r=" + num_str(r), 1e-6,
             make_eval([r](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
                 using R = typename decltype(tag)::type;
                 R lhs = bradley_T(Real<R>::of(r), ctx).value;
                 HWeightParams p{r};
                 R cosine = weighted_h_sum(HWeight::cosine, R(2), p, ctx);
                 R rhs = (cosine - R(1.75) * detail::zeta_int<R>(3)) / Real<R>::pi();
                 fill_report(rep, lhs, rhs);
             })});
    }
    return fam;
}

IdentityFamily f_bradley_sym() {
    IdentityFamily fam{"BRADLEY-SYM", "T(1/2 - r) = T(r)",
                       "both sides by quadrature on the two reflected intervals", {}};
    for (double r : {0.0, 0.05, 0.10, 0.15, 0.20, 0.25}) {
        fam.instances.push_back(
            {"r=" + num_str(r), 1e-9,
             make_eval([r](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
                 using R = typename decltype(tag)::type;
                 R lhs = bradley_T(Real<R>::of(r), ctx).value;
                 R rhs = bradley_T(R(0.5) - Real<R>::of(r), ctx).value;
                 fill_report(rep, lhs, rhs);
             })});
    }
    return fam;
}

IdentityFamily f_apery() {
    IdentityFamily fam{"APERY-REP",
                       "zeta(3) = (2/7) sum h_n/n^2 (5 cos(n pi/5) - 5 cos(3n pi/5) + 2(-1)^n)",
                       "lhs: zeta(3) by Euler-Maclaurin; rhs: three oscillatory h-series "
                       "accelerated by tail Euler transforms",
                       {}};
    fam.instances.push_back(
        {"", 1e-5, make_eval([](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
             using R = typename decltype(tag)::type;
             HWeightParams r1{1.0 / 20.0}, r3{3.0 / 20.0};
             R c1 = weighted_h_sum(HWeight::cosine, R(2), r1, ctx);
             R c3 = weighted_h_sum(HWeight::cosine, R(2), r3, ctx);
             R alt = weighted_h_sum(HWeight::alternating, R(2), {}, ctx);
             R rhs = (R(5) * c1 - R(5) * c3 + R(2) * alt) * R(2) / R(7);
             fill_report(rep, detail::zeta_int<R>(3), rhs);
         })});
    return fam;
}

IdentityFamily f_cor2() {
    IdentityFamily fam{"COR2",
                       "zeta_h(2m) = -(1/2) sum_k (2^{2k+1}-1) zeta(2m-2k) zeta(2k+1)",
                       "lhs: h-series; rhs: finite zeta combination (zeta(0) = -1/2)", {}};
    for (int m = 1; m <= 5; ++m) {
        fam.instances.push_back(
            {"m=" + std::to_string(m), 1e-10,
             make_eval([m](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
                 using R = typename decltype(tag)::type;
                 using std::pow;
                 R lhs = zeta_h_series(Cplx<R>(R(2 * m)), ctx).re;
                 R rhs(0);
                 for (int k = 1; k <= m; ++k) {
                     R z_even = (m == k) ? R(-0.5) : detail::zeta_int<R>(2 * m - 2 * k);
                     rhs = rhs + (Rational(2).pow(2 * k + 1) - Rational(1)).to_real<R>() *
                                     z_even * detail::zeta_int<R>(2 * k + 1);
                 }
                 rhs = R(-0.5) * rhs;
                 fill_report(rep, lhs, rhs);
             })});
    }
    return fam;
}

IdentityFamily f_cor2_rewrite() {
    IdentityFamily fam{"COR2-REWRITE",
                       "zeta_h(2m) = (2^{2m+1}-1)/4 zeta(2m+1) - (1/2) sum_{k<m} "
                       "(2^{2k+1}-1) zeta(2m-2k) zeta(2k+1)",
                       "lhs: h-series; rhs: rewritten finite zeta combination", {}};
    for (int m = 2; m <= 5; ++m) {
        fam.instances.push_back(
            {"m=" + std::to_string(m), 1e-10,
             make_eval([m](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
                 using R = typename decltype(tag)::type;
                 using std::pow;
                 R lhs = zeta_h_series(Cplx<R>(R(2 * m)), ctx).re;
                 R rhs = (Rational(2).pow(2 * m + 1) - Rational(1)).to_real<R>() / R(4) *
                         detail::zeta_int<R>(2 * m + 1);
                 for (int k = 1; k <= m - 1; ++k)
                     rhs = rhs - R(0.5) *
                                     (Rational(2).pow(2 * k + 1) - Rational(1)).to_real<R>() *
                                     detail::zeta_int<R>(2 * m - 2 * k) *
                                     detail::zeta_int<R>(2 * k + 1);
                 fill_report(rep, lhs, rhs);
             })});
    }
    return fam;
}

IdentityFamily f_th2() {
    IdentityFamily fam{"TH2",
                       "int P(2x/pi) log tan = 4 sum_k (-1)^k/(2pi)^{2k-1} P^{(2k-2)}(0) "
                       "zeta_h(2k) for antisymmetric P",
                       "lhs: quadrature; rhs: derivative data at 0 against h-series values", {}};
    for (const auto& [name, poly] : antisymmetric_test_polys()) {
        fam.instances.push_back(
            {"P=" + name, 1e-8,
             make_eval([p = poly](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
                 using R = typename decltype(tag)::type;
                 using std::pow;
                 R lhs = poly_log_tan_integral<R>(p, ctx);
                 int m = (p.degree() + 1) / 2;
                 R rhs(0);
                 R two_pi = Real<R>::two_pi();
                 for (int k = 1; k <= m; ++k) {
                     R deriv = p.derivative(2 * k - 2).eval(Rational(0)).to_real<R>();
                     R term = deriv * zeta_h_series(Cplx<R>(R(2 * k)), ctx).re /
                              pow(two_pi, 2 * k - 1);
                     rhs = (k % 2 == 0) ? rhs + term : rhs - term;
                 }
                 rhs = R(4) * rhs;
                 fill_report(rep, lhs, rhs);
             })});
    }
    return fam;
}

IdentityFamily f_lp() {
    IdentityFamily fam{"LP",
                       "int P(2x/pi) log tan = sum_k (-1)^{k-1}/pi^{2k-1} c_k(P) zeta(2k+1)",
                       "lhs: quadrature; rhs: exact c_k(P) against zeta at odd integers", {}};
    auto polys = antisymmetric_test_polys();
    polys.emplace_back("x", RationalPoly::monomial(1));
    polys.emplace_back("x^2", RationalPoly::monomial(2));
    polys.emplace_back("x^3+2x-1",
                       RationalPoly(std::vector<Rational>{Rational(-1), Rational(2),
                                                          Rational(0), Rational(1)}));
    for (const auto& [name, poly] : polys) {
        fam.instances.push_back(
            {"P=" + name, 1e-8,
             make_eval([p = poly](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
                 using R = typename decltype(tag)::type;
                 using std::pow;
                 R lhs = poly_log_tan_integral<R>(p, ctx);
                 int kmax = (p.degree() + 1) / 2;
                 R rhs(0);
                 for (int k = 1; k <= kmax; ++k) {
                     R term = c_coefficient(p, k).to_real<R>() *
                              detail::zeta_int<R>(2 * k + 1) / pow(Real<R>::pi(), 2 * k - 1);
                     rhs = (k % 2 == 0) ? rhs - term : rhs + term;
                 }
                 fill_report(rep, lhs, rhs);
             })});
    }
    return fam;
}

IdentityFamily f_brn() {
    IdentityFamily fam{"BRN",
                       "int B_{2m-1}(2x/pi) log tan = 2(-1)^{m-1}(2m-1)!/(2pi)^{2m-1} "
                       "sum h_n/n^{2m}",
                       "lhs: quadrature of the Bernoulli polynomial; rhs: h-series", {}};
    for (int m = 1; m <= 5; ++m) {
        fam.instances.push_back(
            {"m=" + std::to_string(m), 1e-9,
             make_eval([m](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
                 using R = typename decltype(tag)::type;
                 using std::pow;
                 R lhs = poly_log_tan_integral<R>(bernoulli_polynomial(2 * m - 1), ctx);
                 R fact = Rational(factorial(static_cast<unsigned>(2 * m - 1))).to_real<R>();
                 R rhs = R(2) * fact / pow(Real<R>::two_pi(), 2 * m - 1) *
                         zeta_h_series(Cplx<R>(R(2 * m)), ctx).re;
                 if (m % 2 == 0) rhs = -rhs;
                 fill_report(rep, lhs, rhs);
             })});
    }
    return fam;
}

IdentityFamily f_cor3() {
    IdentityFamily fam{"COR3",
                       "zeta(2m+1) = 8/(pi^2 (2^{2m+1}-1)) sum_k zeta_h(2k) "
                       "(2^{2m-2k+2}-1) zeta(2m-2k+2)",
                       "lhs: zeta at odd integers by Euler-Maclaurin; rhs: h-series values", {}};
    for (int m = 1; m <= 5; ++m) {
        fam.instances.push_back(
            {"m=" + std::to_string(m), 1e-10,
             make_eval([m](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
                 using R = typename decltype(tag)::type;
                 using std::pow;
                 R lhs = detail::zeta_int<R>(2 * m + 1);
                 R rhs(0);
                 for (int k = 1; k <= m; ++k)
                     rhs = rhs + zeta_h_series(Cplx<R>(R(2 * k)), ctx).re *
                                     (Rational(2).pow(2 * m - 2 * k + 2) - Rational(1))
                                         .to_real<R>() *
                                     detail::zeta_int<R>(2 * m - 2 * k + 2);
                 rhs = rhs * R(8) /
                       (pow(Real<R>::pi(), 2) *
                        (Rational(2).pow(2 * m + 1) - Rational(1)).to_real<R>());
                 fill_report(rep, lhs, rhs);
             })});
    }
    return fam;
}

IdentityFamily f_expz() {
    IdentityFamily fam{"EXPZ",
                       "int e^{2xz} log tan = (e^{pi z}-1)/pi sum h_n/(n^2+(z/2)^2)",
                       "lhs: complex quadrature; rhs: Lorentzian h-series", {}};
    struct Z {
        const char* name;
        double re, im;
    };
    for (Z z : {Z{"z=1", 1, 0}, Z{"z=1+i", 1, 1}, Z{"z=3", 3, 0}}) {
        fam.instances.push_back(
            {z.name, 1e-8,
             make_eval([z](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
                 using R = typename decltype(tag)::type;
                 auto [lhs, rhs] = exp_kernel_identity(Cplx<R>(R(z.re), R(z.im)), ctx);
                 fill_report(rep, lhs, rhs);
             })});
    }
    return fam;
}

IdentityFamily f_expz_limit() {
    IdentityFamily fam{"EXPZ-LIMIT", "int e^{4ikx} log tan = -i h_|k|/k",
                       "lhs: complex quadrature; rhs: exact rational h_k/k", {}};
    for (int k = 1; k <= 6; ++k) {
        fam.instances.push_back(
            {"k=" + std::to_string(k), 1e-9,
             make_eval([k](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
                 using R = typename decltype(tag)::type;
                 auto [lhs, rhs] = exp_kernel_limit<R>(k, ctx);
                 fill_report(rep, lhs, rhs);
             })});
    }
    return fam;
}

IdentityFamily f_digamma_id() {
    IdentityFamily fam{"DIGAMMA-ID",
                       "pi/(2z)(psi((1+iz)/2) - psi(1/2) - i pi/2 tanh(pi z/2)) = "
                       "tanh(pi z/2) sum h_n/(n^2+(z/2)^2)",
                       "lhs: digamma route; rhs: Lorentzian h-series", {}};
    for (double z : {0.5, 1.0, 2.0, 0.001}) {
        fam.instances.push_back(
            {"z=" + num_str(z), 1e-8,
             make_eval([z](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
                 using R = typename decltype(tag)::type;
                 auto [lhs, rhs] = digamma_identity_check(Cplx<R>(Real<R>::of(z)), ctx);
                 fill_report(rep, lhs, rhs);
             })});
    }
    return fam;
}

IdentityFamily f_tan_sc() {
    IdentityFamily fam{"TAN-SC", "tan x = S(x)/C(x) with the alpha/beta power series",
                       "lhs: direct tangent; rhs: series built from zeta and zeta_h values", {}};
    for (double x : {0.25, 0.5, 1.0}) {
        fam.instances.push_back(
            {"x=" + num_str(x), 1e-8,
             make_eval([x](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
                 using R = typename decltype(tag)::type;
                 auto [lhs, rhs] = tan_series_check(Real<R>::of(x), ctx);
                 fill_report(rep, lhs, rhs);
             })});
    }
    return fam;
}

IdentityFamily f_gf() {
    IdentityFamily fam{"GF", "sum h_k x^{2k}/k = (1/4) log^2((1+x)/(1-x))",
                       "lhs: power series with geometric tail bound; rhs: closed form", {}};
    for (double x : {0.5, 0.9, -0.3}) {
        fam.instances.push_back(
            {"x=" + num_str(x), 1e-10,
             make_eval([x](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
                 using R = typename decltype(tag)::type;
                 using std::log;
                 R xx = Real<R>::of(x);
                 R lhs = generating_function_lhs(xx, ctx).value;
                 R l = log((R(1) + xx) / (R(1) - xx));
                 fill_report(rep, lhs, R(0.25) * l * l);
             })});
    }
    return fam;
}

IdentityFamily f_alpha_beta() {
    IdentityFamily fam{"ALPHA-BETA",
                       "mutual recursions between alpha_n = zeta(2n+1)/pi^{2n+1} and "
                       "beta_n = zeta_h(2n)/pi^{2n+1}",
                       "alpha from zeta, beta from the h-series; recursions use exact r_k", {}};
    for (int n = 1; n <= 5; ++n) {
        fam.instances.push_back(
            {"beta n=" + std::to_string(n), 1e-10,
             make_eval([n](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
                 using R = typename decltype(tag)::type;
                 using std::pow;
                 R lhs = beta_coeff<R>(n, ctx);
                 R rhs(0);
                 for (int k = 1; k <= n; ++k)
                     rhs = rhs + (Rational(2).pow(2 * k + 1) - Rational(1)).to_real<R>() *
                                     zeta_even_rational(n - k).to_real<R>() *
                                     alpha_coeff<R>(k, ctx);
                 fill_report(rep, lhs, R(-0.5) * rhs);
             })});
    }
    for (int n = 1; n <= 5; ++n) {
        fam.instances.push_back(
            {"alpha n=" + std::to_string(n), 1e-10,
             make_eval([n](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
                 using R = typename decltype(tag)::type;
                 using std::pow;
                 R lhs = alpha_coeff<R>(n, ctx);
                 R rhs(0);
                 for (int k = 1; k <= n; ++k)
                     rhs = rhs +
                           (Rational(2).pow(2 * (n - k) + 2) - Rational(1)).to_real<R>() *
                               zeta_even_rational(n - k + 1).to_real<R>() * beta_coeff<R>(k, ctx);
                 rhs = R(8) * rhs / (Rational(2).pow(2 * n + 1) - Rational(1)).to_real<R>();
                 fill_report(rep, lhs, rhs);
             })});
    }
    for (int n = 2; n <= 5; ++n) {
        fam.instances.push_back(
            {"residual n=" + std::to_string(n), 1e-10,
             make_eval([n](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
                 using R = typename decltype(tag)::type;
                 fill_report(rep, recursion_residual<R>(n, ctx), R(0));
             })});
    }
    return fam;
}

IdentityFamily f_mellin_zh() {
    IdentityFamily fam{"MELLIN-ZH",
                       "int_0^infty log^2(tanh x) x^{s-2} dx = 4^{2-s} Gamma(s-1) zeta_h(s)",
                       "lhs: split tanh-sinh quadrature; rhs: gamma times the h-series", {}};
    struct S {
        const char* name;
        double re, im;
    };
    for (S s : {S{"s=2", 2, 0}, S{"s=3", 3, 0}, S{"s=2.5", 2.5, 0}, S{"s=2+3i", 2, 3}}) {
        fam.instances.push_back(
            {s.name, 1e-8,
             make_eval([s](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
                 using R = typename decltype(tag)::type;
                 Cplx<R> sc(R(s.re), R(s.im));
                 Cplx<R> lhs = mellin_log_tanh_sq(sc, ctx).value;
                 Cplx<R> rhs = rpow(R(4), Cplx<R>(R(2)) - sc) * gamma(sc - R(1)) *
                               zeta_h_series(sc, ctx);
                 fill_report(rep, lhs, rhs);
             })});
    }
    return fam;
}

IdentityFamily f_ach_cross() {
    IdentityFamily fam{"ACH-CROSS",
                       "zeta_h(s) = (2pi)^{s-1}/(2 Gamma(s-1) cos(pi s/2)) "
                       "int zeta(2-s, 2x/pi) log tan dx",
                       "lhs: Hurwitz-kernel quadrature route; rhs: h-series", {}};
    for (double s : {2.2, 2.5, 3.5, 4.0}) {
        fam.instances.push_back(
            {"s=" + num_str(s), 1e-8,
             make_eval([s](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
                 using R = typename decltype(tag)::type;
                 Cplx<R> sc(Real<R>::of(s));
                 fill_report(rep, zeta_h_via_hurwitz(sc, ctx), zeta_h_series(sc, ctx));
             })});
    }
    return fam;
}

IdentityFamily f_residue() {
    IdentityFamily fam{"RESIDUE",
                       "Laurent data of zeta_h at s=1 and s=1-2n matches the closed forms",
                       "numeric side: contour coefficients around the pole; exact side: "
                       "log 2 + gamma/2 and -B_{2n}(1/2)/(4n)",
                       {}};
    fam.instances.push_back(
        {"k=0 leading", 1e-6,
         make_eval([](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
             using R = typename decltype(tag)::type;
             auto p = pole_info<R>(0, ctx);
             fill_report(rep, p.leading_numeric, p.leading_exact);
         })});
    fam.instances.push_back(
        {"k=0 residue", 1e-6,
         make_eval([](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
             using R = typename decltype(tag)::type;
             auto p = pole_info<R>(0, ctx);
             fill_report(rep, p.residue_numeric, p.residue_exact);
         })});
    for (int k = 1; k <= 2; ++k) {
        fam.instances.push_back(
            {"k=" + std::to_string(k), 1e-6,
             make_eval([k](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
                 using R = typename decltype(tag)::type;
                 auto p = pole_info<R>(k, ctx);
                 fill_report(rep, p.residue_numeric, p.residue_exact);
             })});
    }
    return fam;
}

IdentityFamily f_trivial_zero() {
    IdentityFamily fam{"TRIVIAL-ZERO", "zeta_h(-2n) = 0",
                       "lhs: Mellin-split continuation; rhs: zero", {}};
    for (int n = 1; n <= 3; ++n) {
        fam.instances.push_back(
            {"n=" + std::to_string(n), 1e-8,
             make_eval([n](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
                 using R = typename decltype(tag)::type;
                 fill_report(rep, zeta_h(Cplx<R>(R(-2 * n)), ctx), Cplx<R>(R(0)));
             })});
    }
    return fam;
}

IdentityFamily f_hurwitz_sum() {
    IdentityFamily fam{"HURWITZ-SUM", "sum_n zeta(s,n)/(2n-1) = zeta_h(s)",
                       "lhs: Hurwitz-value series with combined asymptotic tail; rhs: h-series",
                       {}};
    for (double s : {3.0, 2.5}) {
        fam.instances.push_back(
            {"s=" + num_str(s), 1e-8,
             make_eval([s](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
                 using R = typename decltype(tag)::type;
                 Cplx<R> sc(Real<R>::of(s));
                 fill_report(rep, zeta_h_hurwitz_connection(sc, ctx), zeta_h_series(sc, ctx));
             })});
    }
    return fam;
}

IdentityFamily f_zhodd_polylog() {
    IdentityFamily fam{"ZHODD-POLYLOG",
                       "Im int Li_{2n}(e^{4ix}) log tan dx = -zeta_h(2n+1); Re part = 0",
                       "lhs: quadrature with the polylog kernel; rhs: h-series", {}};
    for (int n : {1, 2}) {
        fam.instances.push_back(
            {"n=" + std::to_string(n) + " Im", 1e-8,
             make_eval([n](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
                 using R = typename decltype(tag)::type;
                 auto [integral, rhs] = zhodd_polylog_check<R>(n, ctx);
                 fill_report(rep, integral.im, rhs);
             })});
        fam.instances.push_back(
            {"n=" + std::to_string(n) + " Re", 1e-9,
             make_eval([n](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
                 using R = typename decltype(tag)::type;
                 auto [integral, rhs] = zhodd_polylog_check<R>(n, ctx);
                 (void)rhs;
                 fill_report(rep, integral.re, R(0));
             })});
    }
    return fam;
}

IdentityFamily f_h4_mellin() {
    IdentityFamily fam{"H4-MELLIN",
                       "-int log(tanh x) x^{s-2} dx = 4^{1-s} Gamma(s-1) zeta(s, 1/2)",
                       "lhs: split quadrature; rhs: gamma and Hurwitz zeta", {}};
    for (double s : {2.0, 3.0, 2.5}) {
        fam.instances.push_back(
            {"s=" + num_str(s), 1e-9,
             make_eval([s](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
                 using R = typename decltype(tag)::type;
                 Cplx<R> sc(Real<R>::of(s));
                 Cplx<R> lhs = h_mellin_first_power(sc, ctx);
                 Cplx<R> rhs = rpow(R(4), Cplx<R>(R(1)) - sc) * gamma(sc - R(1)) *
                               hurwitz_zeta(sc, R(0.5), ctx);
                 fill_report(rep, lhs, rhs);
             })});
    }
    return fam;
}

IdentityFamily f_parseval_mellin() {
    IdentityFamily fam{"PARSEVAL-MELLIN",
                       "1/(8pi) int_{Re s = sigma} |Gamma(s-1) zeta(s,1/2)|^2 |ds| = "
                       "Gamma(2 sigma - 2) zeta_h(2 sigma - 1)",
                       "lhs: vertical line integral; rhs: gamma times the h-series", {}};
    fam.instances.push_back(
        {"sigma=1.5", 1e-6,
         make_eval([](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
             using R = typename decltype(tag)::type;
             auto line = vertical_line_integral<R>(
                 [&](Cplx<R> s) {
                     Cplx<R> v = gamma(s - R(1)) * hurwitz_zeta(s, R(0.5), ctx);
                     return abs2(v);
                 },
                 R(1.5), ctx);
             R lhs = line.value / (R(8) * Real<R>::pi());
             R rhs = zeta_h_series(Cplx<R>(R(2)), ctx).re; // Gamma(1) = 1
             fill_report(rep, lhs, rhs);
         })});
    return fam;
}

IdentityFamily f_zeta3_line() {
    IdentityFamily fam{"ZETA3-LINE",
                       "zeta(3) = (1/7) int_0^infty (9 - 4 sqrt2 cos(t log 2))/cosh(pi t) "
                       "|zeta(3/2+it)|^2 dt",
                       "lhs: zeta(3) by Euler-Maclaurin; rhs: critical-strip line integral", {}};
    fam.instances.push_back(
        {"", 1e-6, make_eval([](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
             using R = typename decltype(tag)::type;
             using std::cos;
             using std::cosh;
             using std::sqrt;
             R s2 = sqrt(R(2));
             R l2 = Real<R>::ln2();
             auto line = vertical_line_integral<R>(
                 [&](Cplx<R> s) {
                     R t = s.im;
                     R weight = (R(9) - R(4) * s2 * cos(t * l2)) / cosh(Real<R>::pi() * t);
                     return weight * abs2(riemann_zeta(s, ctx));
                 },
                 R(1.5), ctx);
             // the line integral doubles [0, inf); the identity wants the half line
             R rhs = R(0.5) * line.value / R(7);
             fill_report(rep, detail::zeta_int<R>(3), rhs);
         })});
    return fam;
}

IdentityFamily f_classical_euler() {
    IdentityFamily fam{"CLASSICAL-EULER",
                       "2 sum H_n/n^m = (m+2) zeta(m+1) - sum_k zeta(k+1) zeta(m-k)",
                       "lhs: harmonic series with asymptotic tail; rhs: finite zeta sum", {}};
    for (int m = 2; m <= 5; ++m) {
        fam.instances.push_back(
            {"m=" + std::to_string(m), 1e-8,
             make_eval([m](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
                 using R = typename decltype(tag)::type;
                 auto [lhs, rhs] = classical_euler_sum<R>(ClassicalSum::euler_Hn, m, ctx);
                 fill_report(rep, lhs, rhs);
             })});
    }
    return fam;
}

IdentityFamily f_classical_gp() {
    IdentityFamily fam{"CLASSICAL-GP",
                       "sum H_n/n^{2m+1} = (1/2) sum_k (-1)^k zeta(k) zeta(2m+2-k)",
                       "lhs: harmonic series with asymptotic tail; rhs: finite zeta sum", {}};
    for (int m = 1; m <= 3; ++m) {
        fam.instances.push_back(
            {"m=" + std::to_string(m), 1e-8,
             make_eval([m](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
                 using R = typename decltype(tag)::type;
                 auto [lhs, rhs] =
                     classical_euler_sum<R>(ClassicalSum::georghiou_philippou, m, ctx);
                 fill_report(rep, lhs, rhs);
             })});
    }
    return fam;
}

IdentityFamily f_classical_even() {
    IdentityFamily fam{"CLASSICAL-EVEN",
                       "(2n+1) zeta(2n) = 2 sum_k zeta(2k) zeta(2n-2k)",
                       "both sides from even zeta values (exact rationals times pi powers)", {}};
    for (int n = 2; n <= 5; ++n) {
        fam.instances.push_back(
            {"n=" + std::to_string(n), 1e-10,
             make_eval([n](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
                 using R = typename decltype(tag)::type;
                 auto [lhs, rhs] =
                     classical_euler_sum<R>(ClassicalSum::zeta_even_recursion, n, ctx);
                 fill_report(rep, lhs, rhs);
             })});
    }
    return fam;
}

IdentityFamily f_logtan_taylor() {
    IdentityFamily fam{"LOGTAN-TAYLOR",
                       "log(tan x) = log x + 2 sum_k (2^{2k-1}-1)/k zeta(2k) (x/pi)^{2k}",
                       "lhs: direct log tan; rhs: Taylor series in x/pi", {}};
    for (double x : {0.3, 0.8, 1.2}) {
        fam.instances.push_back(
            {"x=" + num_str(x), 1e-8,
             make_eval([x](auto tag, const PrecisionContext& ctx, IdentityReport& rep) {
                 using R = typename decltype(tag)::type;
                 using std::pow;
                 using std::log;
                 using std::tan;
                 (void)ctx;
                 R xx = Real<R>::of(x);
                 R lhs = log(tan(xx));
                 R u = xx / Real<R>::pi();
                 R u2 = u * u, up = u2;
                 R rhs = log(xx);
                 for (int k = 1; k <= 200; ++k) {
                     R term = (Rational(2).pow(2 * k - 1) - Rational(1)).to_real<R>() / R(k) *
                              detail::zeta_int<R>(2 * k) * up;
                     rhs = rhs + R(2) * term;
                     if (Real<R>::to_double(term) <
                         0.25 * Real<R>::eps * std::abs(Real<R>::to_double(rhs)))
                         break;
                     up = up * u2;
                 }
                 fill_report(rep, lhs, rhs);
             })});
    }
    return fam;
}

} // namespace

// ---------------------------------------------------------------------------
// catalog plumbing
// ---------------------------------------------------------------------------

IdentityCatalog::IdentityCatalog() {
    families_ = {
        f_lemma1(),       f_logtan_fourier(), f_parseval_pi3(),  f_hsq_pi4(),
        f_chen(),         f_catalan_step(),   f_alt_sum(),       f_even_index_sum(),
        f_cor1(),         f_bradley_sym(),    f_apery(),         f_cor2(),
        f_cor2_rewrite(), f_th2(),            f_lp(),            f_brn(),
        f_cor3(),         f_expz(),           f_expz_limit(),    f_digamma_id(),
        f_tan_sc(),       f_gf(),             f_alpha_beta(),    f_mellin_zh(),
        f_ach_cross(),    f_residue(),        f_trivial_zero(),  f_hurwitz_sum(),
        f_zhodd_polylog(), f_h4_mellin(),     f_parseval_mellin(), f_zeta3_line(),
        f_classical_euler(), f_classical_gp(), f_classical_even(), f_logtan_taylor(),
    };
}

const IdentityCatalog& IdentityCatalog::instance() {
    static const IdentityCatalog cat;
    return cat;
}

bool IdentityCatalog::has(const std::string& id) const {
    for (const auto& f : families_)
        if (f.id == id) return true;
    return false;
}

const IdentityFamily& IdentityCatalog::family(const std::string& id) const {
    for (const auto& f : families_)
        if (f.id == id) return f;
    throw not_found_error("unknown identity id: " + id);
}

namespace {

IdentityReport run_instance(const IdentityFamily& fam, const IdentityInstance& inst,
                            const PrecisionContext& ctx) {
    IdentityReport rep;
    rep.id = fam.id;
    rep.params = inst.params;
    rep.tol = inst.tol;
    rep.method_notes = fam.method_notes;
    auto t0 = std::chrono::steady_clock::now();
    try {
        inst.eval(ctx, rep);
        rep.status = (rep.abs_err <= rep.tol || rep.rel_err <= rep.tol) ? "pass" : "fail";
    } catch (const std::exception& e) {
        rep.status = "fail";
        rep.method_notes += std::string(" [exception: ") + e.what() + "]";
    }
    auto t1 = std::chrono::steady_clock::now();
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rep;
}

bool filter_match(const std::string& filter, const std::string& id) {
    if (filter.empty() || filter == "*") return true;
    if (!filter.empty() && filter.back() == '*')
        return id.rfind(filter.substr(0, filter.size() - 1), 0) == 0;
    return filter == id;
}

} // namespace

IdentityReport IdentityCatalog::run_identity(const std::string& id, const std::string& params,
                                             const PrecisionContext& ctx) const {
    const IdentityFamily& fam = family(id);
    for (const auto& inst : fam.instances)
        if (inst.params == params) return run_instance(fam, inst, ctx);
    throw domain_error("identity " + id + ": no instance with params '" + params + "'");
}

SuiteResult IdentityCatalog::run_suite(const std::string& filter, const PrecisionContext& ctx,
                                       int jobs) const {
    ctx.validate();
    struct Item {
        const IdentityFamily* fam;
        const IdentityInstance* inst;
    };
    std::vector<Item> items;
    int families_matched = 0;
    for (const auto& fam : families_) {
        if (!filter_match(filter, fam.id)) continue;
        ++families_matched;
        for (const auto& inst : fam.instances) items.push_back({&fam, &inst});
    }

    SuiteResult result;
    result.reports.resize(items.size());
    if (jobs < 1) jobs = 1;
    jobs = std::min<int>(jobs, static_cast<int>(std::thread::hardware_concurrency()) > 0
                                   ? static_cast<int>(std::thread::hardware_concurrency())
                                   : 1);
    if (jobs <= 1 || items.size() <= 1) {
        for (size_t i = 0; i < items.size(); ++i)
            result.reports[i] = run_instance(*items[i].fam, *items[i].inst, ctx);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= items.size()) break;
                result.reports[i] = run_instance(*items[i].fam, *items[i].inst, ctx);
            }
        };
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    result.summary.total = static_cast<int>(result.reports.size());
    result.summary.families = families_matched;
    for (const auto& r : result.reports) {
        if (r.status == "pass")
            ++result.summary.passed;
        else if (r.status == "fail")
            ++result.summary.failed;
        else
            ++result.summary.skipped;
    }
    return result;
}

// ---------------------------------------------------------------------------
// serialization
// ---------------------------------------------------------------------------

std::string reports_to_json(const SuiteResult& result) {
    nlohmann::json root;
    root["reports"] = nlohmann::json::array();
    for (const auto& r : result.reports) {
        root["reports"].push_back({{"id", r.id},
                                   {"params", r.params},
                                   {"lhs", r.lhs},
                                   {"rhs", r.rhs},
                                   {"abs_err", r.abs_err},
                                   {"rel_err", r.rel_err},
                                   {"tol", r.tol},
                                   {"status", r.status},
                                   {"elapsed_ms", r.elapsed_ms},
                                   {"method_notes", r.method_notes}});
    }
    root["summary"] = {{"total", result.summary.total},
                       {"passed", result.summary.passed},
                       {"failed", result.summary.failed},
                       {"skipped", result.summary.skipped},
                       {"families", result.summary.families}};
    return root.dump(2);
}

SuiteResult reports_from_json(const std::string& json_text) {
    nlohmann::json root = nlohmann::json::parse(json_text);
    SuiteResult result;
    for (const auto& j : root.at("reports")) {
        IdentityReport r;
        r.id = j.at("id").get<std::string>();
        r.params = j.at("params").get<std::string>();
        r.lhs = j.at("lhs").get<std::string>();
        r.rhs = j.at("rhs").get<std::string>();
        r.abs_err = j.at("abs_err").get<double>();
        r.rel_err = j.at("rel_err").get<double>();
        r.tol = j.at("tol").get<double>();
        r.status = j.at("status").get<std::string>();
        r.elapsed_ms = j.at("elapsed_ms").get<double>();
        r.method_notes = j.at("method_notes").get<std::string>();
        result.reports.push_back(std::move(r));
    }
    const auto& s = root.at("summary");
    result.summary.total = s.at("total").get<int>();
    result.summary.passed = s.at("passed").get<int>();
    result.summary.failed = s.at("failed").get<int>();
    result.summary.skipped = s.at("skipped").get<int>();
    result.summary.families = s.at("families").get<int>();
    return result;
}

namespace {

std::string csv_quote(const std::string& s) {
    bool need = s.find_first_of(",\"\n") != std::string::npos;
    if (!need) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string reports_to_csv(const std::vector<IdentityReport>& reports) {
    std::ostringstream os;
    os << "id,params,lhs,rhs,abs_err,rel_err,tol,status,ms\r\n";
    os.precision(17);
    for (const auto& r : reports) {
        os << csv_quote(r.id) << ',' << csv_quote(r.params) << ',' << csv_quote(r.lhs) << ','
           << csv_quote(r.rhs) << ',' << r.abs_err << ',' << r.rel_err << ',' << r.tol << ','
           << r.status << ',' << r.elapsed_ms << "\r\n";
    }
    return os.str();
}

} // namespace hzeta
