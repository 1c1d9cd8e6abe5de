// Copyright Contributors to the hzeta Project
// SPDX-License-Identifier: Apache-2.0

#ifndef HZETA_CONTINUATION_HPP
#define HZETA_CONTINUATION_HPP

#include "hzeta/h_series.hpp"
#include "hzeta/quadrature.hpp"

#include <utility>

namespace hzeta {

/// Pole data for zeta_h: the double pole at s = 1 and the simple poles at
/// s = 1 - 2n.  Exact-formula coefficients and numerically extracted
/// Laurent coefficients are both kept for cross-validation.
template <class R>
struct PoleInfo {
    std::complex<double> location;
    int order = 1;
    R leading_exact{};   // coefficient of (s - s0)^{-order}
    R residue_exact{};   // coefficient of (s - s0)^{-1}
    R leading_numeric{};
    R residue_numeric{};
};

template <class R>
struct ZetaHResult {
    Cplx<R> value{};
    double error = 0.0;
    bool near_pole = false; // within 1e-6 of a pole: value is ill-conditioned
};

namespace detail {

/// w_n and c_n expansion coefficients of log^2(tanh x), as reals.
template <class R>
const std::array<R, 41>& w_coeff_real() {
    static const auto t = [] {
        std::array<R, 41> a{};
        for (int n = 1; n <= 40; ++n) a[static_cast<size_t>(n)] = w_coefficient(n).coef.to_real<R>();
        return a;
    }();
    return t;
}

template <class R>
const std::array<R, 41>& c_coeff_real() {
    static const auto t = [] {
        std::array<R, 41> a{};
        for (int n = 2; n <= 40; ++n)
            a[static_cast<size_t>(n)] = c_coefficient_series(n).coef.to_real<R>();
        return a;
    }();
    return t;
}

inline bool near_zeta_h_pole(double re, double im, std::complex<double>& where, int& order,
                             double radius) {
    if (std::abs(im) > radius) return false;
    // s = 1 (order 2) or s = 1 - 2n (order 1)
    if (std::abs(re - 1.0) <= radius) {
        where = {1.0, 0.0};
        order = 2;
        return true;
    }
    double n = std::round((1.0 - re) / 2.0);
    if (n >= 1.0 && std::abs(re - (1.0 - 2.0 * n)) <= radius) {
        where = {1.0 - 2.0 * n, 0.0};
        order = 1;
        return true;
    }
    return false;
}

} // namespace detail

/// Exact residue of zeta_h at s = 1 - 2n (n >= 1): -B_{2n}(1/2)/(4n).
inline Rational zeta_h_residue_exact(int n) {
    if (n < 1) throw domain_error("zeta_h_residue_exact: n must be >= 1");
    return -bernoulli_polynomial(2 * n).eval(Rational::of(1, 2)) / Rational(4L * n);
}

/// Mellin-split analytic continuation, valid on the whole plane off the
/// poles: zeta_h(s) = 4^{s-2} [ 2/((s-1)^2 Gamma(s))
///   - 4 sum_n w_n/((s+2n-1)^2 Gamma(s-1)) + 4 sum_n c_n/((s+2n-1) Gamma(s-1))
///   + K(s)/Gamma(s-1) ].
template <class R>
Cplx<R> zeta_h_mellin_split(Cplx<R> s, const PrecisionContext& ctx = {}) {

    const auto& w = detail::w_coeff_real<R>();
    const auto& c = detail::c_coeff_real<R>();

    Cplx<R> sw(R(0)), sc(R(0));
    for (int n = 1; n <= 40; ++n) {
        Cplx<R> den = s + R(2 * n - 1);
        sw += w[static_cast<size_t>(n)] / (den * den);
        if (n >= 2) sc += c[static_cast<size_t>(n)] / den;
    }
    Cplx<R> sm1 = s - R(1);
    Cplx<R> k = mellin_tail_K(s, ctx).value;
    Cplx<R> inner = R(4) * (sc - sw) + k;
    Cplx<R> val = rpow(R(4), s - R(2)) *
                  (R(2) * rgamma(s) / (sm1 * sm1) + rgamma(sm1) * inner);
    return val;
}

/// zeta_h on the whole plane: Dirichlet series for Re s > 1.05, the
/// Mellin-split continuation elsewhere.  Exact pole input throws
/// pole_error; within 1e-6 of a pole the result carries a warning flag.
template <class R>
ZetaHResult<R> zeta_h_ex(Cplx<R> s, const PrecisionContext& ctx = {}) {
    using RT = Real<R>;
    double re = RT::to_double(s.re), im = RT::to_double(s.im);

    std::complex<double> where;
    int order = 0;
    if (detail::near_zeta_h_pole(re, im, where, order, 0.0) &&
        re == where.real() && im == 0.0) {
        double residue = order == 2
                             ? RT::to_double(RT::ln2() + R(0.5) * RT::euler_gamma())
                             : zeta_h_residue_exact(static_cast<int>((1.0 - where.real()) / 2.0))
                                   .to_double();
        throw pole_error("zeta_h: pole at s = " + std::to_string(where.real()) +
                             " of order " + std::to_string(order),
                         where, order, residue);
    }

    ZetaHResult<R> out;
    if (detail::near_zeta_h_pole(re, im, where, order, 1e-6)) out.near_pole = true;

    if (re > 1.05) {
        out.value = zeta_h_series(s, ctx);
        out.error = 1e2 * RT::eps;
        return out;
    }
    out.value = zeta_h_mellin_split(s, ctx);
    // truncation of the w/c series at 40 terms: geometric majorant (4/pi^2)^41
    out.error = 1e2 * RT::eps + 5e-16;
    return out;
}

template <class R>
Cplx<R> zeta_h(Cplx<R> s, const PrecisionContext& ctx = {}) {
    return zeta_h_ex(s, ctx).value;
}

// ---------------------------------------------------------------------------
// The Hurwitz route: G(z) = int_0^{pi/2} zeta(z, 2x/pi) log tan x dx
// ---------------------------------------------------------------------------

namespace detail {

/// u_k = (1 - 2^{1-2k}) zeta(2k) - 1.  The subtraction costs one ulp of
/// absolute error, which is all the series using these needs; u_k itself
/// decays like -4^{-k}.
template <class R>
R power_series_u(int k) {
    constexpr int kMax = 68;
    static const auto table = [] {
        using std::pow;
        std::array<R, kMax> t{};
        for (int j = 1; j < kMax; ++j) {
            R p = pow(R(2), 1 - 2 * j);
            t[static_cast<size_t>(j)] = (R(1) - p) * zeta_int<R>(2 * j) - R(1);
        }
        return t;
    }();
    return table[static_cast<size_t>(k)];
}

/// Analytic closed form of int_0^{pi/2} (2x/pi)^{-z} log tan x dx:
///   -(pi/2)/(1-z)^2 + (pi/2) log(pi/2)/(1-z)
///   + (pi/2) sum_k (1 - 2^{1-2k}) zeta(2k) / (k (2k+1-z)),
/// with the slow 1/k part of the series resummed through the digamma.
template <class R>
Cplx<R> log_tan_power_part(Cplx<R> z, const PrecisionContext& ctx = {}) {
    using RT = Real<R>;
    using std::log;
    (void)ctx;
    Cplx<R> one_minus = Cplx<R>(R(1)) - z;
    Cplx<R> inv = Cplx<R>(R(1)) / one_minus;
    R half_pi = RT::half_pi();
    Cplx<R> total = -half_pi * (inv * inv) + half_pi * log(half_pi) * inv;

    // S1 = sum 1/(k(2k+1-z)) = (psi((3-z)/2) + gamma)/(1-z)
    Cplx<R> s1 = (digamma(Cplx<R>(R(1.5)) - R(0.5) * z) + RT::euler_gamma()) * inv;
    // S2 = sum u_k/(k(2k+1-z)), |u_k| ~ 4^{-k}
    Cplx<R> s2(R(0));
    const double cut = 1e-4 * RT::eps * RT::eps;
    for (int k = 1; k < 67; ++k) {
        Cplx<R> term = power_series_u<R>(k) / (R(k) * (Cplx<R>(R(2 * k + 1)) - z));
        s2 += term;
        if (RT::to_double(abs2(term)) < cut * (1.0 + RT::to_double(abs2(s2)))) break;
    }
    return total + half_pi * (s1 + s2);
}

} // namespace detail

/// G(z) by direct quadrature: valid Re z < 1.  The x^{-z} (power) part of
/// zeta(z, 2x/pi) is integrated in closed form; the smooth remainder
/// zeta(z, 1 + 2x/pi) goes through tanh-sinh against log tan.
template <class R>
Cplx<R> G_direct(Cplx<R> z, const PrecisionContext& ctx = {}) {
    using RT = Real<R>;
    if (RT::to_double(z.re) >= 1.0)
        throw domain_error("G_direct: requires Re z < 1");
    Cplx<R> power = detail::log_tan_power_part(z, ctx);
    R two_over_pi = R(2) / RT::pi();
    auto smooth = tanh_sinh<R, Cplx<R>>(
        [&](R x, R da, R db) {
            return hurwitz_zeta(z, R(1) + two_over_pi * x, ctx) *
                   log_tan_01<R>(x, da, db);
        },
        R(0), RT::half_pi(), ctx);
    return power + smooth.value;
}

/// G(z) by the continued representation (valid to the right, and by two
/// subtractions down to Re z > -2):
///   PowerPart(z) - (1/pi) [ 1/Gamma(z) (f0/z + I1 + int_1^inf y^{z-1} f)
///                           + f1 rg1(z) ],
/// f(y) = w(y) e^{-y}, f0 = f(0), f1 = f'(0) = -w(0), rg1 = 1/((z+1)Gamma(z)).
template <class R>
Cplx<R> G_continuation(Cplx<R> z, const PrecisionContext& ctx = {}) {
    using RT = Real<R>;
    if (RT::to_double(z.re) <= -2.0)
        throw domain_error("G_continuation: requires Re z > -2");

    R f0 = zeta_h_series(Cplx<R>(R(2)), ctx).re; // w(0)
    R f1 = -f0;

    auto f = [&](R y) {
        using std::exp;
        R q = y / RT::two_pi();
        return h_lorentz_sum(Cplx<R>(q * q), ctx).re * exp(-y);
    };

    // Taylor coefficients of f(y) = e^{-y} sum_j (-1)^j (y/2pi)^{2j} zeta_h(2j+2),
    // so the subtracted remainder near 0 can be evaluated without the
    // y^{z-1}-amplified cancellation of a direct f - f0 - f1 y.
    const int P = RT::working_digits > 20 ? 40 : 24;
    std::vector<R> fc(static_cast<size_t>(P) + 1);
    {
        std::vector<R> zh(static_cast<size_t>(P) / 2 + 1);
        for (size_t j = 0; j < zh.size(); ++j)
            zh[j] = zeta_h_series(Cplx<R>(R(static_cast<double>(2 * j + 2))), ctx).re;
        using std::pow;
        R inv2pi = R(1) / RT::two_pi();
        for (int p = 0; p <= P; ++p) {
            R c(0);
            for (int j = 0; 2 * j <= p; ++j) {
                int m = p - 2 * j;
                R mf(1);
                for (int i = 2; i <= m; ++i) mf = mf * R(i);
                R term = zh[static_cast<size_t>(j)] * pow(inv2pi, 2 * j) / mf;
                if ((p - j) % 2 != 0) term = -term; // (-1)^{j+m}, m = p-2j
                c = c + term;
            }
            fc[static_cast<size_t>(p)] = c;
        }
    }
    auto remainder2 = [&](R y) { // (f(y) - f0 - f1 y)/y^2, stable at y -> 0
        if (RT::to_double(y) > 0.5) return (f(y) - f0 - f1 * y) / (y * y);
        R acc(0);
        R yp(1);
        for (int p = 2; p <= P; ++p) {
            acc = acc + fc[static_cast<size_t>(p)] * yp;
            yp = yp * y;
        }
        return acc;
    };

    auto inner = tanh_sinh<R, Cplx<R>>(
        [&](R, R da, R) {
            using std::log;
            return Cplx<R>(remainder2(da)) * exp((z + R(1)) * log(da));
        },
        R(0), R(1), ctx);

    double cutoff = RT::working_digits > 20 ? 80.0 : 45.0;
    auto tail = tanh_sinh<R, Cplx<R>>(
        [&](R y, R, R) {
            using std::log;
            return Cplx<R>(f(y)) * exp((z - R(1)) * log(y));
        },
        R(1), RT::of(cutoff), ctx);

    // rg1 = 1/((z+1) Gamma(z)): entire; near z = -1 use the circle mean
    Cplx<R> rg1;
    if (std::abs(RT::to_double(z.re) + 1.0) < 1e-6 && std::abs(RT::to_double(z.im)) < 1e-6) {
        Cplx<R> acc(R(0));
        const int M = 8;
        for (int j = 0; j < M; ++j) {
            double th = 2.0 * Real<double>::pi() * j / M;
            Cplx<R> zz = z + Cplx<R>(RT::of(1e-3 * std::cos(th)), RT::of(1e-3 * std::sin(th)));
            acc += rgamma(zz) / (zz + R(1));
        }
        rg1 = acc / R(M);
    } else {
        rg1 = rgamma(z) / (z + R(1));
    }

    Cplx<R> bracket = rgamma(z) * (Cplx<R>(f0) / z + inner.value + tail.value) +
                      Cplx<R>(f1) * rg1;
    return detail::log_tan_power_part(z, ctx) - bracket / RT::pi();
}

/// G(z) with pole checks and region dispatch.
template <class R>
Cplx<R> G_fun(Cplx<R> z, const PrecisionContext& ctx = {}) {
    using RT = Real<R>;
    double re = RT::to_double(z.re), im = RT::to_double(z.im);
    if (im == 0.0 && re >= 1.0 && std::abs(re - std::round(re)) == 0.0 &&
        static_cast<long>(std::round(re)) % 2 == 1)
        throw pole_error("G: pole at odd positive integer z", {re, 0.0},
                         re == 1.0 ? 2 : 1);
    if (re < 0.95) return G_direct(z, ctx);
    return G_continuation(z, ctx);
}

/// The Hurwitz-route evaluation of zeta_h for Re s > 1, away from odd
/// integers: (2pi)^{s-1} / (2 Gamma(s-1) cos(pi s/2)) G(2-s).
template <class R>
Cplx<R> zeta_h_via_hurwitz(Cplx<R> s, const PrecisionContext& ctx = {}) {
    using RT = Real<R>;
    double re = RT::to_double(s.re), im = RT::to_double(s.im);
    if (re <= 1.0) throw domain_error("zeta_h_via_hurwitz: requires Re s > 1");
    if (im == 0.0) {
        double odd = 2.0 * std::round((re - 1.0) / 2.0) + 1.0;
        if (std::abs(re - odd) <= 1e-3)
            throw domain_error(
                "zeta_h_via_hurwitz: cos(pi s/2) vanishes near odd integers; use zeta_h");
    }
    Cplx<R> g = G_direct(Cplx<R>(R(2)) - s, ctx);
    Cplx<R> pref = exp((s - R(1)) * log(Cplx<R>(RT::two_pi()))) *
                   (R(0.5) * rgamma(s - R(1))) / cos(s * RT::half_pi());
    return pref * g;
}

// ---------------------------------------------------------------------------
// Poles, residues, trivial zeros
// ---------------------------------------------------------------------------

/// Laurent data at pole index k (k = 0: s = 1; k = n >= 1: s = 1 - 2n).
/// The numeric side integrates zeta_h over a small circle around the pole.
template <class R>
PoleInfo<R> pole_info(int k, const PrecisionContext& ctx = {}) {
    using RT = Real<R>;
    if (k < 0) throw domain_error("pole_info: k must be >= 0");
    PoleInfo<R> info;
    if (k == 0) {
        info.location = {1.0, 0.0};
        info.order = 2;
        info.leading_exact = R(0.5);
        info.residue_exact = RT::ln2() + R(0.5) * RT::euler_gamma();
    } else {
        info.location = {1.0 - 2.0 * k, 0.0};
        info.order = 1;
        Rational res = zeta_h_residue_exact(k);
        info.leading_exact = res.to_real<R>();
        info.residue_exact = info.leading_exact;
    }

    // trapezoidal contour coefficients c_{-m} = rho^m/M sum_j f(s0 + rho e^{i th_j}) e^{i m th_j}
    const int M = 32;
    const double rho = 0.25;
    Cplx<R> c1(R(0)), c2(R(0));
    for (int j = 0; j < M; ++j) {
        double th = 2.0 * Real<double>::pi() * (j + 0.5) / M;
        Cplx<R> e(RT::of(std::cos(th)), RT::of(std::sin(th)));
        Cplx<R> sj = Cplx<R>(RT::of(info.location.real())) + RT::of(rho) * e;
        Cplx<R> fj = zeta_h_ex(sj, ctx).value;
        c1 += fj * e;
        c2 += fj * e * e;
    }
    info.residue_numeric = (c1 * RT::of(rho / M)).re;
    info.leading_numeric =
        info.order == 2 ? (c2 * RT::of(rho * rho / M)).re : info.residue_numeric;
    return info;
}

// ---------------------------------------------------------------------------
// alpha/beta sequences and the tangent power series
// ---------------------------------------------------------------------------

/// alpha_n = zeta(2n+1)/pi^{2n+1}.
template <class R>
R alpha_coeff(int n, const PrecisionContext& = {}) {
    using std::pow;
    if (n < 1) throw domain_error("alpha: n must be >= 1");
    return detail::zeta_int<R>(2 * n + 1) / pow(Real<R>::pi(), 2 * n + 1);
}

/// beta_n = zeta_h(2n)/pi^{2n+1}.
template <class R>
R beta_coeff(int n, const PrecisionContext& ctx = {}) {
    using std::pow;
    if (n < 1) throw domain_error("beta: n must be >= 1");
    return zeta_h_series(Cplx<R>(R(2 * n)), ctx).re / pow(Real<R>::pi(), 2 * n + 1);
}

/// Residual of the recursion obtained by eliminating the shared k = n term
/// between the two corollary recursions:
/// sum_{k=1}^{n-1} [ 4 (2^{2(n-k)+2} - 1) r_{n-k+1} beta_k
///                   - (2^{2k+1} - 1) r_{n-k} alpha_k ] = 0.
template <class R>
R recursion_residual(int n, const PrecisionContext& ctx = {}) {
    if (n < 2) throw domain_error("recursion_residual: n must be >= 2");
    R sum(0);
    for (int k = 1; k <= n - 1; ++k) {
        R rb = zeta_even_rational(n - k + 1).to_real<R>();
        R ra = zeta_even_rational(n - k).to_real<R>();
        R tb = R(4) * (Rational(2).pow(2 * (n - k) + 2) - Rational(1)).to_real<R>() * rb *
               beta_coeff<R>(k, ctx);
        R ta = (Rational(2).pow(2 * k + 1) - Rational(1)).to_real<R>() * ra *
               alpha_coeff<R>(k, ctx);
        sum = sum + tb - ta;
    }
    return sum;
}

/// tan x against its alpha/beta power-series quotient S(x)/C(x).
template <class R>
std::pair<R, R> tan_series_check(R x, const PrecisionContext& ctx = {}) {
    using RT = Real<R>;
    using std::tan;
    double xd = std::abs(RT::to_double(x));
    if (xd > 1.2)
        throw accuracy_error("tan_series_check: |x| beyond practical radius 1.2",
                             {xd, 0.0}, 1.0);
    R x2 = x * x;
    R xs = x, xc(1);
    R S(0), C(0);
    for (int n = 1; n <= 70; ++n) {
        R a = (Rational(2).pow(2 * n + 1) - Rational(1)).to_real<R>() * alpha_coeff<R>(n, ctx);
        R term_s = R(0.25) * a * xs;
        R term_c = beta_coeff<R>(n, ctx) * xc;
        S = S + term_s;
        C = C + term_c;
        // the S terms decay like (2x/pi)^{2n}, the C terms like (x/pi)^{2n}
        if (n > 2 &&
            std::abs(RT::to_double(term_c)) < 0.01 * RT::eps * std::abs(RT::to_double(C)) &&
            std::abs(RT::to_double(term_s)) < 0.01 * RT::eps * std::abs(RT::to_double(S)))
            break;
        xs = xs * x2;
        xc = xc * x2;
    }
    return {tan(x), S / C};
}

// ---------------------------------------------------------------------------
// Kernel identities (exp, digamma, polylog forms)
// ---------------------------------------------------------------------------

namespace detail {

template <class R>
Cplx<R> cplx_tanh(Cplx<R> w) {
    Cplx<R> e2 = exp(R(2) * w);
    return (e2 - R(1)) / (e2 + R(1));
}

} // namespace detail

/// Both sides of int_0^{pi/2} e^{2xz} log tan x dx
///   = (e^{pi z} - 1)/pi sum_n h_n/(n^2 + (z/2)^2).
template <class R>
std::pair<Cplx<R>, Cplx<R>> exp_kernel_identity(Cplx<R> z, const PrecisionContext& ctx = {}) {
    using RT = Real<R>;
    if (RT::to_double(z.re) == 0.0 && RT::to_double(z.im) == 0.0) {
        auto lhs0 = log_tangent_integral<R, R>([](R) { return R(1); }, ctx);
        return {Cplx<R>(lhs0.value), Cplx<R>(R(0))};
    }
    double imz = RT::to_double(z.im);
    if (RT::to_double(z.re) == 0.0 &&
        std::abs(imz / 2.0 - std::round(imz / 2.0)) < 1e-4)
        throw domain_error("exp_kernel_identity: z within 1e-4 of 2ik; use exp_kernel_limit");

    auto lhs = tanh_sinh<R, Cplx<R>>(
        [&](R x, R da, R db) {
            return exp(z * (R(2) * x)) * log_tan_01<R>(x, da, db);
        },
        R(0), RT::half_pi(), ctx);
    Cplx<R> q2 = R(0.25) * (z * z);
    Cplx<R> rhs = (exp(z * RT::pi()) - R(1)) / RT::pi() * h_lorentz_sum(q2, ctx);
    return {lhs.value, rhs};
}

/// Limit form at z = 2ik: int e^{4ikx} log tan = -i h_{|k|}/k.
template <class R>
std::pair<Cplx<R>, Cplx<R>> exp_kernel_limit(int k, const PrecisionContext& ctx = {}) {
    using RT = Real<R>;
    if (k == 0) throw domain_error("exp_kernel_limit: k must be nonzero");
    auto lhs = tanh_sinh<R, Cplx<R>>(
        [&](R x, R da, R db) {
            R s, c;
            R arg = R(4 * k) * x;
            if constexpr (std::is_same_v<R, double>) {
                s = std::sin(arg);
                c = std::cos(arg);
            } else {
                sincos(arg, s, c);
            }
            return Cplx<R>(c, s) * log_tan_01<R>(x, da, db);
        },
        R(0), RT::half_pi(), ctx);
    R hk = HarmonicCache::h_real<R>(std::abs(k));
    return {lhs.value, Cplx<R>(R(0), -hk / R(k))};
}

/// Both sides of the digamma form:
/// pi/(2z) (psi((1+iz)/2) - psi(1/2) - i pi/2 tanh(pi z/2))
///   = tanh(pi z/2) sum_n h_n/(n^2 + (z/2)^2).
template <class R>
std::pair<Cplx<R>, Cplx<R>> digamma_identity_check(Cplx<R> z, const PrecisionContext& ctx = {}) {
    using RT = Real<R>;
    if (RT::to_double(abs2(z)) == 0.0)
        throw domain_error("digamma_identity_check: z = 0 is singular");
    Cplx<R> iz(-z.im, z.re); // i z
    Cplx<R> th = detail::cplx_tanh(RT::half_pi() * z);
    Cplx<R> psi_term = digamma(R(0.5) * (Cplx<R>(R(1)) + iz)) -
                       Cplx<R>(-RT::euler_gamma() - R(2) * RT::ln2()) -
                       Cplx<R>(R(0), RT::half_pi()) * th;
    Cplx<R> lhs = RT::half_pi() * psi_term / z;
    Cplx<R> rhs = th * h_lorentz_sum(R(0.25) * (z * z), ctx);
    return {lhs, rhs};
}

/// Polylog route to the odd h-zeta values:
/// int Li_{2n}(e^{4ix}) log tan x dx has imaginary part -zeta_h(2n+1) and
/// vanishing real part.  Returns (integral, -zeta_h(2n+1)).
template <class R>
std::pair<Cplx<R>, R> zhodd_polylog_check(int n, const PrecisionContext& ctx = {}) {
    using RT = Real<R>;
    if (n < 1) throw domain_error("zhodd_polylog_check: n must be >= 1");
    auto lhs = tanh_sinh<R, Cplx<R>>(
        [&](R x, R da, R db) {
            return polylog_unit_circle(2 * n, R(4) * x, ctx) * log_tan_01<R>(x, da, db);
        },
        R(0), RT::half_pi(), ctx);
    R rhs = -zeta_h_series(Cplx<R>(R(2 * n + 1)), ctx).re;
    return {lhs.value, rhs};
}

/// Hurwitz connection sum_{n>=1} zeta(s, n)/(2n - 1) (equals zeta_h(s) for
/// Re s > 1), with zeta(s,n) = zeta(s) - sum_{j<n} j^{-s} in the direct
/// block and an asymptotic tail combining the 1/(2n-1) geometric expansion
/// with the Euler-Maclaurin expansion of zeta(s,n).
template <class R>
Cplx<R> zeta_h_hurwitz_connection(Cplx<R> s, const PrecisionContext& ctx = {}) {
    using RT = Real<R>;
    if (RT::to_double(s.re) <= 1.05)
        throw domain_error("zeta_h_hurwitz_connection: requires Re s > 1.05");
    long N = RT::working_digits > 20 ? 128 : 64;
    Cplx<R> zs = riemann_zeta(s, ctx);
    Cplx<R> partial(R(0)); // sum_{j <= n-1} j^{-s}
    Cplx<R> sum(R(0));
    for (long n = 1; n <= N; ++n) {
        if (n > 1) partial += rpow(R(static_cast<double>(n - 1)), -s);
        sum += (zs - partial) / R(static_cast<double>(2 * n - 1));
    }

    // tail: zeta(s,n) ~ n^{1-s}/(s-1) + n^{-s}/2 + sum_k B_{2k}/(2k)! (s)_{2k-1} n^{-s-2k+1}
    // and 1/(2n-1) = sum_{j>=0} 2^{-(j+1)} n^{-(j+1)}
    const int J = RT::working_digits > 20 ? 24 : 14;
    std::vector<Cplx<R>> geo(static_cast<size_t>(J) + 1);
    for (int j = 0; j <= J; ++j) geo[static_cast<size_t>(j)] = Cplx<R>(RT::of(std::ldexp(1.0, -(j + 1))));

    Cplx<R> tail(R(0));
    auto add_power = [&](Cplx<R> coef, Cplx<R> extra_power) {
        // coef * sum_{n>N} n^{-(s + extra_power)} folded against the geometric factors
        for (int j = 0; j <= J; ++j)
            tail += coef * geo[static_cast<size_t>(j)] *
                    detail::zeta_log_tail(s + extra_power + R(j + 1), 0, N);
    };
    add_power(Cplx<R>(R(1)) / (s - R(1)), Cplx<R>(R(-1)));
    add_power(Cplx<R>(R(0.5)), Cplx<R>(R(0)));
    Cplx<R> poch = s;
    R fact(2);
    for (int k = 1; k <= 6; ++k) {
        add_power(detail::bernoulli_real<R>(2 * k) / fact * poch, Cplx<R>(R(2 * k - 1)));
        poch *= (s + R(2 * k - 1)) * (s + R(2 * k));
        fact = fact * R(2 * k + 1) * R(2 * k + 2);
    }
    return sum + tail;
}

} // namespace hzeta

#endif // HZETA_CONTINUATION_HPP
