// Copyright Contributors to the hzeta Project
// SPDX-License-Identifier: Apache-2.0

#ifndef HZETA_SPECIAL_HPP
#define HZETA_SPECIAL_HPP

#include "hzeta/cplx.hpp"
#include "hzeta/exact.hpp"
#include "hzeta/precision.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <vector>

namespace hzeta {

namespace detail {

inline constexpr int kBernoulliTableSize = 130;

/// B_0..B_129 converted once to the working real type.
template <class R>
const std::array<R, kBernoulliTableSize>& bernoulli_real_table() {
    static const auto table = [] {
        std::array<R, kBernoulliTableSize> t{};
        for (int i = 0; i < kBernoulliTableSize; ++i)
            t[static_cast<size_t>(i)] = bernoulli_number(i).to_real<R>();
        return t;
    }();
    return table;
}

template <class R>
R bernoulli_real(int n) {
    return bernoulli_real_table<R>()[static_cast<size_t>(n)];
}

/// zeta(0) = -1/2, zeta(-n) = -B_{n+1}/(n+1).
template <class R>
R zeta_nonpositive_int(int n) {
    static const auto table = [] {
        std::array<R, kBernoulliTableSize - 2> t{};
        t[0] = R(-0.5);
        for (int n2 = 1; n2 < kBernoulliTableSize - 2; ++n2)
            t[static_cast<size_t>(n2)] =
                (-bernoulli_number(n2 + 1) / Rational(static_cast<long>(n2) + 1)).to_real<R>();
        return t;
    }();
    return table[static_cast<size_t>(n)];
}

/// Real coefficients of B_m(x), cached per working type.
template <class R>
const std::vector<R>& bernoulli_poly_coeffs(int m) {
    constexpr int kMax = 32;
    static std::array<std::vector<R>, kMax> cache;
    static std::array<std::once_flag, kMax> flags;
    std::call_once(flags[static_cast<size_t>(m)], [m] {
        cache[static_cast<size_t>(m)] = bernoulli_polynomial(m).real_coeffs<R>();
    });
    return cache[static_cast<size_t>(m)];
}

inline bool near_nonpositive_integer(double re, double im, long& which, double tol = 0.0) {
    if (im != 0.0) return false;
    double r = std::round(re);
    if (r > 0.5) return false;
    if (tol == 0.0 ? re == r : std::abs(re - r) <= tol) {
        which = static_cast<long>(r);
        return true;
    }
    return false;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Gamma and digamma
// ---------------------------------------------------------------------------

/// Gamma function; reflection formula for Re s < 1/2, argument shifted above
/// |s| = 20 before the Stirling series (truncated at its smallest term).
template <class R>
Cplx<R> gamma(Cplx<R> s) {
    using RT = Real<R>;
    using std::log;

    long pole_index = 0;
    if (detail::near_nonpositive_integer(RT::to_double(s.re), RT::to_double(s.im), pole_index))
        throw pole_error("gamma: pole at nonpositive integer " + std::to_string(pole_index),
                         {static_cast<double>(pole_index), 0.0}, 1);

    if (RT::to_double(s.re) < 0.5) {
        Cplx<R> pis = s * RT::pi();
        return Cplx<R>(RT::pi()) / (sin(pis) * gamma(Cplx<R>(R(1)) - s));
    }

    Cplx<R> z = s;
    Cplx<R> shift_product(R(1));
    while (RT::to_double(abs2(z)) < 400.0) {
        shift_product *= z;
        z += R(1);
    }

    // log Gamma(z) = (z - 1/2) log z - z + log(2 pi)/2 + sum_j B_{2j}/(2j(2j-1) z^{2j-1})
    Cplx<R> lg = (z - R(0.5)) * log(z) - z + R(0.5) * log(RT::two_pi());
    Cplx<R> z2inv = Cplx<R>(R(1)) / (z * z);
    Cplx<R> zpow = Cplx<R>(R(1)) / z;
    double prev = 1e300;
    for (int j = 1; j < 60; ++j) {
        Cplx<R> term =
            detail::bernoulli_real<R>(2 * j) / R(static_cast<double>(2 * j) * (2 * j - 1)) * zpow;
        double mag = RT::to_double(abs2(term));
        if (mag >= prev) break;
        lg += term;
        prev = mag;
        double scale = 1.0 + RT::to_double(abs2(lg));
        if (mag < 0.0001 * RT::eps * RT::eps * scale) break;
        zpow *= z2inv;
    }
    return exp(lg) / shift_product;
}

/// 1/Gamma(s): entire, vanishing at nonpositive integers.
template <class R>
Cplx<R> rgamma(Cplx<R> s) {
    using RT = Real<R>;
    if (RT::to_double(s.re) < 0.5)
        return sin(s * RT::pi()) * gamma(Cplx<R>(R(1)) - s) / RT::pi();
    return Cplx<R>(R(1)) / gamma(s);
}

/// Digamma via upward recurrence then the asymptotic series.
template <class R>
Cplx<R> digamma(Cplx<R> s) {
    using RT = Real<R>;
    using std::log;

    long pole_index = 0;
    if (detail::near_nonpositive_integer(RT::to_double(s.re), RT::to_double(s.im), pole_index))
        throw pole_error("digamma: pole at nonpositive integer " + std::to_string(pole_index),
                         {static_cast<double>(pole_index), 0.0}, 1);

    if (RT::to_double(s.re) < 0.5) {
        Cplx<R> pis = s * RT::pi();
        return digamma(Cplx<R>(R(1)) - s) - RT::pi() * (cos(pis) / sin(pis));
    }

    Cplx<R> z = s;
    Cplx<R> acc(R(0));
    while (RT::to_double(abs2(z)) < 400.0) {
        acc += Cplx<R>(R(1)) / z;
        z += R(1);
    }

    Cplx<R> z2inv = Cplx<R>(R(1)) / (z * z);
    Cplx<R> res = log(z) - R(0.5) * (Cplx<R>(R(1)) / z);
    Cplx<R> zpow = z2inv;
    double prev = 1e300;
    for (int j = 1; j < 60; ++j) {
        Cplx<R> term = detail::bernoulli_real<R>(2 * j) / R(static_cast<double>(2 * j)) * zpow;
        double mag = RT::to_double(abs2(term));
        if (mag >= prev) break;
        res -= term;
        prev = mag;
        double scale = 1.0 + RT::to_double(abs2(res));
        if (mag < 0.0001 * RT::eps * RT::eps * scale) break;
        zpow *= z2inv;
    }
    return res - acc;
}

// ---------------------------------------------------------------------------
// Riemann and Hurwitz zeta (Euler-Maclaurin)
// ---------------------------------------------------------------------------

namespace detail {

template <class R>
Cplx<R> hurwitz_em(Cplx<R> s, R x, const PrecisionContext& ctx) {
    using RT = Real<R>;
    using std::log;

    double re = RT::to_double(s.re);
    double im = std::abs(RT::to_double(s.im));
    int N;
    if (re >= -0.5) {
        int base_n = RT::working_digits > 20 ? 80 : 50;
        N = std::max(base_n, static_cast<int>(im) + 10);
    } else {
        // Negative Re s: the direct block cancels catastrophically against
        // the integral term, so keep N as small as series convergence allows.
        N = std::max({18, static_cast<int>((-re + 95.0) / 6.0), static_cast<int>(im) + 8});
    }
    if (static_cast<long>(N) > ctx.max_terms) N = static_cast<int>(ctx.max_terms);

    Cplx<R> sum(R(0));
    for (int n = 0; n < N; ++n) sum += rpow(x + R(n), -s);

    R nx = x + R(N);
    Cplx<R> nxs = rpow(nx, -s);
    sum += nxs * nx / (s - R(1)); // (N+x)^{1-s}/(s-1)
    sum += R(0.5) * nxs;

    // sum_k B_{2k}/(2k)! s(s+1)...(s+2k-2) (N+x)^{-s-2k+1}
    Cplx<R> poch = s;
    Cplx<R> power = nxs / nx;
    R fact(2);
    R nx2 = nx * nx;
    double prev = 1e300;
    double sum_scale = RT::to_double(abs2(sum)) + 1e-300;
    for (int k = 1; k < 48; ++k) {
        Cplx<R> term = detail::bernoulli_real<R>(2 * k) / fact * poch * power;
        // power = (N+x)^{-s-2k+1}
        double mag = RT::to_double(abs2(term));
        if (mag >= prev) break;
        sum += term;
        prev = mag;
        if (mag < 1e-6 * RT::eps * RT::eps * sum_scale) break;
        poch *= (s + R(2 * k - 1)) * (s + R(2 * k));
        fact = fact * R(2 * k + 1) * R(2 * k + 2);
        power = power / nx2;
    }
    return sum;
}

} // namespace detail

/// Riemann zeta with the zeta(0) = -1/2 convention.  Nonpositive integers
/// are exact Bernoulli rationals; Re s < -1/2 reflects through the
/// functional equation (fixed-precision Euler-Maclaurin cancels badly on
/// the left half-plane); the rest is Euler-Maclaurin.
template <class R>
Cplx<R> riemann_zeta(Cplx<R> s, const PrecisionContext& ctx = {}) {
    using RT = Real<R>;
    double re = RT::to_double(s.re), im = RT::to_double(s.im);
    if (re == 1.0 && im == 0.0)
        throw pole_error("riemann_zeta: pole at s = 1", {1.0, 0.0}, 1, 1.0);

    long n = 0;
    if (detail::near_nonpositive_integer(re, im, n)) {
        if (n < 0 && (-n) % 2 == 0) return Cplx<R>(R(0)); // trivial zeros
        return Cplx<R>(detail::zeta_nonpositive_int<R>(static_cast<int>(-n)));
    }
    if (re < -0.5) {
        Cplx<R> one_minus = Cplx<R>(R(1)) - s;
        return rpow(R(2), s) * rpow(RT::pi(), s - R(1)) * sin(s * RT::half_pi()) *
               gamma(one_minus) * riemann_zeta(one_minus, ctx);
    }
    return detail::hurwitz_em(s, R(1), ctx);
}

namespace detail {

/// Li_w(e^{i theta}) for complex order w with Re w > 1, w not a positive
/// integer <= theta-expansion limit; uses the expansion around mu = i theta
/// valid for |theta| <= pi (caller reduces).
template <class R>
Cplx<R> polylog_mu_expansion(Cplx<R> w, R theta, const PrecisionContext& ctx) {
    using RT = Real<R>;
    using std::abs;
    using std::log;
    Cplx<R> mu(R(0), theta);
    // Gamma(1-w) (-mu)^{w-1}
    Cplx<R> logmmu(log(abs(theta)), RT::to_double(theta) > 0.0 ? -RT::half_pi() : RT::half_pi());
    Cplx<R> sum = gamma(Cplx<R>(R(1)) - w) * exp((w - R(1)) * logmmu);
    Cplx<R> mupow(R(1));
    const double cut = 1e-8 * RT::eps * RT::eps;
    int small_run = 0; // consecutive small terms (zeta hits exact zeros)
    for (int k = 0; k < 160; ++k) {
        Cplx<R> term = riemann_zeta(w - R(k), ctx) * mupow;
        sum += term;
        bool small = RT::to_double(abs2(term)) < cut * (1.0 + RT::to_double(abs2(sum)));
        small_run = (k > 3 && small) ? small_run + 1 : 0;
        if (small_run >= 2) break;
        mupow = mupow * mu / R(k + 1);
    }
    return sum;
}

} // namespace detail

/// Hurwitz zeta for x in (0, 2]; whole s-plane except the s = 1 pole.
/// Three regimes: exact Bernoulli polynomials at nonpositive integer s,
/// Euler-Maclaurin for Re s > -3.5, and the Fourier (Hurwitz) expansion
/// evaluated through the polylogarithm series on the far left.
template <class R>
Cplx<R> hurwitz_zeta(Cplx<R> s, R x, const PrecisionContext& ctx = {}) {
    using RT = Real<R>;
    using std::log;
    double xd = RT::to_double(x);
    if (xd <= 0.0) throw domain_error("hurwitz_zeta: x must be > 0");
    double re = RT::to_double(s.re), im = RT::to_double(s.im);
    if (re == 1.0 && im == 0.0)
        throw pole_error("hurwitz_zeta: pole at s = 1", {1.0, 0.0}, 1, 1.0);

    long n = 0;
    if (detail::near_nonpositive_integer(re, im, n) && -n + 1 < 31) {
        // zeta(-n, x) = -B_{n+1}(x)/(n+1), exact
        const auto& coeffs = detail::bernoulli_poly_coeffs<R>(static_cast<int>(-n) + 1);
        R acc(0);
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
        return Cplx<R>(-acc / R(static_cast<double>(-n) + 1.0));
    }

    if (re >= -3.5 || xd > 1.0) {
        if (re < -3.5) {
            // shift into (0,1] first, then recurse into the Fourier branch
            return hurwitz_zeta(s, x - R(1), ctx) - rpow(x - R(1), -s);
        }
        return detail::hurwitz_em(s, x, ctx);
    }

    // Fourier expansion (valid Re s < 0, 0 < x <= 1):
    // zeta(s,x) = 2 Gamma(1-s)/(2pi)^{1-s} [ sin(pi s/2) C + cos(pi s/2) S ],
    // C + iS and C - iS being Li_{1-s}(e^{+-2pi i x}).
    Cplx<R> w = Cplx<R>(R(1)) - s;
    R theta = x * RT::two_pi();
    if (RT::to_double(x) > 0.5) theta = theta - RT::two_pi();
    Cplx<R> lp = detail::polylog_mu_expansion(w, theta, ctx);
    Cplx<R> lm = detail::polylog_mu_expansion(w, -theta, ctx);
    Cplx<R> cc = R(0.5) * (lp + lm);
    Cplx<R> ss = Cplx<R>(R(0), R(-0.5)) * (lp - lm);
    Cplx<R> pref = R(2) * gamma(w) * exp((s - R(1)) * log(RT::two_pi()));
    Cplx<R> half_s = s * RT::half_pi();
    return pref * (sin(half_s) * cc + cos(half_s) * ss);
}

// ---------------------------------------------------------------------------
// zeta at integer arguments (cached) and the unit-circle polylogarithm
// ---------------------------------------------------------------------------

namespace detail {

inline constexpr int kZetaIntCacheSize = 140;

template <class R>
R zeta_int(int m) {
    static const auto table = [] {
        using std::pow;
        std::array<R, kZetaIntCacheSize> t{};
        PrecisionContext ctx;
        for (int j = 2; j < kZetaIntCacheSize; ++j) {
            if (j % 2 == 0)
                t[static_cast<size_t>(j)] =
                    zeta_even_rational(j / 2).to_real<R>() * pow(Real<R>::pi(), j);
            else
                t[static_cast<size_t>(j)] = riemann_zeta(Cplx<R>(R(j)), ctx).re;
        }
        return t;
    }();
    return table[static_cast<size_t>(m)];
}

} // namespace detail

/// Li_m(e^{i theta}) for integer m >= 2.  The component with a Bernoulli
/// closed form (real part for even m, imaginary part for odd m, from the
/// Fourier expansions of B_m) is evaluated exactly; the conjugate component
/// comes from the expansion of Li_m(e^mu) around mu = i theta = 0, which
/// converges like (|theta|/2pi)^k after reduction to (-pi, pi].
template <class R>
Cplx<R> polylog_unit_circle(int m, R theta, const PrecisionContext& ctx = {}) {
    using RT = Real<R>;
    using std::abs;
    using std::floor;
    using std::log;
    using std::pow;
    (void)ctx;
    if (m < 2) throw domain_error("polylog_unit_circle: m must be >= 2");

    R x = theta / RT::two_pi();
    x = x - floor(x); // in [0, 1)
    R th = x * RT::two_pi();
    if (RT::to_double(x) > 0.5) th = th - RT::two_pi(); // recentre to (-pi, pi]

    if (RT::to_double(th) == 0.0) return Cplx<R>(detail::zeta_int<R>(m));

    // Bernoulli component:
    //   sum cos(2 pi n x)/n^{2q}   = (-1)^{q+1} (2 pi)^{2q}   B_{2q}(x)  /(2 (2q)!)
    //   sum sin(2 pi n x)/n^{2q-1} = (-1)^q     (2 pi)^{2q-1} B_{2q-1}(x)/(2 (2q-1)!)
    const auto& coeffs = detail::bernoulli_poly_coeffs<R>(m);
    R bval(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) bval = bval * x + *it;
    R fact(1);
    for (int j = 2; j <= m; ++j) fact = fact * R(j);
    R closed = pow(RT::two_pi(), m) / (R(2) * fact) * bval;
    if (m % 2 == 0) {
        if ((m / 2) % 2 == 0) closed = -closed; // (-1)^{q+1}, q = m/2
    } else {
        if (((m + 1) / 2) % 2 != 0) closed = -closed; // (-1)^q, q = (m+1)/2
    }

    // series component: Li_m(e^mu) = sum_{k != m-1} zeta(m-k) mu^k / k!
    //                              + mu^{m-1}/(m-1)! (H_{m-1} - log(-mu))
    Cplx<R> mu(R(0), th);
    Cplx<R> sum(R(0));
    Cplx<R> mupow(R(1)); // mu^k / k!
    const double cut = 1e-8 * RT::eps * RT::eps;
    int small_run = 0; // zeta at negative even integers contributes exact zeros
    for (int k = 0; k < detail::kZetaIntCacheSize - 4; ++k) {
        if (k != m - 1) {
            R zval = (m - k >= 2) ? detail::zeta_int<R>(m - k)
                                  : detail::zeta_nonpositive_int<R>(k - m);
            Cplx<R> term = zval * mupow;
            sum += term;
            bool small = RT::to_double(abs2(term)) < cut * (1.0 + RT::to_double(abs2(sum)));
            small_run = (k > m && small) ? small_run + 1 : 0;
            if (small_run >= 2) break;
        } else {
            R h(0);
            for (int j = 1; j <= m - 1; ++j) h = h + R(1) / R(j);
            Cplx<R> logmmu(log(abs(th)),
                           RT::to_double(th) > 0.0 ? -RT::half_pi() : RT::half_pi());
            sum += mupow * (Cplx<R>(h) - logmmu);
        }
        mupow = mupow * mu / R(k + 1);
    }

    if (m % 2 == 0) return Cplx<R>(closed, sum.im);
    return Cplx<R>(sum.re, closed);
}

/// Catalan's constant at working precision.
template <class R>
R catalan_constant(const PrecisionContext& = {}) {
    return Real<R>::catalan();
}

/// Euler-Mascheroni constant at working precision.
template <class R>
R euler_gamma(const PrecisionContext& = {}) {
    return Real<R>::euler_gamma();
}

} // namespace hzeta

#endif // HZETA_SPECIAL_HPP
