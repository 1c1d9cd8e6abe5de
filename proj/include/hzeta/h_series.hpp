// Copyright Contributors to the hzeta Project
// SPDX-License-Identifier: Apache-2.0

#ifndef HZETA_H_SERIES_HPP
#define HZETA_H_SERIES_HPP

#include "hzeta/special.hpp"

#include <atomic>
#include <deque>
#include <mutex>

namespace hzeta {

/// Exact and floating caches of H_n and h_n = H_{2n} - H_n/2.
/// Exact rationals are kept up to a fixed cap (their size grows quickly);
/// larger indices are streamed on demand.  Float mirrors are grow-only and
/// readable without the lock once published.
class HarmonicCache {
public:
    static constexpr long kExactCap = 4096;

    static Rational harmonic(long n) { return instance().harmonic_exact(n); }
    static Rational h(long n) { return instance().h_exact(n); }

    template <class R>
    static R h_real(long n);
    template <class R>
    static R harmonic_real(long n);

private:
    static HarmonicCache& instance() {
        static HarmonicCache c;
        return c;
    }

    std::mutex mutex_;
    std::deque<Rational> exact_h_;  // h_1.. up to cap
    std::deque<Rational> exact_H_;  // H_1.. up to 2*cap

    Rational harmonic_exact(long n) {
        if (n < 1) throw domain_error("harmonic: n must be >= 1");
        std::lock_guard<std::mutex> lock(mutex_);
        if (n <= 2 * kExactCap) {
            grow_H_locked(n);
            return exact_H_[static_cast<size_t>(n - 1)];
        }
        grow_H_locked(2 * kExactCap);
        Rational r = exact_H_.back();
        for (long k = 2 * kExactCap + 1; k <= n; ++k) r += Rational::of(1, k);
        return r;
    }

    Rational h_exact(long n) {
        if (n < 1) throw domain_error("h: n must be >= 1");
        std::lock_guard<std::mutex> lock(mutex_);
        if (n <= kExactCap) {
            grow_h_locked(n);
            return exact_h_[static_cast<size_t>(n - 1)];
        }
        grow_h_locked(kExactCap);
        Rational r = exact_h_.back();
        for (long k = kExactCap + 1; k <= n; ++k) r += Rational::of(1, 2 * k - 1);
        return r;
    }

    void grow_H_locked(long n) {
        while (static_cast<long>(exact_H_.size()) < n) {
            long k = static_cast<long>(exact_H_.size()) + 1;
            Rational prev = exact_H_.empty() ? Rational(0) : exact_H_.back();
            exact_H_.push_back(prev + Rational::of(1, k));
        }
    }
    void grow_h_locked(long n) {
        while (static_cast<long>(exact_h_.size()) < n) {
            long k = static_cast<long>(exact_h_.size()) + 1;
            Rational prev = exact_h_.empty() ? Rational(0) : exact_h_.back();
            exact_h_.push_back(prev + Rational::of(1, 2 * k - 1));
        }
    }

    template <class R>
    struct Mirror {
        std::mutex m;
        std::deque<R> h, H;
        std::atomic<size_t> published{0};
    };
    template <class R>
    static Mirror<R>& mirror() {
        static Mirror<R> mir;
        return mir;
    }
};

template <class R>
R HarmonicCache::h_real(long n) {
    if (n < 1) throw domain_error("h: n must be >= 1");
    auto& mir = mirror<R>();
    size_t need = static_cast<size_t>(n);
    if (mir.published.load(std::memory_order_acquire) < need) {
        std::lock_guard<std::mutex> lock(mir.m);
        while (mir.h.size() < need) {
            long k = static_cast<long>(mir.h.size()) + 1;
            R prev = mir.h.empty() ? R(0) : mir.h.back();
            mir.h.push_back(prev + R(1) / R(2.0 * static_cast<double>(k) - 1.0));
        }
        mir.published.store(mir.h.size(), std::memory_order_release);
    }
    return mir.h[need - 1];
}

template <class R>
R HarmonicCache::harmonic_real(long n) {
    if (n < 1) throw domain_error("harmonic: n must be >= 1");
    auto& mir = mirror<R>();
    std::lock_guard<std::mutex> lock(mir.m);
    while (mir.H.size() < static_cast<size_t>(n)) {
        long k = static_cast<long>(mir.H.size()) + 1;
        R prev = mir.H.empty() ? R(0) : mir.H.back();
        mir.H.push_back(prev + R(1) / R(static_cast<double>(k)));
    }
    return mir.H[static_cast<size_t>(n - 1)];
}

namespace detail {

/// Coefficients of the h_n asymptotic: h_n = (log 4n + gamma)/2 + sum_k d_k n^{-2k},
/// d_k = (1 - 2^{1-2k}) B_{2k} / (4k).
template <class R>
R h_asym_d(int k) {
    static const auto table = [] {
        std::array<R, 14> t{};
        for (int j = 1; j < 14; ++j) {
            Rational d = (Rational(1) - Rational(1) / Rational(2).pow(2 * j - 1)) *
                         bernoulli_number(2 * j) / Rational(4L * j);
            t[static_cast<size_t>(j)] = d.to_real<R>();
        }
        return t;
    }();
    return table[static_cast<size_t>(k)];
}

/// Euler-Maclaurin tail  sum_{n > N} log^p(n) n^{-a}  for p in {0,1,2}.
template <class R>
Cplx<R> zeta_log_tail(Cplx<R> a, int p, long N) {
    using RT = Real<R>;
    using std::log;
    R x = R(static_cast<double>(N));
    R lx = log(x);
    Cplx<R> am1 = a - R(1);
    Cplx<R> inv = Cplx<R>(R(1)) / am1;
    Cplx<R> x1ma = rpow(x, Cplx<R>(R(1)) - a); // N^{1-a}

    // integral_N^infty log^p t / t^a dt
    Cplx<R> integral;
    switch (p) {
        case 0: integral = x1ma * inv; break;
        case 1: integral = x1ma * (inv * lx + inv * inv); break;
        default:
            integral = x1ma * (inv * (lx * lx) + R(2) * inv * inv * lx +
                               R(2) * inv * inv * inv);
    }

    // f(N)/2 and odd derivatives: f^{(m)}(x) = x^{-a-m}(A log^2 x + B log x + C)
    Cplx<R> A(p == 2 ? R(1) : R(0)), B(p == 1 ? R(1) : R(0)), C(p == 0 ? R(1) : R(0));
    if (p == 2) B = Cplx<R>(R(0)); // (A,B,C) = (1,0,0) for log^2
    Cplx<R> fN = A * (lx * lx) + B * lx + C;
    Cplx<R> xp = rpow(x, -a); // x^{-a-m} running
    Cplx<R> sum = integral - R(0.5) * (fN * xp);

    int depth = RT::working_digits > 20 ? 16 : 10;
    Cplx<R> e = -a; // exponent -a-m with m = 0
    for (int j = 1; j <= depth; ++j) {
        // advance derivative coefficients to order m = 2j-1
        for (int step = 0; step < 2; ++step) {
            Cplx<R> A1 = e * A;
            Cplx<R> B1 = R(2) * A + e * B;
            Cplx<R> C1 = B + e * C;
            A = A1;
            B = B1;
            C = C1;
            e -= R(1);
            xp = xp / x;
            if (j == 1 && step == 0) break; // first pass: only one step to m=1
        }
        Cplx<R> deriv = (A * (lx * lx) + B * lx + C) * xp;
        Cplx<R> term = detail::bernoulli_real<R>(2 * j) * deriv;
        // divide by (2j)!
        R f2j(1);
        for (int i = 2; i <= 2 * j; ++i) f2j = f2j * R(i);
        sum -= term / f2j;
    }
    return sum;
}

/// Tail sum_{n > N} h_n n^{-s} from the h_n asymptotic expansion.
template <class R>
Cplx<R> h_zeta_tail(Cplx<R> s, long N) {
    using RT = Real<R>;
    R c0 = RT::euler_gamma() + R(2) * RT::ln2(); // gamma + log 4
    Cplx<R> t = R(0.5) * (c0 * zeta_log_tail(s, 0, N) + zeta_log_tail(s, 1, N));
    int K = RT::working_digits > 20 ? 12 : 9;
    for (int k = 1; k <= K; ++k)
        t += h_asym_d<R>(k) * zeta_log_tail(s + R(2 * k), 0, N);
    return t;
}

/// sum_{k >= K} a(k) e^{i k phi} by the tail Euler transform
/// sum_j (Delta^j a)(K) E^{K+j} / (1-E)^{j+1}; requires |1 - e^{i phi}|
/// not small and a smooth and decaying.
template <class R, class A>
Cplx<R> oscillatory_tail(A&& a, long K, R phi, int order = 0) {
    using RT = Real<R>;
    int m = order > 0 ? order : (RT::working_digits > 20 ? 22 : 14);
    std::vector<R> diff(static_cast<size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) diff[static_cast<size_t>(i)] = a(K + i);
    // forward differences in place: diff[j] = (Delta^j a)(K)
    for (int j = 1; j <= m; ++j)
        for (int i = m; i >= j; --i)
            diff[static_cast<size_t>(i)] =
                diff[static_cast<size_t>(i)] - diff[static_cast<size_t>(i - 1)];

    R sphi, cphi;
    if constexpr (std::is_same_v<R, double>) {
        sphi = std::sin(phi);
        cphi = std::cos(phi);
    } else {
        sincos(phi, sphi, cphi);
    }
    Cplx<R> E(cphi, sphi);
    Cplx<R> one_minus = Cplx<R>(R(1)) - E;
    Cplx<R> ek = ipow(E, K); // E^K
    Cplx<R> geo = Cplx<R>(R(1)) / one_minus;
    Cplx<R> result(R(0));
    Cplx<R> factor = ek * geo; // E^{K+j}/(1-E)^{j+1}
    for (int j = 0; j <= m; ++j) {
        result += diff[static_cast<size_t>(j)] * factor;
        factor = factor * E * geo;
    }
    return result;
}

} // namespace detail

/// zeta_h(s) = sum h_n / n^s for Re s > 1 (margin 0.05), Euler-Maclaurin
/// accelerated through the digamma asymptotic of h_n.
template <class R>
Cplx<R> zeta_h_series(Cplx<R> s, const PrecisionContext& ctx = {}) {
    using RT = Real<R>;
    if (RT::to_double(s.re) <= 1.05)
        throw domain_error(
            "zeta_h_series: requires Re s > 1.05; use the continuation for smaller Re s");
    long N = RT::working_digits > 20 ? 128 : 64;
    if (N > ctx.max_terms) N = ctx.max_terms;
    Cplx<R> sum(R(0));
    for (long n = N; n >= 1; --n)
        sum += HarmonicCache::h_real<R>(n) * rpow(R(static_cast<double>(n)), -s);
    return sum + detail::h_zeta_tail(s, N);
}

enum class HWeight { cosine, alternating, even_indices, odd_indices, squared };

namespace detail {

/// sum over even indices: sum_n h_{2n} (2n)^{-s}.
template <class R>
Cplx<R> h_even_index_sum(Cplx<R> s, long N) {
    using RT = Real<R>;
    Cplx<R> sum(R(0));
    for (long n = N; n >= 1; --n)
        sum += HarmonicCache::h_real<R>(2 * n) * rpow(R(static_cast<double>(2 * n)), -s);
    // tail: 2^{-s} sum_{n>N} h_{2n} n^{-s} with h_{2n} = (log 8n + gamma)/2 + d_k 4^{-k} n^{-2k}
    R c0 = RT::euler_gamma() + R(3) * RT::ln2();
    Cplx<R> tail = R(0.5) * (c0 * zeta_log_tail(s, 0, N) + zeta_log_tail(s, 1, N));
    int K = RT::working_digits > 20 ? 12 : 9;
    R quarter(0.25), qk(1);
    for (int k = 1; k <= K; ++k) {
        qk = qk * quarter;
        tail += h_asym_d<R>(k) * qk * zeta_log_tail(s + R(2 * k), 0, N);
    }
    return sum + rpow(R(2), -s) * tail;
}

/// sum_n h_n^2 n^{-s}.
template <class R>
Cplx<R> h_squared_sum(Cplx<R> s, long N) {
    using RT = Real<R>;
    Cplx<R> sum(R(0));
    for (long n = N; n >= 1; --n) {
        R h = HarmonicCache::h_real<R>(n);
        sum += h * h * rpow(R(static_cast<double>(n)), -s);
    }
    // h_n^2 = (log n + c0)^2/4 + (log n + c0) eps + eps^2, c0 = gamma + log 4
    R c0 = RT::euler_gamma() + R(2) * RT::ln2();
    Cplx<R> tail = R(0.25) * (zeta_log_tail(s, 2, N) + R(2) * c0 * zeta_log_tail(s, 1, N) +
                              c0 * c0 * zeta_log_tail(s, 0, N));
    int K = RT::working_digits > 20 ? 12 : 9;
    for (int k = 1; k <= K; ++k) {
        R d = h_asym_d<R>(k);
        tail += d * (zeta_log_tail(s + R(2 * k), 1, N) + c0 * zeta_log_tail(s + R(2 * k), 0, N));
        for (int k2 = k; k2 <= K; ++k2) {
            R dd2 = d * h_asym_d<R>(k2) * (k2 == k ? R(1) : R(2));
            tail += dd2 * zeta_log_tail(s + R(2 * (k + k2)), 0, N);
        }
    }
    return sum + tail;
}

/// sum_n h_n cos(n phi) n^{-s} for phi in (0, pi]; exact block plus
/// Euler-transformed oscillatory tails of the asymptotic pieces.
template <class R>
R h_cosine_sum(R s, R phi, long N) {
    using RT = Real<R>;
    using std::cos;
    using std::log;
    using std::pow;
    CompensatedSum<R> block;
    for (long n = 1; n <= N; ++n) {
        R nn(static_cast<double>(n));
        block.add(HarmonicCache::h_real<R>(n) * cos(phi * nn) * pow(nn, -s));
    }
    R c0 = RT::euler_gamma() + R(2) * RT::ln2();
    auto a_log = [&](long k) {
        R kk(static_cast<double>(k));
        return log(kk) * pow(kk, -s);
    };
    auto a_one = [&](long k) {
        R kk(static_cast<double>(k));
        return pow(kk, -s);
    };
    Cplx<R> tail = R(0.5) * (oscillatory_tail(a_log, N + 1, phi) +
                             c0 * oscillatory_tail(a_one, N + 1, phi));
    int K = RT::working_digits > 20 ? 10 : 7;
    for (int k = 1; k <= K; ++k) {
        R sk = s + R(2 * k);
        auto a_pow = [&](long j) {
            R jj(static_cast<double>(j));
            return pow(jj, -sk);
        };
        tail += h_asym_d<R>(k) * oscillatory_tail(a_pow, N + 1, phi);
    }
    return block.value() + tail.re;
}

} // namespace detail

/// Parameters for weighted_h_sum; only the cosine weight uses r.
struct HWeightParams {
    double r = 0.0; // cosine weight cos(4 pi r n), r in [0, 1/4]
};

/// Euler sums sum_n w_n h_n / n^s for the weight families used by the
/// closed-form identities.
template <class R>
R weighted_h_sum(HWeight weight, R s, const HWeightParams& params,
                 const PrecisionContext& ctx = {}) {
    using RT = Real<R>;
    double sd = RT::to_double(s);
    if (sd < 2.0) throw domain_error("weighted_h_sum: requires s >= 2");
    long N = RT::working_digits > 20 ? 128 : 64;
    (void)ctx;
    switch (weight) {
        case HWeight::squared:
            return detail::h_squared_sum(Cplx<R>(s), N).re;
        case HWeight::even_indices:
            return detail::h_even_index_sum(Cplx<R>(s), N).re;
        case HWeight::alternating:
            return R(2) * detail::h_even_index_sum(Cplx<R>(s), N).re -
                   zeta_h_series(Cplx<R>(s), ctx).re;
        case HWeight::odd_indices:
            return zeta_h_series(Cplx<R>(s), ctx).re -
                   detail::h_even_index_sum(Cplx<R>(s), N).re;
        case HWeight::cosine: {
            if (params.r < 0.0 || params.r > 0.25)
                throw domain_error("weighted_h_sum: cosine weight needs r in [0, 1/4]");
            if (params.r == 0.0) return zeta_h_series(Cplx<R>(s), ctx).re;
            if (params.r == 0.25)
                return R(2) * detail::h_even_index_sum(Cplx<R>(s), N).re -
                       zeta_h_series(Cplx<R>(s), ctx).re;
            R phi = R(4) * RT::pi() * RT::of(params.r);
            long Nc = RT::working_digits > 20 ? 1024 : 320;
            return detail::h_cosine_sum(s, phi, Nc);
        }
    }
    throw domain_error("weighted_h_sum: unknown weight");
}

/// sum_k h_k x^{2k} / k, |x| <= 0.99, with a geometric tail bound
/// (h_k/k decreases, so tail <= h_{N+1}/(N+1) x^{2N+2}/(1-x^2)).
template <class R>
Estimated<R> generating_function_lhs(R x, const PrecisionContext& ctx = {}) {
    using RT = Real<R>;
    double xd = std::abs(RT::to_double(x));
    if (xd > 0.99)
        throw accuracy_error("generating_function_lhs: |x| too close to 1", {xd, 0.0}, 1.0);
    if (xd == 0.0) return {R(0), 0.0};
    R x2 = x * x;
    double goal = std::min(ctx.goal(1.0), RT::working_digits > 20 ? 1e-30 : 1e-16);
    CompensatedSum<R> sum;
    R p(1);
    long k = 0;
    double bound;
    do {
        ++k;
        p = p * x2;
        sum.add(HarmonicCache::h_real<R>(k) * p / R(static_cast<double>(k)));
        bound = RT::to_double(HarmonicCache::h_real<R>(k + 1) * p * x2 /
                              R(static_cast<double>(k + 1))) /
                (1.0 - xd * xd);
        if (k >= ctx.max_terms)
            throw accuracy_error("generating_function_lhs: max_terms exhausted",
                                 {RT::to_double(sum.value()), 0.0}, bound);
    } while (bound > 0.05 * goal);
    return {sum.value(), bound};
}

/// Exact expansion coefficients of log^2(tanh x):
/// w_n = (-1)^n (2^{2n-1}-1) r_n / n.
inline PiRational w_coefficient(int n) {
    if (n < 1) throw domain_error("w_coefficient: n must be >= 1");
    Rational w = (Rational(2).pow(2 * n - 1) - Rational(1)) * zeta_even_rational(n) /
                 Rational(static_cast<long>(n));
    if (n % 2 != 0) w = -w;
    return {w, 0};
}

/// c_n = (-1)^n sum_{k=1}^{n-1} (2^{2k-1}-1)(2^{2(n-k)-1}-1) r_k r_{n-k} / (k(n-k)).
inline PiRational c_coefficient_series(int n) {
    if (n < 2) throw domain_error("c_coefficient_series: n must be >= 2");
    Rational c;
    for (int k = 1; k < n; ++k) {
        c += (Rational(2).pow(2 * k - 1) - Rational(1)) *
             (Rational(2).pow(2 * (n - k) - 1) - Rational(1)) * zeta_even_rational(k) *
             zeta_even_rational(n - k) / Rational(static_cast<long>(k) * (n - k));
    }
    if (n % 2 != 0) c = -c;
    return {c, 0};
}

/// w(y) = sum_n h_n / (n^2 + (y/2pi)^2) and its complex-q^2 generalization.
template <class R>
Cplx<R> h_lorentz_sum(Cplx<R> q2, const PrecisionContext& ctx = {}) {
    using RT = Real<R>;
    (void)ctx;
    
    long N = std::max<long>(RT::working_digits > 20 ? 128 : 64,
                            4 * static_cast<long>(std::sqrt(RT::to_double(abs2(q2))) + 1));
    
    Cplx<R> sum(R(0));
    for (long n = N; n >= 1; --n) {
        R nn(static_cast<double>(n));
        sum += Cplx<R>(HarmonicCache::h_real<R>(n)) / (Cplx<R>(nn * nn) + q2);
    }
    // 1/(n^2+q^2) = sum_j (-q^2)^j n^{-2j-2} for n > |q|
    Cplx<R> tail(R(0));
    Cplx<R> qp(R(1));
    for (int j = 0; j < 60; ++j) {
        Cplx<R> term = qp * detail::h_zeta_tail(Cplx<R>(R(2 * j + 2)), N);
        tail += term;
        if (RT::to_double(abs2(term)) < 1e-12 * RT::eps * RT::eps *
                                            (1.0 + RT::to_double(abs2(sum))))
            break;
        qp = qp * (-q2);
    }
    return sum + tail;
}

template <class R>
R w_function(R y, const PrecisionContext& ctx = {}) {
    using RT = Real<R>;
    if (RT::to_double(y) < 0.0) throw domain_error("w_function: y must be >= 0");
    R q = y / RT::two_pi();
    return h_lorentz_sum(Cplx<R>(q * q), ctx).re;
}

enum class ClassicalSum { euler_Hn, georghiou_philippou, zeta_even_recursion };

/// Classical recursions quoted alongside the h-sums; returns (lhs, rhs).
template <class R>
std::pair<R, R> classical_euler_sum(ClassicalSum kind, int m, const PrecisionContext& ctx = {}) {
    using RT = Real<R>;
    (void)ctx;
    auto zeta_r = [&](int j) { return detail::zeta_int<R>(j); };
    long N = RT::working_digits > 20 ? 128 : 64;

    // sum_{n>N} H_n n^{-a} with H_n = log n + gamma + 1/(2n) - sum B_{2k}/(2k) n^{-2k}
    auto H_tail = [&](Cplx<R> a) {
        Cplx<R> t = detail::zeta_log_tail(a, 1, N) +
                    RT::euler_gamma() * detail::zeta_log_tail(a, 0, N) +
                    R(0.5) * detail::zeta_log_tail(a + R(1), 0, N);
        int K = RT::working_digits > 20 ? 12 : 9;
        for (int k = 1; k <= K; ++k)
            t -= detail::bernoulli_real<R>(2 * k) / R(2 * k) *
                 detail::zeta_log_tail(a + R(2 * k), 0, N);
        return t;
    };
    auto H_sum = [&](int a) {
        Cplx<R> s(R(0));
        for (long n = N; n >= 1; --n)
            s += HarmonicCache::harmonic_real<R>(n) * rpow(R(static_cast<double>(n)), Cplx<R>(R(-a)));
        return (s + H_tail(Cplx<R>(R(a)))).re;
    };

    switch (kind) {
        case ClassicalSum::euler_Hn: {
            if (m < 2) throw domain_error("euler_Hn: m must be >= 2");
            R lhs = R(2) * H_sum(m);
            R rhs = R(m + 2) * zeta_r(m + 1);
            for (int k = 1; k <= m - 2; ++k) rhs = rhs - zeta_r(k + 1) * zeta_r(m - k);
            return {lhs, rhs};
        }
        case ClassicalSum::georghiou_philippou: {
            if (m < 1) throw domain_error("georghiou_philippou: m must be >= 1");
            R lhs = H_sum(2 * m + 1);
            R rhs(0);
            for (int k = 2; k <= 2 * m; ++k) {
                R term = zeta_r(k) * zeta_r(2 * m + 2 - k);
                rhs = (k % 2 == 0) ? rhs + term : rhs - term;
            }
            return {lhs, R(0.5) * rhs};
        }
        case ClassicalSum::zeta_even_recursion: {
            if (m < 2) throw domain_error("zeta_even_recursion: n must be >= 2");
            R lhs = R(2 * m + 1) * zeta_r(2 * m);
            R rhs(0);
            for (int k = 1; k <= m - 1; ++k) rhs = rhs + zeta_r(2 * k) * zeta_r(2 * m - 2 * k);
            return {lhs, R(2) * rhs};
        }
    }
    throw domain_error("classical_euler_sum: unknown kind");
}

} // namespace hzeta

#endif // HZETA_H_SERIES_HPP
