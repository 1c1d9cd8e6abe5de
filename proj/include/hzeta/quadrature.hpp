// Copyright Contributors to the hzeta Project
// SPDX-License-Identifier: Apache-2.0

#ifndef HZETA_QUADRATURE_HPP
#define HZETA_QUADRATURE_HPP

#include "hzeta/cplx.hpp"
#include "hzeta/errors.hpp"
#include "hzeta/precision.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <vector>

namespace hzeta {

enum class SingularityHint {
    none,
    log_at_0,
    log_at_both,
    algebraic_log_at_0, // x^alpha log^p x near the left endpoint, alpha > -1
};

/// Integrand on an open interval.  The evaluator receives the abscissa plus
/// its distances to both endpoints, computed without cancellation, so
/// endpoint-singular factors can be evaluated accurately.
template <class R>
struct Integrand1D {
    std::function<Cplx<R>(R x, R dist_a, R dist_b)> eval;
    SingularityHint hint = SingularityHint::none;
    double algebraic_exponent = 0.0; // only for algebraic_log_at_0
};

namespace detail {

template <class R>
struct TSNode {
    R lam;  // distance of the node from the nearer endpoint, as a fraction
    R dxdt; // weight factor pi cosh(t) u/(1+u)^2, u = exp(-pi sinh t)
};

/// Shared tanh-sinh abscissas per refinement level (level 0: t = 0,1,2,...;
/// level l>0: odd multiples of 2^-l).  Grow-only, guarded by a mutex; the
/// returned vectors are never mutated after publication.
template <class R>
const std::vector<TSNode<R>>& tanh_sinh_level(int level) {
    static std::vector<std::vector<TSNode<R>>> levels;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    while (static_cast<int>(levels.size()) <= level) {
        int l = static_cast<int>(levels.size());
        std::vector<TSNode<R>> nodes;
        double h = std::ldexp(1.0, -l);
        int k = (l == 0) ? 0 : 1;
        int step = (l == 0) ? 1 : 2;
        for (;; k += step) {
            double t = k * h;
            if (t > 6.5) break;
            R rt = Real<R>::of(t);
            using std::cosh;
            using std::exp;
            using std::sinh;
            R w = Real<R>::pi() * sinh(rt); // 2 * (pi/2) sinh t
            if (Real<R>::to_double(w) > 700.0) break;
            R u = exp(-w);
            R lam = u / (R(1) + u);
            R dxdt = Real<R>::pi() * cosh(rt) * u / ((R(1) + u) * (R(1) + u));
            nodes.push_back({lam, dxdt});
        }
        levels.push_back(std::move(nodes));
    }
    return levels[static_cast<size_t>(level)];
}

inline double ts_mag(double v) { return std::abs(v); }
inline double ts_mag(DDouble v) { return std::abs(v.hi()); }
template <class R>
double ts_mag(const Cplx<R>& v) {
    return std::sqrt(Real<R>::to_double(abs2(v)));
}

} // namespace detail

/// Tanh-sinh (double-exponential) quadrature of f over (a, b).  V is the
/// integrand value type (R or Cplx<R>).  Converges when successive level
/// refinements differ by less than max(tol_abs, tol_rel |I|); throws
/// accuracy_error (carrying the best value) if quad_depth is exhausted.
template <class R, class V, class F>
Estimated<V> tanh_sinh(F&& f, R a, R b, const PrecisionContext& ctx) {
    using RT = Real<R>;
    if (!(RT::to_double(a) < RT::to_double(b)))
        throw domain_error("tanh_sinh: requires a < b");

    R len = b - a;
    auto sample = [&](const detail::TSNode<R>& node, V& acc) {
        R da = node.lam * len;
        // near-left point
        acc += f(a + da, da, len - da) * node.dxdt;
        // near-right point
        acc += f(b - da, len - da, da) * node.dxdt;
    };

    // level 0 (h = 1): includes the t = 0 node, counted once
    const auto& l0 = detail::tanh_sinh_level<R>(0);
    V sum{};
    {
        R da = l0[0].lam * len;
        sum += f(a + da, da, len - da) * l0[0].dxdt;
        for (size_t i = 1; i < l0.size(); ++i) sample(l0[i], sum);
    }
    V integral = sum * len; // h = 1 at level 0

    double prev_delta = 1e300;
    V prev = integral;
    for (int level = 1; level <= ctx.quad_depth; ++level) {
        const auto& nodes = detail::tanh_sinh_level<R>(level);
        V add{};
        for (const auto& n : nodes) sample(n, add);
        R h = RT::of(std::ldexp(1.0, -level));
        integral = integral * R(0.5) + add * (h * len);

        double delta = detail::ts_mag(integral - prev);
        double scale = std::max(1.0, detail::ts_mag(integral));
        if (level >= 3 && delta <= ctx.goal(scale) * 0.5) {
            double est = std::max(delta, 0.01 * RT::eps * scale);
            return {integral, est};
        }
        prev = integral;
        prev_delta = delta;
    }
    double est = prev_delta;
    throw accuracy_error("tanh_sinh: not converged at quad_depth",
                         {detail::ts_mag(integral), 0.0}, est);
}

/// Spec-facing wrapper over the tanh-sinh engine.
template <class R>
Estimated<Cplx<R>> integrate_finite(const Integrand1D<R>& f, R a, R b,
                                    const PrecisionContext& ctx) {
    return tanh_sinh<R, Cplx<R>>(
        [&](R x, R da, R db) { return f.eval(x, da, db); }, a, b, ctx);
}

/// log(tan x) on (0, pi/2) evaluated through the endpoint distances:
/// log sin x - log sin(pi/2 - x), exact at both singular ends.
template <class R>
R log_tan_01(R /*x*/, R da, R db) {
    using std::log;
    using std::sin;
    return log(sin(da)) - log(sin(db));
}

/// L(f) = int_0^{pi/2} f(x) log(tan x) dx.
template <class R, class V = R, class F>
Estimated<V> log_tangent_integral(F&& f, const PrecisionContext& ctx) {
    R b = Real<R>::half_pi();
    return tanh_sinh<R, V>(
        [&](R x, R da, R db) { return f(x) * log_tan_01<R>(x, da, db); }, R(0), b, ctx);
}

/// L(sin(4n x)) with subdivision at the integrand zeros for large n, where
/// a single double-exponential grid stops being effective.
template <class R>
Estimated<R> log_tangent_sin_integral(int n, const PrecisionContext& ctx) {
    using std::sin;
    if (n < 1) throw domain_error("log_tangent_sin_integral: n must be >= 1");
    R b = Real<R>::half_pi();
    if (n <= 32) {
        return tanh_sinh<R, R>(
            [&](R x, R da, R db) {
                return sin(R(4 * n) * x) * log_tan_01<R>(x, da, db);
            },
            R(0), b, ctx);
    }
    // subdivide at x_k = k pi/(4n), k = 0..2n
    Estimated<R> total{};
    for (int k = 0; k < 2 * n; ++k) {
        R xa = b * R(k) / R(2 * n);
        R xb = b * R(k + 1) / R(2 * n);
        auto piece = tanh_sinh<R, R>(
            [&](R x, R da, R db) {
                R lt;
                if (k == 0)
                    lt = log_tan_01<R>(x, da, b - x);
                else if (k == 2 * n - 1)
                    lt = log_tan_01<R>(x, x, db);
                else {
                    using std::cos;
                    using std::log;
                    using std::tan;
                    lt = log(tan(x));
                }
                return sin(R(4 * n) * x) * lt;
            },
            xa, xb, ctx);
        total.value += piece.value;
        total.error += piece.error;
    }
    return total;
}

/// Bradley's transformation T(r) = int_0^{r pi} log(tan x) dx, r in [0, 1/2].
template <class R>
Estimated<R> bradley_T(R r, const PrecisionContext& ctx) {
    using RT = Real<R>;
    using std::cos;
    using std::log;
    using std::sin;
    double rd = RT::to_double(r);
    if (rd < 0.0 || rd > 0.5) throw domain_error("T(r): r must lie in [0, 1/2]");
    if (rd == 0.0) return {R(0), 0.0};
    if (rd == 0.5) {
        // full interval: log tan integrates to zero; evaluate anyway
        return log_tangent_integral<R, R>([](R) { return R(1); }, ctx);
    }
    R b = r * RT::pi();
    return tanh_sinh<R, R>(
        [&](R x, R da, R) { return log(sin(da)) - log(cos(x)); }, R(0), b, ctx);
}

/// int_0^infty log^2(tanh x) x^{s-2} dx for Re s > 1, split at x = 1.
/// The [1, inf) piece is cut at X with 4 e^{-4X} X^{Re s - 2} below goal.
template <class R>
R log_tanh_accurate(R x) {
    using std::exp;
    using std::log;
    using std::tanh;
    double xd = Real<R>::to_double(x);
    if (xd < 0.7) return log(tanh(x));
    R u = R(2) / (exp(R(2) * x) + R(1)); // 1 - tanh x = 2/(e^{2x}+1)
    return log(R(1) - u);
}

namespace detail {

inline double decay_cutoff(double sigma, double goal) {
    double X = 8.0;
    auto bound = [&](double x) {
        return 4.0 * std::exp(-4.0 * x) * std::pow(x, std::max(sigma, 2.0) - 2.0);
    };
    while (bound(X) > 0.02 * goal && X < 300.0) X += 2.0;
    return X;
}

} // namespace detail

/// K(s) = int_1^infty log^2(tanh x) x^{s-2} dx (entire in s).
template <class R>
Estimated<Cplx<R>> mellin_tail_K(Cplx<R> s, const PrecisionContext& ctx) {
    using RT = Real<R>;
    double sigma = RT::to_double(s.re);
    double goal = std::min(ctx.goal(1.0), RT::working_digits > 20 ? 1e-30 : 1e-14);
    double X = detail::decay_cutoff(sigma, goal);
    Cplx<R> sm2 = s - R(2);
    return tanh_sinh<R, Cplx<R>>(
        [&](R x, R, R) {
            R lt = log_tanh_accurate(x);
            using std::log;
            return Cplx<R>(lt * lt) * exp(sm2 * log(x));
        },
        R(1), RT::of(X), ctx);
}

/// Full Mellin integral int_0^infty log^2(tanh x) x^{s-2} dx, Re s > 1.
template <class R>
Estimated<Cplx<R>> mellin_log_tanh_sq(Cplx<R> s, const PrecisionContext& ctx) {
    using RT = Real<R>;
    if (RT::to_double(s.re) <= 1.0)
        throw domain_error("mellin_log_tanh_sq: requires Re s > 1");
    Cplx<R> sm2 = s - R(2);
    auto head = tanh_sinh<R, Cplx<R>>(
        [&](R, R da, R) {
            using std::log;
            R lt = log_tanh_accurate(da); // the abscissa equals da on (0,1]
            return Cplx<R>(lt * lt) * exp(sm2 * log(da));
        },
        R(0), R(1), ctx);
    auto tail = mellin_tail_K(s, ctx);
    return {head.value + tail.value, head.error + tail.error};
}

/// int_{-infty}^{infty} g(sigma + i t) dt for conjugate-symmetric g (real
/// valued, even in t): integrates [0, T] and doubles, growing T until the
/// last block is negligible.  The integrand must decay like e^{-pi t}.
template <class R, class G>
Estimated<R> vertical_line_integral(G&& g, R sigma, const PrecisionContext& ctx) {
    using RT = Real<R>;
    double goal = ctx.goal(1.0);
    R total(0);
    double err = 0.0;
    double t0 = 0.0;
    const double block = 8.0;
    for (int i = 0; i < 40; ++i) {
        auto piece = tanh_sinh<R, R>(
            [&](R t, R, R) { return g(Cplx<R>(sigma, t)); }, RT::of(t0),
            RT::of(t0 + block), ctx);
        total += piece.value;
        err += piece.error;
        double mag = std::abs(RT::to_double(piece.value));
        t0 += block;
        if (mag < 0.05 * goal) {
            // e^{-pi t} decay: the remaining tail is below the last block
            return {R(2) * total, 2 * (err + mag)};
        }
    }
    throw accuracy_error("vertical_line_integral: no decay detected",
                         {RT::to_double(total), 0.0}, err);
}

} // namespace hzeta

#endif // HZETA_QUADRATURE_HPP
