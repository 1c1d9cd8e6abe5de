// Copyright Contributors to the hzeta Project
// SPDX-License-Identifier: Apache-2.0

#ifndef HZETA_CPLX_HPP
#define HZETA_CPLX_HPP

#include "hzeta/real.hpp"

#include <complex>
#include <concepts>

namespace hzeta {

/// Minimal complex-number template usable with both double and DDouble.
/// (std::complex is only specified for the built-in floating types.)
template <class R>
struct Cplx {
    R re{};
    R im{};

    constexpr Cplx() = default;
    constexpr Cplx(R r) : re(r) {}
    constexpr Cplx(R r, R i) : re(r), im(i) {}

    template <class S = R>
        requires(!std::same_as<S, double>)
    constexpr Cplx(double r) : re(R(r)) {}
    template <class S = R>
        requires(!std::same_as<S, double>)
    constexpr Cplx(double r, double i) : re(R(r)), im(R(i)) {}

    static Cplx from_std(std::complex<double> z) { return {R(z.real()), R(z.imag())}; }
    std::complex<double> to_std() const {
        return {Real<R>::to_double(re), Real<R>::to_double(im)};
    }

    friend Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cplx operator-(const Cplx& a) { return {-a.re, -a.im}; }
    friend Cplx operator*(const Cplx& a, const Cplx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cplx operator/(const Cplx& a, const Cplx& b) {
        // Smith's scaled division
        using std::abs;
        if (abs(b.re) >= abs(b.im)) {
            R t = b.im / b.re;
            R d = b.re + b.im * t;
            return {(a.re + a.im * t) / d, (a.im - a.re * t) / d};
        }
        R t = b.re / b.im;
        R d = b.re * t + b.im;
        return {(a.re * t + a.im) / d, (a.im * t - a.re) / d};
    }

    friend Cplx operator+(const Cplx& a, R b) { return {a.re + b, a.im}; }
    friend Cplx operator+(R a, const Cplx& b) { return {a + b.re, b.im}; }
    friend Cplx operator-(const Cplx& a, R b) { return {a.re - b, a.im}; }
    friend Cplx operator-(R a, const Cplx& b) { return {a - b.re, -b.im}; }
    friend Cplx operator*(const Cplx& a, R b) { return {a.re * b, a.im * b}; }
    friend Cplx operator*(R a, const Cplx& b) { return {a * b.re, a * b.im}; }
    friend Cplx operator/(const Cplx& a, R b) { return {a.re / b, a.im / b}; }
    friend Cplx operator/(R a, const Cplx& b) { return Cplx(a) / b; }

    template <class S = R>
        requires(!std::same_as<S, double>)
    friend Cplx operator+(const Cplx& a, double b) { return a + R(b); }
    template <class S = R>
        requires(!std::same_as<S, double>)
    friend Cplx operator-(const Cplx& a, double b) { return a - R(b); }
    template <class S = R>
        requires(!std::same_as<S, double>)
    friend Cplx operator*(const Cplx& a, double b) { return a * R(b); }
    template <class S = R>
        requires(!std::same_as<S, double>)
    friend Cplx operator*(double a, const Cplx& b) { return R(a) * b; }
    template <class S = R>
        requires(!std::same_as<S, double>)
    friend Cplx operator/(const Cplx& a, double b) { return a / R(b); }

    Cplx& operator+=(const Cplx& o) { return *this = *this + o; }
    Cplx& operator-=(const Cplx& o) { return *this = *this - o; }
    Cplx& operator*=(const Cplx& o) { return *this = *this * o; }
    Cplx& operator/=(const Cplx& o) { return *this = *this / o; }

    friend bool operator==(const Cplx& a, const Cplx& b) { return a.re == b.re && a.im == b.im; }
};

template <class R>
Cplx<R> conj(const Cplx<R>& z) {
    return {z.re, -z.im};
}

template <class R>
R abs2(const Cplx<R>& z) {
    return z.re * z.re + z.im * z.im;
}

template <class R>
R abs(const Cplx<R>& z) {
    using std::hypot;
    return hypot(z.re, z.im);
}

template <class R>
R arg(const Cplx<R>& z) {
    using std::atan2;
    return atan2(z.im, z.re);
}

template <class R>
Cplx<R> exp(const Cplx<R>& z) {
    using std::exp;
    R s, c;
    if constexpr (std::same_as<R, double>) {
        s = std::sin(z.im);
        c = std::cos(z.im);
    } else {
        sincos(z.im, s, c);
    }
    R e = exp(z.re);
    return {e * c, e * s};
}

template <class R>
Cplx<R> log(const Cplx<R>& z) {
    using std::log;
    return {log(abs(z)), arg(z)};
}

template <class R>
Cplx<R> sin(const Cplx<R>& z) {
    using std::sin;
    using std::cos;
    using std::sinh;
    using std::cosh;
    return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

template <class R>
Cplx<R> cos(const Cplx<R>& z) {
    using std::sin;
    using std::cos;
    using std::sinh;
    using std::cosh;
    return {cos(z.re) * cosh(z.im), -sin(z.re) * sinh(z.im)};
}

template <class R>
Cplx<R> pow(const Cplx<R>& z, const Cplx<R>& w) {
    if (z.re == R(0) && z.im == R(0)) return Cplx<R>(R(0));
    return exp(w * log(z));
}

template <class R>
Cplx<R> pow(const Cplx<R>& z, R x) {
    return pow(z, Cplx<R>(x));
}

/// x^w for real x > 0: exp(w log x) without the complex-log detour.
template <class R>
Cplx<R> rpow(R x, const Cplx<R>& w) {
    using std::log;
    return exp(w * log(x));
}

template <class R>
Cplx<R> ipow(Cplx<R> z, long n) {
    bool inv = n < 0;
    unsigned long m = inv ? -n : n;
    Cplx<R> r(R(1));
    while (m) {
        if (m & 1) r *= z;
        m >>= 1;
        if (m) z *= z;
    }
    return inv ? Cplx<R>(R(1)) / r : r;
}

template <class R>
bool isfinite(const Cplx<R>& z) {
    using std::isfinite;
    return isfinite(z.re) && isfinite(z.im);
}

} // namespace hzeta

#endif // HZETA_CPLX_HPP
