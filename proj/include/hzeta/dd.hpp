// Copyright Contributors to the hzeta Project
// SPDX-License-Identifier: Apache-2.0

#ifndef HZETA_DD_HPP
#define HZETA_DD_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

namespace hzeta {

namespace detail {

// Error-free transforms (Dekker/Knuth). Require round-to-nearest doubles;
// do not compile this code with -ffast-math.
inline double two_sum(double a, double b, double& err) noexcept {
    double s = a + b;
    double bb = s - a;
    err = (a - (s - bb)) + (b - bb);
    return s;
}

// Assumes |a| >= |b| or a == 0.
inline double quick_two_sum(double a, double b, double& err) noexcept {
    double s = a + b;
    err = b - (s - a);
    return s;
}

inline double two_prod(double a, double b, double& err) noexcept {
    double p = a * b;
    err = std::fma(a, b, -p);
    return p;
}

} // namespace detail

/// Double-double number: an unevaluated sum of two doubles giving ~31-32
/// significant decimal digits with nearly the exponent range of double.
class DDouble {
public:
    constexpr DDouble() = default;
    constexpr DDouble(double x) : hi_(x), lo_(0.0) {}
    constexpr DDouble(int x) : hi_(x), lo_(0.0) {}
    constexpr DDouble(long x) : hi_(static_cast<double>(x)), lo_(0.0) {}

    // Caller must guarantee |lo| <= ulp(hi)/2 (a normalized pair).
    constexpr DDouble(double hi, double lo) : hi_(hi), lo_(lo) {}

    constexpr double hi() const noexcept { return hi_; }
    constexpr double lo() const noexcept { return lo_; }

    explicit constexpr operator double() const noexcept { return hi_; }

    friend DDouble operator+(DDouble a, DDouble b) noexcept {
        double s1, s2, t1, t2;
        s1 = detail::two_sum(a.hi_, b.hi_, s2);
        t1 = detail::two_sum(a.lo_, b.lo_, t2);
        s2 += t1;
        s1 = detail::quick_two_sum(s1, s2, s2);
        s2 += t2;
        s1 = detail::quick_two_sum(s1, s2, s2);
        return DDouble(s1, s2);
    }
    friend DDouble operator+(DDouble a, double b) noexcept {
        double s1, s2;
        s1 = detail::two_sum(a.hi_, b, s2);
        s2 += a.lo_;
        s1 = detail::quick_two_sum(s1, s2, s2);
        return DDouble(s1, s2);
    }
    friend DDouble operator+(double a, DDouble b) noexcept { return b + a; }

    friend DDouble operator-(DDouble a) noexcept { return DDouble(-a.hi_, -a.lo_); }
    friend DDouble operator-(DDouble a, DDouble b) noexcept { return a + (-b); }
    friend DDouble operator-(DDouble a, double b) noexcept { return a + (-b); }
    friend DDouble operator-(double a, DDouble b) noexcept { return (-b) + a; }

    friend DDouble operator*(DDouble a, DDouble b) noexcept {
        double p1, p2;
        p1 = detail::two_prod(a.hi_, b.hi_, p2);
        p2 += a.hi_ * b.lo_ + a.lo_ * b.hi_;
        p1 = detail::quick_two_sum(p1, p2, p2);
        return DDouble(p1, p2);
    }
    friend DDouble operator*(DDouble a, double b) noexcept {
        double p1, p2;
        p1 = detail::two_prod(a.hi_, b, p2);
        p2 += a.lo_ * b;
        p1 = detail::quick_two_sum(p1, p2, p2);
        return DDouble(p1, p2);
    }
    friend DDouble operator*(double a, DDouble b) noexcept { return b * a; }

    friend DDouble operator/(DDouble a, DDouble b) noexcept {
        double q1 = a.hi_ / b.hi_;
        DDouble r = a - b * q1;
        double q2 = r.hi_ / b.hi_;
        r = r - b * q2;
        double q3 = r.hi_ / b.hi_;
        double s, e;
        s = detail::quick_two_sum(q1, q2, e);
        DDouble q(s, e);
        return q + q3;
    }
    friend DDouble operator/(DDouble a, double b) noexcept { return a / DDouble(b); }
    friend DDouble operator/(double a, DDouble b) noexcept { return DDouble(a) / b; }

    DDouble& operator+=(DDouble y) noexcept { return *this = *this + y; }
    DDouble& operator-=(DDouble y) noexcept { return *this = *this - y; }
    DDouble& operator*=(DDouble y) noexcept { return *this = *this * y; }
    DDouble& operator/=(DDouble y) noexcept { return *this = *this / y; }
    DDouble& operator+=(double y) noexcept { return *this = *this + y; }
    DDouble& operator-=(double y) noexcept { return *this = *this - y; }
    DDouble& operator*=(double y) noexcept { return *this = *this * y; }
    DDouble& operator/=(double y) noexcept { return *this = *this / y; }

    friend bool operator==(DDouble a, DDouble b) noexcept {
        return a.hi_ == b.hi_ && a.lo_ == b.lo_;
    }
    friend bool operator!=(DDouble a, DDouble b) noexcept { return !(a == b); }
    friend bool operator<(DDouble a, DDouble b) noexcept {
        return a.hi_ < b.hi_ || (a.hi_ == b.hi_ && a.lo_ < b.lo_);
    }
    friend bool operator>(DDouble a, DDouble b) noexcept { return b < a; }
    friend bool operator<=(DDouble a, DDouble b) noexcept { return !(b < a); }
    friend bool operator>=(DDouble a, DDouble b) noexcept { return !(a < b); }

private:
    double hi_ = 0.0;
    double lo_ = 0.0;
};

inline bool isfinite(DDouble a) noexcept { return std::isfinite(a.hi()); }
inline bool isnan(DDouble a) noexcept { return std::isnan(a.hi()); }

inline DDouble abs(DDouble a) noexcept { return a.hi() < 0.0 ? -a : a; }
inline DDouble fabs(DDouble a) noexcept { return abs(a); }

inline DDouble ldexp(DDouble a, int n) noexcept {
    return DDouble(std::ldexp(a.hi(), n), std::ldexp(a.lo(), n));
}

DDouble sqrt(DDouble a);
DDouble floor(DDouble a);
DDouble ceil(DDouble a);
DDouble round(DDouble a);
DDouble exp(DDouble a);
DDouble log(DDouble a);
DDouble log10(DDouble a);
void sincos(DDouble a, DDouble& s, DDouble& c);
DDouble sin(DDouble a);
DDouble cos(DDouble a);
DDouble tan(DDouble a);
DDouble atan2(DDouble y, DDouble x);
DDouble atan(DDouble a);
DDouble sinh(DDouble a);
DDouble cosh(DDouble a);
DDouble tanh(DDouble a);
DDouble pow(DDouble a, int n);
DDouble pow(DDouble a, DDouble b);
DDouble hypot(DDouble x, DDouble y);
DDouble fmod(DDouble a, DDouble b);

// Correctly rounded-ish constants, computed on first use (seeded from
// double-precision values, refined with dd-native series).
namespace ddc {
DDouble pi();
DDouble two_pi();
DDouble half_pi();
DDouble quarter_pi();
DDouble ln2();
DDouble euler_gamma();
DDouble catalan();
} // namespace ddc

/// Decimal string with `prec` significant digits, round-half-up.
std::string to_string(DDouble a, int prec = 32);

/// Parse "[-]ddd[.ddd][e±dd]". Accurate to ~1 ulp of DDouble.
DDouble dd_from_string(std::string_view sv);

} // namespace hzeta

#endif // HZETA_DD_HPP
