// Copyright Contributors to the hzeta Project
// SPDX-License-Identifier: Apache-2.0

#ifndef HZETA_REAL_HPP
#define HZETA_REAL_HPP

#include "hzeta/dd.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace hzeta {

/// Numeric-kernel scalar traits. Every templated kernel is instantiated for
/// double (working precision ~16 digits) and DDouble (~32 digits).
template <class R>
struct Real;

template <>
struct Real<double> {
    using type = double;
    static constexpr int working_digits = 16;
    static constexpr double eps = 2.220446049250313e-16;

    static double pi() { return ddc::pi().hi(); }
    static double two_pi() { return ddc::two_pi().hi(); }
    static double half_pi() { return ddc::half_pi().hi(); }
    static double ln2() { return ddc::ln2().hi(); }
    static double euler_gamma() { return ddc::euler_gamma().hi(); }
    static double catalan() { return ddc::catalan().hi(); }

    static double of(double v) { return v; }
    static double to_double(double v) { return v; }
    static double parse(std::string_view s) { return std::strtod(s.data(), nullptr); }
    static std::string str(double v, int prec = 17) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*e", prec - 1, v);
        return buf;
    }
};

template <>
struct Real<DDouble> {
    using type = DDouble;
    static constexpr int working_digits = 32;
    static constexpr double eps = 1.232595164407831e-32; // 2^-106

    static DDouble pi() { return ddc::pi(); }
    static DDouble two_pi() { return ddc::two_pi(); }
    static DDouble half_pi() { return ddc::half_pi(); }
    static DDouble ln2() { return ddc::ln2(); }
    static DDouble euler_gamma() { return ddc::euler_gamma(); }
    static DDouble catalan() { return ddc::catalan(); }

    static DDouble of(double v) { return DDouble(v); }
    static double to_double(DDouble v) { return v.hi(); }
    static DDouble parse(std::string_view s) { return dd_from_string(s); }
    static std::string str(DDouble v, int prec = 34) { return to_string(v, prec); }
};

/// Kahan compensated accumulator; on DDouble it simply adds a guard term.
template <class R>
class CompensatedSum {
public:
    void add(R x) {
        R y = x - c_;
        R t = sum_ + y;
        c_ = (t - sum_) - y;
        sum_ = t;
    }
    CompensatedSum& operator+=(R x) {
        add(x);
        return *this;
    }
    R value() const { return sum_; }

private:
    R sum_{}, c_{};
};

} // namespace hzeta

#endif // HZETA_REAL_HPP
