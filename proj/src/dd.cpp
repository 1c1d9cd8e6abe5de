// Copyright Contributors to the hzeta Project
// SPDX-License-Identifier: Apache-2.0

#include "hzeta/dd.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace hzeta {

namespace {

// a - k*c with the products split exactly, so the cancellation in the
// subtraction does not amplify rounding from the k*c magnitude.
DDouble sub_int_mult(DDouble a, double k, DDouble c) {
    double p1, p2, q1, q2;
    p1 = detail::two_prod(k, c.hi(), p2);
    q1 = detail::two_prod(k, c.lo(), q2);
    return ((((a - p1) - p2) - q1) - q2);
}

} // namespace

DDouble sqrt(DDouble a) {
    if (a.hi() == 0.0) return DDouble(0.0);
    if (a.hi() < 0.0) return DDouble(std::numeric_limits<double>::quiet_NaN());
    // One Newton step on 1/sqrt from the double seed doubles the digits.
    double x = 1.0 / std::sqrt(a.hi());
    double ax = a.hi() * x;
    return DDouble(ax) + (a - DDouble(ax) * ax).hi() * (x * 0.5);
}

DDouble floor(DDouble a) {
    double f = std::floor(a.hi());
    if (f == a.hi()) {
        double g = std::floor(a.lo());
        double e;
        double s = detail::two_sum(f, g, e);
        return DDouble(s, e);
    }
    return DDouble(f);
}

DDouble ceil(DDouble a) { return -floor(-a); }

DDouble round(DDouble a) { return floor(a + 0.5); }

DDouble fmod(DDouble a, DDouble b) {
    DDouble n = floor(a / b);
    return a - n * b;
}

DDouble exp(DDouble a) {
    if (a.hi() > 709.0) return DDouble(std::numeric_limits<double>::infinity());
    if (a.hi() < -709.0) return DDouble(0.0);
    if (a.hi() == 0.0 && a.lo() == 0.0) return DDouble(1.0);

    DDouble l2 = ddc::ln2();
    double m = std::round(a.hi() / l2.hi());
    DDouble r = ldexp(sub_int_mult(a, m, l2), -9); // |r| <= ln2/1024

    // expm1(r) by Taylor, then nine expm1 doublings.
    DDouble p = r;
    DDouble t = r;
    for (int k = 2; k <= 12; ++k) {
        t = t * r / static_cast<double>(k);
        p += t;
        if (std::abs(t.hi()) < 1e-40 * std::abs(p.hi())) break;
    }
    for (int i = 0; i < 9; ++i) p = p * p + ldexp(p, 1);
    return ldexp(DDouble(1.0) + p, static_cast<int>(m));
}

DDouble log(DDouble a) {
    if (a.hi() <= 0.0) {
        return DDouble(a.hi() == 0.0 ? -std::numeric_limits<double>::infinity()
                                     : std::numeric_limits<double>::quiet_NaN());
    }
    DDouble x(std::log(a.hi()));
    x = x + a / exp(x) - 1.0; // Newton: doubles the correct digits
    x = x + a / exp(x) - 1.0;
    return x;
}

DDouble log10(DDouble a) {
    static const DDouble ln10 = log(DDouble(10.0));
    return log(a) / ln10;
}

namespace {

DDouble sin_taylor(DDouble r) {
    if (r.hi() == 0.0) return DDouble(0.0);
    DDouble x2 = r * r;
    DDouble t = r, s = r;
    for (int k = 1; k < 40; ++k) {
        t = t * x2 / static_cast<double>(2 * k * (2 * k + 1));
        s = (k & 1) ? s - t : s + t;
        if (std::abs(t.hi()) < 1e-37 * std::abs(s.hi()) + 1e-300) break;
    }
    return s;
}

DDouble cos_taylor(DDouble r) {
    DDouble x2 = r * r;
    DDouble t(1.0), s(1.0);
    for (int k = 1; k < 40; ++k) {
        t = t * x2 / static_cast<double>((2 * k - 1) * 2 * k);
        s = (k & 1) ? s - t : s + t;
        if (std::abs(t.hi()) < 1e-37) break;
    }
    return s;
}

} // namespace

void sincos(DDouble a, DDouble& s, DDouble& c) {
    if (a.hi() == 0.0 && a.lo() == 0.0) {
        s = DDouble(0.0);
        c = DDouble(1.0);
        return;
    }
    DDouble twopi = ddc::two_pi();
    double z = std::round((a / twopi).hi());
    DDouble r = (z == 0.0) ? a : sub_int_mult(a, z, twopi);
    DDouble hp = ddc::half_pi();
    int q = static_cast<int>(std::round((r / hp).hi()));
    if (q != 0) r = sub_int_mult(r, static_cast<double>(q), hp);

    DDouble ss = sin_taylor(r);
    DDouble cc = cos_taylor(r);
    switch (((q % 4) + 4) % 4) {
        case 0: s = ss; c = cc; break;
        case 1: s = cc; c = -ss; break;
        case 2: s = -ss; c = -cc; break;
        default: s = -cc; c = ss; break;
    }
}

DDouble sin(DDouble a) {
    DDouble s, c;
    sincos(a, s, c);
    return s;
}

DDouble cos(DDouble a) {
    DDouble s, c;
    sincos(a, s, c);
    return c;
}

DDouble tan(DDouble a) {
    DDouble s, c;
    sincos(a, s, c);
    return s / c;
}

DDouble atan2(DDouble y, DDouble x) {
    if (y.hi() == 0.0 && y.lo() == 0.0) {
        if (x.hi() > 0.0) return DDouble(0.0);
        if (x.hi() < 0.0) return ddc::pi();
        return DDouble(0.0);
    }
    if (x.hi() == 0.0 && x.lo() == 0.0)
        return y.hi() > 0.0 ? ddc::half_pi() : -ddc::half_pi();

    DDouble r = hypot(x, y);
    DDouble xx = x / r, yy = y / r;
    DDouble z(std::atan2(y.hi(), x.hi()));
    DDouble s, c;
    for (int it = 0; it < 2; ++it) {
        sincos(z, s, c);
        if (std::abs(xx.hi()) > std::abs(yy.hi()))
            z = z + (yy - s) / c;
        else
            z = z - (xx - c) / s;
    }
    return z;
}

DDouble atan(DDouble a) { return atan2(a, DDouble(1.0)); }

DDouble hypot(DDouble x, DDouble y) {
    x = abs(x);
    y = abs(y);
    if (x.hi() < y.hi()) std::swap(x, y);
    if (x.hi() == 0.0) return DDouble(0.0);
    DDouble q = y / x;
    return x * sqrt(DDouble(1.0) + q * q);
}

DDouble sinh(DDouble a) {
    if (std::abs(a.hi()) < 0.1) {
        DDouble x2 = a * a;
        DDouble t = a, s = a;
        for (int k = 1; k < 20; ++k) {
            t = t * x2 / static_cast<double>(2 * k * (2 * k + 1));
            s += t;
            if (std::abs(t.hi()) < 1e-37 * std::abs(s.hi()) + 1e-300) break;
        }
        return s;
    }
    DDouble e = exp(a);
    return ldexp(e - DDouble(1.0) / e, -1);
}

DDouble cosh(DDouble a) {
    DDouble e = exp(a);
    return ldexp(e + DDouble(1.0) / e, -1);
}

DDouble tanh(DDouble a) {
    if (std::abs(a.hi()) > 19.0) {
        DDouble t = exp(ldexp(-abs(a), 1));
        DDouble v = DDouble(1.0) - ldexp(t, 1) / (DDouble(1.0) + t);
        return a.hi() > 0.0 ? v : -v;
    }
    if (std::abs(a.hi()) < 0.05) {
        DDouble s = sinh(a);
        return s / sqrt(DDouble(1.0) + s * s);
    }
    DDouble e2 = exp(ldexp(a, 1));
    return (e2 - 1.0) / (e2 + 1.0);
}

DDouble pow(DDouble a, int n) {
    if (n == 0) return DDouble(1.0);
    bool inv = n < 0;
    unsigned long m = inv ? -static_cast<long>(n) : n;
    DDouble r(1.0), b = a;
    while (m) {
        if (m & 1) r *= b;
        m >>= 1;
        if (m) b *= b;
    }
    return inv ? DDouble(1.0) / r : r;
}

DDouble pow(DDouble a, DDouble b) { return exp(b * log(a)); }

namespace ddc {

namespace {

// Tail sum_{k>=1} s^k / ((2k+1) q^{2k+1}) of atan(1/q) (s = -1) or
// atanh(1/q) (s = +1).  q^{2k+1} stays an exact dd integer below 2^106, so
// each term carries a single rounding and the additions round at tail
// magnitude.  The 1/q lead is left to the caller so it can be combined
// with other leads before rounding matters.
DDouble inv_odd_power_tail(int q, int sign) {
    DDouble qd(static_cast<double>(q));
    DDouble q2 = qd * qd;
    DDouble p = qd;
    DDouble tail(0.0);
    double sg = 1.0;
    for (int k = 1; k < 80; ++k) {
        p = p * q2;
        sg *= sign;
        DDouble term = DDouble(sg) / (p * static_cast<double>(2 * k + 1));
        tail += term;
        if (std::abs(term.hi()) < 1e-39) break;
    }
    return tail;
}

DDouble compute_pi() {
    // Machin: pi = 16 atan(1/5) - 4 atan(1/239), leads combined exactly
    DDouble lead = DDouble(16.0) / 5.0 - DDouble(4.0) / 239.0;
    return lead + (ldexp(inv_odd_power_tail(5, -1), 4) -
                   ldexp(inv_odd_power_tail(239, -1), 2));
}

DDouble compute_ln2() {
    // ln 2 = 2 atanh(1/3)
    return DDouble(2.0) / 3.0 + ldexp(inv_odd_power_tail(3, +1), 1);
}

DDouble compute_euler_gamma() {
    // gamma = H_N - ln N - 1/(2N) + sum_k B_{2k}/(2k N^{2k}),  N = 64
    const int N = 64;
    DDouble H(0.0);
    for (int k = N; k >= 1; --k) H += DDouble(1.0) / static_cast<double>(k);
    DDouble g = H - ln2() * 6.0 - DDouble(1.0) / (2.0 * N);
    static const double bnum[10] = {1, -1, 1, -1, 5, -691, 7, -3617, 43867, -174611};
    static const double bden[10] = {6, 30, 42, 30, 66, 2730, 6, 510, 798, 330};
    DDouble n2 = DDouble(1.0) / (static_cast<double>(N) * N);
    DDouble p = n2;
    for (int k = 1; k <= 10; ++k) {
        g += DDouble(bnum[k - 1]) / bden[k - 1] / (2.0 * k) * p;
        p *= n2;
    }
    return g;
}

DDouble compute_catalan() {
    // G = pi/8 log(2+sqrt 3) + 3/8 sum_{n>=0} 1/(binom(2n,n) (2n+1)^2)
    DDouble s(0.0), binom(1.0);
    for (int n = 0; n < 70; ++n) {
        DDouble term = DDouble(1.0) / (binom * static_cast<double>(2 * n + 1) * (2 * n + 1));
        s += term;
        if (std::abs(term.hi()) < 1e-38) break;
        binom = binom * (2.0 * (2 * n + 1)) / static_cast<double>(n + 1);
    }
    return ldexp(pi() * log(DDouble(2.0) + sqrt(DDouble(3.0))), -3) + ldexp(s * 3.0, -3);
}

} // namespace

DDouble pi() {
    static const DDouble v = compute_pi();
    return v;
}
DDouble two_pi() {
    static const DDouble v = ldexp(pi(), 1);
    return v;
}
DDouble half_pi() {
    static const DDouble v = ldexp(pi(), -1);
    return v;
}
DDouble quarter_pi() {
    static const DDouble v = ldexp(pi(), -2);
    return v;
}
DDouble ln2() {
    static const DDouble v = compute_ln2();
    return v;
}
DDouble euler_gamma() {
    static const DDouble v = compute_euler_gamma();
    return v;
}
DDouble catalan() {
    static const DDouble v = compute_catalan();
    return v;
}

} // namespace ddc

std::string to_string(DDouble a, int prec) {
    if (std::isnan(a.hi())) return "nan";
    if (std::isinf(a.hi())) return a.hi() > 0 ? "inf" : "-inf";
    prec = std::clamp(prec, 1, 36);
    if (a.hi() == 0.0) {
        std::string z = "0.";
        z.append(static_cast<size_t>(prec > 1 ? prec - 1 : 1), '0');
        return z + "e+00";
    }
    std::string out;
    DDouble x = a;
    if (x.hi() < 0.0) {
        out += '-';
        x = -x;
    }
    int e10 = static_cast<int>(std::floor(std::log10(x.hi())));
    x = x / pow(DDouble(10.0), e10);
    while (x.hi() >= 10.0) {
        x /= 10.0;
        ++e10;
    }
    while (x.hi() < 1.0) {
        x *= 10.0;
        --e10;
    }
    std::string digits;
    for (int i = 0; i <= prec; ++i) { // one guard digit for rounding
        int d = static_cast<int>(x.hi());
        d = std::clamp(d, 0, 9);
        digits += static_cast<char>('0' + d);
        x = (x - static_cast<double>(d)) * 10.0;
    }
    if (digits[static_cast<size_t>(prec)] >= '5') {
        int i = prec - 1;
        while (i >= 0 && digits[static_cast<size_t>(i)] == '9') {
            digits[static_cast<size_t>(i)] = '0';
            --i;
        }
        if (i < 0) {
            digits.insert(digits.begin(), '1');
            ++e10;
        } else {
            ++digits[static_cast<size_t>(i)];
        }
    }
    digits.resize(static_cast<size_t>(prec));
    out += digits[0];
    if (prec > 1) {
        out += '.';
        out += digits.substr(1);
    }
    char ebuf[16];
    std::snprintf(ebuf, sizeof ebuf, "e%+03d", e10);
    out += ebuf;
    return out;
}

DDouble dd_from_string(std::string_view sv) {
    size_t i = 0;
    bool neg = false;
    if (i < sv.size() && (sv[i] == '+' || sv[i] == '-')) {
        neg = sv[i] == '-';
        ++i;
    }
    DDouble acc(0.0);
    long frac = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < sv.size(); ++i) {
        char ch = sv[i];
        if (ch >= '0' && ch <= '9') {
            acc = acc * 10.0 + static_cast<double>(ch - '0');
            if (seen_dot) ++frac;
            seen_digit = true;
        } else if (ch == '.' && !seen_dot) {
            seen_dot = true;
        } else {
            break;
        }
    }
    if (!seen_digit) throw std::invalid_argument("dd_from_string: no digits");
    long e10 = -frac;
    if (i < sv.size() && (sv[i] == 'e' || sv[i] == 'E')) {
        e10 += std::strtol(sv.data() + i + 1, nullptr, 10);
    }
    DDouble r = acc * pow(DDouble(10.0), static_cast<int>(e10));
    return neg ? -r : r;
}

} // namespace hzeta
