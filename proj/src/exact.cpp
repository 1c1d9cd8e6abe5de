// Copyright Contributors to the hzeta Project
// SPDX-License-Identifier: Apache-2.0

#include "hzeta/exact.hpp"

#include <mutex>

namespace hzeta {

void Rational::normalize() {
    if (den_ == 0) throw domain_error("Rational: zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}
Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational Rational::pow(int k) const {
    if (k == 0) return Rational(1);
    bool inv = k < 0;
    unsigned m = static_cast<unsigned>(inv ? -k : k);
    Rational base = *this, r(1);
    while (m) {
        if (m & 1) r *= base;
        m >>= 1;
        if (m) base *= base;
    }
    return inv ? Rational(1) / r : r;
}

double Rational::to_double() const {
    if (num_ == 0) return 0.0;
    BigInt an = num_ < 0 ? BigInt(-num_) : num_;
    long mn = static_cast<long>(boost::multiprecision::msb(an));
    long md = static_cast<long>(boost::multiprecision::msb(den_));
    double sign = num_ < 0 ? -1.0 : 1.0;
    if (mn < 960 && md < 960)
        return num_.convert_to<double>() / den_.convert_to<double>();
    // bring both operands near 160 bits; the ratio picks up the exponent gap
    long e = mn - md;
    if (e > 1023) return sign * std::numeric_limits<double>::infinity();
    if (e < -1074) return 0.0;
    long sn = std::max(0L, mn - 160), sd = std::max(0L, md - 160);
    BigInt n = an >> sn, d = den_ >> sd;
    return sign * std::ldexp(n.convert_to<double>() / d.convert_to<double>(),
                             static_cast<int>(sn - sd));
}

std::string Rational::str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

void RationalPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RationalPoly RationalPoly::monomial(int deg, const Rational& c) {
    if (c.is_zero() || deg < 0) return {};
    std::vector<Rational> v(static_cast<size_t>(deg) + 1);
    v.back() = c;
    return RationalPoly(std::move(v));
}

Rational RationalPoly::eval(const Rational& x) const {
    Rational r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

RationalPoly RationalPoly::derivative(int k) const {
    if (k <= 0) return *this;
    if (k > degree()) return {};
    RationalPoly d = *this;
    for (int j = 0; j < k; ++j) {
        std::vector<Rational> v;
        v.reserve(d.c_.size() - 1);
        for (size_t i = 1; i < d.c_.size(); ++i) v.push_back(d.c_[i] * Rational(static_cast<long>(i)));
        d = RationalPoly(std::move(v));
        if (d.is_zero()) break;
    }
    return d;
}

RationalPoly RationalPoly::compose_affine(const Rational& a, const Rational& b) const {
    // Horner in the outer polynomial with inner (a x + b)
    RationalPoly result;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        // result = result * (a x + b) + c
        std::vector<Rational> v(result.c_.size() + 1);
        for (size_t i = 0; i < result.c_.size(); ++i) {
            v[i + 1] += result.c_[i] * a;
            v[i] += result.c_[i] * b;
        }
        RationalPoly next(std::move(v));
        if (!it->is_zero()) {
            std::vector<Rational> w = next.c_;
            if (w.empty()) w.resize(1);
            w[0] += *it;
            next = RationalPoly(std::move(w));
        }
        result = std::move(next);
    }
    return result;
}

RationalPoly operator+(const RationalPoly& p, const RationalPoly& q) {
    std::vector<Rational> v(std::max(p.c_.size(), q.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) {
        if (i < p.c_.size()) v[i] += p.c_[i];
        if (i < q.c_.size()) v[i] += q.c_[i];
    }
    return RationalPoly(std::move(v));
}

RationalPoly operator-(const RationalPoly& p, const RationalPoly& q) {
    return p + q.scaled(Rational(-1));
}

RationalPoly RationalPoly::scaled(const Rational& s) const {
    std::vector<Rational> v = c_;
    for (auto& c : v) c *= s;
    return RationalPoly(std::move(v));
}

std::string RationalPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        Rational c = coeff(k);
        if (c.is_zero()) continue;
        if (!out.empty()) out += c.sign() > 0 ? " + " : " - ";
        else if (c.sign() < 0) out += "-";
        Rational a = c.sign() < 0 ? -c : c;
        std::string cs = a.str();
        if (k == 0) {
            out += cs;
        } else {
            if (cs != "1") out += cs + " ";
            out += "x";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational>& bernoulli_table() {
    static std::vector<Rational> t{Rational(1)};
    return t;
}

} // namespace

Rational bernoulli_number(int n) {
    if (n < 0) throw domain_error("bernoulli_number: n must be >= 0");
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    auto& t = bernoulli_table();
    // defining recurrence: sum_{k=0}^{n} C(n+1,k) B_k = 0  (n >= 1)
    while (static_cast<int>(t.size()) <= n) {
        int m = static_cast<int>(t.size());
        if (m > 2 && (m & 1)) {
            t.emplace_back(0);
            continue;
        }
        Rational s;
        for (int k = 0; k < m; ++k)
            s += Rational(binomial(static_cast<unsigned>(m) + 1, static_cast<unsigned>(k))) * t[static_cast<size_t>(k)];
        t.push_back(-s / Rational(static_cast<long>(m) + 1));
    }
    return t[static_cast<size_t>(n)];
}

RationalPoly bernoulli_polynomial(int n) {
    if (n < 0) throw domain_error("bernoulli_polynomial: n must be >= 0");
    // B_n(x) = sum_k C(n,k) B_{n-k} x^k
    std::vector<Rational> v(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        v[static_cast<size_t>(k)] =
            Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k))) * bernoulli_number(n - k);
    return RationalPoly(std::move(v));
}

RationalPoly euler_polynomial(int n) {
    if (n < 0) throw domain_error("euler_polynomial: n must be >= 0");
    // E_n(x) = 2/(n+1) (B_{n+1}(x) - 2^{n+1} B_{n+1}(x/2))
    RationalPoly b = bernoulli_polynomial(n + 1);
    RationalPoly half = b.compose_affine(Rational::of(1, 2), Rational(0));
    Rational two_pow = Rational(2).pow(n + 1);
    return (b - half.scaled(two_pow)).scaled(Rational(2) / Rational(static_cast<long>(n) + 1));
}

Rational zeta_even_rational(int n) {
    if (n < 0) throw domain_error("zeta_even_rational: n must be >= 0");
    // r_n = (-1)^{n+1} B_{2n} 2^{2n-1} / (2n)!   (r_0 = -1/2)
    Rational r = bernoulli_number(2 * n) * Rational(2).pow(2 * n - 1) /
                 Rational(factorial(static_cast<unsigned>(2 * n)));
    return (n % 2 == 0) ? -r : r;
}

bool is_antisymmetric(const RationalPoly& p) {
    RationalPoly sum = p.compose_affine(Rational(-1), Rational(1)) + p;
    return sum.is_zero();
}

Rational c_coefficient(const RationalPoly& p, int k) {
    int kmax = (p.degree() + 1) / 2;
    if (k < 1 || k > kmax)
        throw domain_error("c_coefficient: k out of range 1 <= k <= floor((deg+1)/2)");
    RationalPoly d = p.derivative(2 * k - 1);
    Rational weight = Rational(1) - Rational(1) / Rational(2).pow(2 * k + 1);
    return weight * (d.eval(Rational(1)) + d.eval(Rational(0)));
}

std::vector<PiRational> antisymmetric_bernoulli_decomposition(const RationalPoly& p) {
    if (!is_antisymmetric(p))
        throw domain_error("antisymmetric_bernoulli_decomposition: P(1-x) != -P(x)");
    if (p.is_zero()) return {};
    int deg = p.degree();
    if (deg % 2 == 0)
        throw domain_error("antisymmetric_bernoulli_decomposition: degree must be odd");
    int m = (deg + 1) / 2;
    std::vector<PiRational> lambda(static_cast<size_t>(m));
    RationalPoly rem = p;
    // B_{2k-1} is monic, so elimination by descending degree is exact.
    for (int k = m; k >= 1; --k) {
        Rational lead = rem.coeff(2 * k - 1);
        lambda[static_cast<size_t>(k) - 1] = PiRational{lead, 0};
        if (!lead.is_zero()) rem = rem - bernoulli_polynomial(2 * k - 1).scaled(lead);
    }
    if (!rem.is_zero())
        throw domain_error("antisymmetric_bernoulli_decomposition: residual not zero");
    return lambda;
}

} // namespace hzeta
