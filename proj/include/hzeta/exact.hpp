// Copyright Contributors to the hzeta Project
// SPDX-License-Identifier: Apache-2.0

#ifndef HZETA_EXACT_HPP
#define HZETA_EXACT_HPP

#include "hzeta/errors.hpp"
#include "hzeta/real.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace hzeta {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always normalized: den > 0, gcd(|num|, den) = 1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d);

    static Rational of(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }

    Rational pow(int k) const;

    double to_double() const;
    template <class R>
    R to_real() const {
        if constexpr (std::is_same_v<R, double>) {
            return to_double();
        } else {
            return Real<R>::parse(num_.str()) / Real<R>::parse(den_.str());
        }
    }

    std::string str() const;

private:
    BigInt num_, den_;
    void normalize();
};

BigInt binomial(unsigned n, unsigned k);
BigInt factorial(unsigned n);

/// Dense polynomial over Rational, coefficients in ascending degree,
/// no trailing zero coefficient (zero polynomial has empty storage).
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coeffs);
    static RationalPoly monomial(int deg, const Rational& c = Rational(1));

    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(int k) const { return k >= 0 && k <= degree() ? c_[static_cast<size_t>(k)] : Rational(); }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }

    Rational eval(const Rational& x) const;
    template <class R>
    std::vector<R> real_coeffs() const {
        std::vector<R> v;
        v.reserve(c_.size());
        for (const auto& c : c_) v.push_back(c.to_real<R>());
        return v;
    }

    /// k-th derivative; k > degree gives the zero polynomial.
    RationalPoly derivative(int k = 1) const;

    /// P(a x + b)
    RationalPoly compose_affine(const Rational& a, const Rational& b) const;

    friend RationalPoly operator+(const RationalPoly& p, const RationalPoly& q);
    friend RationalPoly operator-(const RationalPoly& p, const RationalPoly& q);
    RationalPoly scaled(const Rational& s) const;

    friend bool operator==(const RationalPoly& p, const RationalPoly& q) { return p.c_ == q.c_; }

    std::string str() const;

private:
    std::vector<Rational> c_;
    void trim();
};

/// Exact Bernoulli number B_n (B_1 = -1/2), memoized.
Rational bernoulli_number(int n);

/// Exact Bernoulli polynomial B_n(x).
RationalPoly bernoulli_polynomial(int n);

/// Exact Euler polynomial E_n(x).
RationalPoly euler_polynomial(int n);

/// r_n with zeta(2n) = r_n pi^{2n}; r_0 = -1/2 by the zeta(0) convention.
Rational zeta_even_rational(int n);

/// Exact check of P(1-x) = -P(x).
bool is_antisymmetric(const RationalPoly& p);

/// c_k(P) = (1 - 2^{-(2k+1)}) (P^{(2k-1)}(1) + P^{(2k-1)}(0)),
/// defined for 1 <= k <= floor((deg P + 1)/2).
Rational c_coefficient(const RationalPoly& p, int k);

/// Exact rational scaled by a power of pi.
struct PiRational {
    Rational coef;
    int pi_power = 0;

    template <class R>
    R to_real() const {
        using std::pow;
        R v = coef.to_real<R>();
        if (pi_power != 0) v = v * pow(Real<R>::pi(), pi_power);
        return v;
    }
    friend bool operator==(const PiRational& a, const PiRational& b) {
        return a.coef == b.coef && a.pi_power == b.pi_power;
    }
};

/// Coefficients lambda_k with P = sum_k lambda_k B_{2k-1}(x), solved exactly
/// (triangular in descending degree).  Requires an antisymmetric P of odd
/// degree; the k-th entry of the result multiplies B_{2k-1}.
std::vector<PiRational> antisymmetric_bernoulli_decomposition(const RationalPoly& p);

} // namespace hzeta

#endif // HZETA_EXACT_HPP
