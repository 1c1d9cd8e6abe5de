// Copyright Contributors to the hzeta Project
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hzeta/exact.hpp"

#include <random>

using namespace hzeta;

TEST_CASE("rational normalization and arithmetic") {
    Rational a = Rational::of(6, -8);
    CHECK(a.num() == -3);
    CHECK(a.den() == 4);
    CHECK((Rational::of(1, 3) + Rational::of(1, 6)) == Rational::of(1, 2));
    CHECK((Rational::of(2, 3) * Rational::of(9, 4)) == Rational::of(3, 2));
    CHECK((Rational::of(1, 7) / Rational::of(2, 7)) == Rational::of(1, 2));
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), domain_error);
    CHECK(Rational::of(-22, 7).str() == "-22/7");
    CHECK(Rational::of(1, 3).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(std::abs(Rational::of(1, 3).to_real<DDouble>().hi() - 1.0 / 3.0) < 1e-16);
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli_number(0) == Rational(1));
    CHECK(bernoulli_number(1) == Rational::of(-1, 2));
    CHECK(bernoulli_number(2) == Rational::of(1, 6));
    CHECK(bernoulli_number(3) == Rational(0));
    CHECK(bernoulli_number(4) == Rational::of(-1, 30));
    CHECK(bernoulli_number(12) == Rational::of(-691, 2730));

    // defining recurrence holds exactly up to n = 40
    for (int n = 1; n <= 40; ++n) {
        Rational s;
        for (int k = 0; k <= n; ++k)
            s += Rational(binomial(static_cast<unsigned>(n) + 1, static_cast<unsigned>(k))) *
                 bernoulli_number(k);
        CHECK(s.is_zero());
    }
}

TEST_CASE("bernoulli polynomials") {
    RationalPoly b1 = bernoulli_polynomial(1);
    CHECK(b1.coeff(0) == Rational::of(-1, 2));
    CHECK(b1.coeff(1) == Rational(1));

    CHECK(bernoulli_polynomial(2).eval(Rational::of(1, 2)) == Rational::of(-1, 12));

    for (int n = 0; n <= 12; ++n) {
        RationalPoly b = bernoulli_polynomial(n);
        if (n != 1) CHECK(b.eval(Rational(0)) == bernoulli_number(n));
        // B_n(1/2) = (2^{1-n} - 1) B_n
        Rational lhs = b.eval(Rational::of(1, 2));
        Rational rhs = (Rational(2).pow(1 - n) - Rational(1)) * bernoulli_number(n);
        CHECK(lhs == rhs);
        // B_n(x+1) - B_n(x) = n x^{n-1}
        if (n >= 1) {
            RationalPoly diff = b.compose_affine(Rational(1), Rational(1)) - b;
            CHECK(diff == RationalPoly::monomial(n - 1, Rational(n)));
        }
        // Appell: B_n' = n B_{n-1}
        if (n >= 1)
            CHECK(b.derivative(1) == bernoulli_polynomial(n - 1).scaled(Rational(n)));
    }
}

TEST_CASE("euler polynomials") {
    RationalPoly e1 = euler_polynomial(1);
    CHECK(e1.coeff(0) == Rational::of(-1, 2));
    CHECK(e1.coeff(1) == Rational(1));

    for (int n = 0; n <= 11; ++n) {
        RationalPoly e = euler_polynomial(n);
        // E_n(x+1) + E_n(x) = 2 x^n
        RationalPoly sum = e.compose_affine(Rational(1), Rational(1)) + e;
        CHECK(sum == RationalPoly::monomial(n, Rational(2)));
    }

    // E_{2m-1}(0) = -2 (2^{2m} - 1) B_{2m} / (2m)
    for (int m = 1; m <= 5; ++m) {
        Rational lhs = euler_polynomial(2 * m - 1).eval(Rational(0));
        Rational rhs = Rational(-2) * (Rational(2).pow(2 * m) - Rational(1)) *
                       bernoulli_number(2 * m) / Rational(2 * m);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("derivative edge cases") {
    RationalPoly x2 = RationalPoly::monomial(2);
    CHECK(x2.derivative(1) == RationalPoly::monomial(1, Rational(2)));
    CHECK(x2.derivative(3).is_zero());
    CHECK(bernoulli_polynomial(3).derivative(1) ==
          bernoulli_polynomial(2).scaled(Rational(3)));
}

TEST_CASE("zeta even rationals") {
    CHECK(zeta_even_rational(0) == Rational::of(-1, 2));
    CHECK(zeta_even_rational(1) == Rational::of(1, 6));
    CHECK(zeta_even_rational(2) == Rational::of(1, 90));
    CHECK(zeta_even_rational(3) == Rational::of(1, 945));
    CHECK(zeta_even_rational(4) == Rational::of(1, 9450));
}

TEST_CASE("antisymmetry checks") {
    CHECK(is_antisymmetric(bernoulli_polynomial(3)));
    CHECK(is_antisymmetric(bernoulli_polynomial(9)));
    CHECK(is_antisymmetric(euler_polynomial(1)));
    CHECK(is_antisymmetric(euler_polynomial(7)));
    CHECK_FALSE(is_antisymmetric(RationalPoly::monomial(2)));
    CHECK_FALSE(is_antisymmetric(bernoulli_polynomial(2)));
}

TEST_CASE("c_coefficient") {
    // P = 2x - 1: P' = 2 at both ends, c_1 = (1 - 1/8) * 4 = 7/2
    RationalPoly p(std::vector<Rational>{Rational(-1), Rational(2)});
    CHECK(c_coefficient(p, 1) == Rational::of(7, 2));
    // P = B_1: P' = 1, c_1 = 7/4
    CHECK(c_coefficient(bernoulli_polynomial(1), 1) == Rational::of(7, 4));
    CHECK_THROWS_AS(c_coefficient(RationalPoly::monomial(2), 2), domain_error);
}

TEST_CASE("antisymmetric decomposition in the odd Bernoulli basis") {
    // basis elements decompose trivially
    auto lam = antisymmetric_bernoulli_decomposition(bernoulli_polynomial(3));
    REQUIRE(lam.size() == 2);
    CHECK(lam[0].coef.is_zero());
    CHECK(lam[1] == PiRational{Rational(1), 0});

    auto lam1 = antisymmetric_bernoulli_decomposition(euler_polynomial(1));
    REQUIRE(lam1.size() == 1);
    CHECK(lam1[0] == PiRational{Rational(1), 0});

    // E_3 = B_3 - (1/2) B_1
    auto lam3 = antisymmetric_bernoulli_decomposition(euler_polynomial(3));
    REQUIRE(lam3.size() == 2);
    CHECK(lam3[0].coef == Rational::of(-1, 2));
    CHECK(lam3[1].coef == Rational(1));

    CHECK_THROWS_AS(antisymmetric_bernoulli_decomposition(RationalPoly::monomial(2)),
                    domain_error);

    // reconstruction is exact for every antisymmetric polynomial up to degree 9,
    // including random combinations from the basis
    std::mt19937 rng(424242);
    std::uniform_int_distribution<long> coef(-12, 12);
    for (int trial = 0; trial < 24; ++trial) {
        RationalPoly p;
        for (int k = 1; k <= 5; ++k) {
            long c = coef(rng);
            if (c != 0)
                p = p + bernoulli_polynomial(2 * k - 1).scaled(Rational::of(c, 1 + (trial % 3)));
        }
        if (p.is_zero()) continue;
        REQUIRE(is_antisymmetric(p));
        auto l = antisymmetric_bernoulli_decomposition(p);
        RationalPoly back;
        for (size_t k = 0; k < l.size(); ++k) {
            CHECK(l[k].pi_power == 0);
            back = back + bernoulli_polynomial(2 * static_cast<int>(k) + 1).scaled(l[k].coef);
        }
        CHECK(back == p);
    }
}
