// Copyright Contributors to the hzeta Project
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hzeta/dd.hpp"

#include <cmath>
#include <random>

using hzeta::DDouble;
using hzeta::dd_from_string;

namespace {

// |a-b| measured against dd working precision, relative to scale.
void check_close(DDouble a, std::string_view expect40, double tol = 5e-31) {
    DDouble b = dd_from_string(expect40);
    double scale = std::max({std::abs(b.hi()), std::abs(a.hi()), 1e-300});
    CAPTURE(a.hi());
    CAPTURE(expect40);
    CHECK(std::abs((a - b).hi()) / scale <= tol);
}

} // namespace

TEST_CASE("dd basic arithmetic is exact where it should be") {
    DDouble x = DDouble(1.0) / 3.0;
    DDouble y = x * 3.0 - 1.0;
    CHECK(std::abs(y.hi()) < 1e-32);

    // (1e20 + 1) - 1e20 == 1 survives in dd
    DDouble big(1e20);
    CHECK(((big + 1.0) - big).hi() == 1.0);

    // two_prod via fma gives exact products
    DDouble p = DDouble(1.0 + std::ldexp(1.0, -30)) * (1.0 - std::ldexp(1.0, -30));
    DDouble expect = DDouble(1.0) - DDouble(std::ldexp(1.0, -60));
    CHECK((p - expect).hi() == 0.0);
}

TEST_CASE("dd constants") {
    check_close(hzeta::ddc::pi(), "3.141592653589793238462643383279502884197");
    check_close(hzeta::ddc::ln2(), "0.6931471805599453094172321214581765680755");
    check_close(hzeta::ddc::euler_gamma(), "0.5772156649015328606065120900824024310422");
    check_close(hzeta::ddc::catalan(), "0.9159655941772190150546035149323841107741");
}

TEST_CASE("dd transcendentals vs frozen references") {
    check_close(exp(dd_from_string("1.234")), "3.434941860800759968250342895759478734942");
    check_close(exp(dd_from_string("-25.5")), "8.423463754468647405876465262881571277969e-12");
    check_close(log(dd_from_string("3.75")), "1.321755839982319447161540327232360208022");
    check_close(log(dd_from_string("1e-7")), "-16.11809565095831978812594018279054945321");
    check_close(sin(dd_from_string("1.1")), "0.8912073600614353399518025778717035383189");
    // large arguments lose ~|a|/pi ulps of pi to range reduction
    check_close(cos(dd_from_string("20.25")), "0.1695295091556584560209934419912221150085", 2e-30);
    check_close(sin(dd_from_string("-88.7")), "-0.6708880607981816317297462377134524302325", 2e-30);
    check_close(atan2(dd_from_string("1.25"), dd_from_string("-0.5")),
                "1.951302703907261505534909608450184546596");
    check_close(tanh(dd_from_string("0.75")), "0.6351489523872873192144343573124964950925");
    check_close(tanh(dd_from_string("0.001")), "0.0009999996666667999999460317679012257046693");
    check_close(cosh(dd_from_string("3.25")), "12.91455706251239204948350375232240900996");
    check_close(sqrt(DDouble(2.0)), "1.41421356237309504880168872420969807857");
    check_close(pow(dd_from_string("3.7"), dd_from_string("-2.25")),
                "0.05266791437639254642868934832704545076097");
}

TEST_CASE("dd function identities on random inputs") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> U(-30.0, 30.0);
    for (int i = 0; i < 200; ++i) {
        DDouble x(U(rng));
        DDouble s, c;
        sincos(x, s, c);
        CHECK(std::abs((s * s + c * c - 1.0).hi()) < 1e-30);
        if (std::abs(x.hi()) < 20.0) {
            DDouble e = exp(x);
            CHECK(std::abs((log(e) - x).hi()) < 1e-29 * (1.0 + std::abs(x.hi())));
            DDouble sh = sinh(x), ch = cosh(x);
            CHECK(std::abs((ch * ch - sh * sh - 1.0).hi()) < 1e-28 * ch.hi() * ch.hi());
            CHECK(std::abs((sh / ch - tanh(x)).hi()) < 1e-30);
        }
    }
    for (int i = 0; i < 100; ++i) {
        DDouble y(U(rng)), x(U(rng));
        DDouble th = atan2(y, x);
        DDouble s, c;
        sincos(th, s, c);
        DDouble r = hypot(x, y);
        CHECK(std::abs((r * s - y).hi()) < 1e-29 * (std::abs(y.hi()) + r.hi()));
        CHECK(std::abs((r * c - x).hi()) < 1e-29 * (std::abs(x.hi()) + r.hi()));
    }
}

TEST_CASE("dd floor and integer powers") {
    CHECK(floor(dd_from_string("2.999999999999999999999999")).hi() == 2.0);
    CHECK(floor(DDouble(3.0)).hi() == 3.0);
    CHECK(floor(dd_from_string("-2.5")).hi() == -3.0);
    check_close(pow(DDouble(3.0), 7), "2187");
    check_close(pow(DDouble(2.0), -10), "0.0009765625");
}

TEST_CASE("dd string round trip") {
    DDouble pi = hzeta::ddc::pi();
    DDouble back = dd_from_string(hzeta::to_string(pi, 34));
    CHECK(std::abs((back - pi).hi()) < 1e-31);
    CHECK(hzeta::to_string(DDouble(1.0), 5) == "1.0000e+00");
    CHECK(hzeta::to_string(DDouble(-0.5), 3) == "-5.00e-01");
    CHECK(hzeta::to_string(DDouble(0.0), 3) == "0.00e+00");
    // rounding carry propagates
    CHECK(hzeta::to_string(dd_from_string("9.9999"), 4) == "1.000e+01");
}
