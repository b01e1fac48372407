#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include <doctest.h>

#include "mgc/errors.hpp"
#include "mgc/expr.hpp"

using namespace mgc;

TEST_CASE("parsing basics") {
    CHECK(parse("sinh(u)").str() == "sinh(u)");
    CHECK(parse("2^3^2").eval(0.7) == 512.0); // right-associative, constant-folded
    CHECK(parse("sqrt(2)*cos(u)").eval(0.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(parse("pi").eval(0.0) == doctest::Approx(3.141592653589793).epsilon(1e-16));
    CHECK(parse("e").eval(0.0) == doctest::Approx(2.718281828459045).epsilon(1e-16));
    CHECK(parse("u^2/4", "u").eval(3.0) == doctest::Approx(2.25).epsilon(1e-15));
    CHECK(parse("s+1", "s").eval(2.0) == 3.0);
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse(""), Error);
    CHECK_THROWS_WITH_AS(parse("2u"), doctest::Contains("implicit multiplication"), Error);
    CHECK_THROWS_WITH_AS(parse("1+*2"), doctest::Contains("at byte 2"), Error);
    CHECK_THROWS_WITH_AS(parse("sin(u"), doctest::Contains("expected ')'"), Error);
    try {
        parse("v+1");
        FAIL("expected unknown identifier");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnknownIdentifier);
    }
    // "s" is not the parameter unless declared so
    CHECK_THROWS_AS(parse("s+1", "u"), Error);
}

TEST_CASE("jets of polynomials are exact") {
    const Jet j = parse("u^2").eval_jet(3.0, 5);
    CHECK(j.value() == 9.0);
    CHECK(j.derivative(1) == 6.0);
    CHECK(j.derivative(2) == 2.0);
    CHECK(j.derivative(3) == 0.0);
    CHECK(j.derivative(5) == 0.0);
}

TEST_CASE("maclaurin pattern of sinh") {
    const Jet j = parse("sinh(u)").eval_jet(0.0, 5);
    for (int k = 0; k <= 5; ++k) CHECK(j.derivative(k) == (k % 2 == 0 ? 0.0 : 1.0));
}

TEST_CASE("product rule") {
    const Jet j = parse("sin(u)*u").eval_jet(1.0, 2);
    CHECK(j.derivative(1) ==
          doctest::Approx(std::sin(1.0) + std::cos(1.0)).epsilon(1e-15));
}

TEST_CASE("random polynomials match convolution algebra") {
    // Oracle: polynomial coefficient arithmetic differentiated symbolically.
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> coeff(-3.0, 3.0);
    std::uniform_real_distribution<double> pt(-2.0, 2.0);

    for (int it = 0; it < 200; ++it) {
        double a[6], b[6];
        for (double& x : a) x = coeff(rng);
        for (double& x : b) x = coeff(rng);
        // p(u) = (a0 + a1 u + a2 u^2) * (b0 + b1 u + b2 u^2) + a3 u^3
        std::vector<double> p(6, 0.0);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) p[i + j] += a[i] * b[j];
        p[3] += a[3];

        auto lit = [](double v) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "(%.17g)", v);
            return std::string(buf);
        };
        std::string text = "(" + lit(a[0]) + "+" + lit(a[1]) + "*u+" + lit(a[2]) +
                           "*u^2)*(" + lit(b[0]) + "+" + lit(b[1]) + "*u+" + lit(b[2]) +
                           "*u^2)+" + lit(a[3]) + "*u^3";
        const double u = pt(rng);
        const Jet j = parse(text).eval_jet(u, 5);

        for (int k = 0; k <= 5; ++k) {
            // k-th derivative of the expanded polynomial at u
            double want = 0.0;
            for (int n = k; n < 6; ++n) {
                double c = p[n];
                for (int m = 0; m < k; ++m) c *= (n - m);
                want += c * std::pow(u, n - k);
            }
            CHECK(j.derivative(k) == doctest::Approx(want).epsilon(1e-10));
        }
    }
}

TEST_CASE("elementary function jets agree with finite differences") {
    const char* exprs[] = {"sin(u)",  "cos(u)", "sinh(u)", "cosh(u)", "tan(u)",
                           "tanh(u)", "exp(u)", "log(u)",  "sqrt(u)", "abs(u)"};
    std::mt19937_64 rng(202);
    std::uniform_real_distribution<double> pt(0.2, 1.2); // safe domain for all of them

    for (const char* text : exprs) {
        const Expr e = parse(text);
        for (int it = 0; it < 20; ++it) {
            const double u = pt(rng);
            const double h = 1e-5;
            for (int k = 1; k <= 3; ++k) {
                const double dplus = e.eval_jet(u + h, 5).derivative(k - 1);
                const double dminus = e.eval_jet(u - h, 5).derivative(k - 1);
                const double fd = (dplus - dminus) / (2 * h);
                const double jet = e.eval_jet(u, 5).derivative(k);
                CHECK(jet == doctest::Approx(fd).epsilon(1e-6));
            }
        }
    }
}

TEST_CASE("printer round trip is a fixed point") {
    const char* samples[] = {
        "sinh(u)",      "2^3^2",         "sqrt(2)*cos(u)", "u^2/4",
        "-u^2",         "(-u)^2",        "1-(2-u)",        "u/(2*u)",
        "2*(-u)",       "u^-2",          "exp(u*log(u))",  "abs(u-1)+tan(u)/tanh(u)",
        "-(u+1)",       "u^(1/2)",       "1/2/u",          "cos(u)^2+sin(u)^2",
    };
    for (const char* text : samples) {
        const std::string once = parse(text).str();
        const std::string twice = parse(once).str();
        CHECK(once == twice);
        // And the printed forms evaluate identically.
        const double u = 0.873;
        CHECK(parse(text).eval(u) == doctest::Approx(parse(once).eval(u)).epsilon(1e-15));
    }
}

TEST_CASE("variable exponent rewrites through exp/log") {
    const Expr e = parse("u^u");
    CHECK(e.eval(2.0) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(e.str() == "exp(u*log(u))");
    // derivative of u^u at 2: 4 (log 2 + 1)
    CHECK(e.eval_jet(2.0, 1).derivative(1) ==
          doctest::Approx(4.0 * (std::log(2.0) + 1.0)).epsilon(1e-14));
}

TEST_CASE("domain errors name the failing subexpression") {
    CHECK_THROWS_WITH_AS(parse("log(u)").eval(-1.0), doctest::Contains("log("), Error);
    CHECK_THROWS_WITH_AS(parse("sqrt(u-2)").eval(0.0), doctest::Contains("sqrt("), Error);
    CHECK_THROWS_WITH_AS(parse("1/(u-1)").eval(1.0), doctest::Contains("division by zero"), Error);
    try {
        parse("sqrt(u)").eval_jet(-0.5, 2);
        FAIL("expected domain error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DomainError);
    }
}
