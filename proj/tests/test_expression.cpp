#include <doctest.h>

#include <cmath>
#include <numbers>

#include "caloric/expression.hpp"
#include "caloric/kernels.hpp"

using namespace caloric;

TEST_CASE("expression evaluates the comparator library") {
    const SpaceTimePoint z{{0.4}, 0.3};

    CHECK(Expression::parse("x^2 + 2*t", 1)(z) == doctest::Approx(0.4 * 0.4 + 0.6));
    CHECK(Expression::parse("x^3 + 6*x*t", 1)(z) ==
          doctest::Approx(0.4 * 0.4 * 0.4 + 6.0 * 0.4 * 0.3));
    CHECK(Expression::parse("exp(t)*cosh(x)", 1)(z) ==
          doctest::Approx(std::exp(0.3) * std::cosh(0.4)));
    CHECK(Expression::parse("abs(x) - 1/2", 1)(z) == doctest::Approx(-0.1));
    CHECK(Expression::parse("pi", 1)(z) == doctest::Approx(std::numbers::pi));

    // Heat kernel with pole at (0, -5), caloric above the pole.
    const Expression gamma =
        Expression::parse("(4*pi*(t+5))^(-1/2) * exp(-x^2 / (4*(t+5)))", 1);
    CHECK(gamma(z) == doctest::Approx(gw_kernel(z - SpaceTimePoint{{0.0}, -5.0})).epsilon(1e-12));
}

TEST_CASE("expression handles precedence and unary signs") {
    const SpaceTimePoint z{{2.0}, 3.0};
    CHECK(Expression::parse("2+3*4", 1)(z) == 14.0);
    CHECK(Expression::parse("-x^2", 1)(z) == -4.0);      // unary minus binds after the power
    CHECK(Expression::parse("(-x)^2", 1)(z) == 4.0);
    CHECK(Expression::parse("2^3^1", 1)(z) == 8.0);
    CHECK(Expression::parse("2^-1", 1)(z) == 0.5);
    CHECK(Expression::parse("1 - 2 - 3", 1)(z) == -4.0);
    CHECK(Expression::parse("12/4/3", 1)(z) == 1.0);
}

TEST_CASE("expression supports multiple spatial variables") {
    const SpaceTimePoint z{{1.0, 2.0, 3.0}, 4.0};
    CHECK(Expression::parse("x1 + 2*x2 + 3*x3 + t", 3)(z) == 18.0);
    CHECK_THROWS_AS((void)Expression::parse("x4", 3), ExpressionError);
    CHECK_THROWS_AS((void)Expression::parse("x2", 1), ExpressionError);
}

TEST_CASE("expression errors carry positions") {
    CHECK_THROWS_AS((void)Expression::parse("", 1), ExpressionError);
    CHECK_THROWS_AS((void)Expression::parse("exp", 1), ExpressionError);
    CHECK_THROWS_AS((void)Expression::parse("(x", 1), ExpressionError);
    CHECK_THROWS_AS((void)Expression::parse("x +", 1), ExpressionError);
    CHECK_THROWS_AS((void)Expression::parse("foo(x)", 1), ExpressionError);
    CHECK_THROWS_AS((void)Expression::parse("1 2", 1), ExpressionError);
    try {
        (void)Expression::parse("x + bad", 1);
    } catch (const ExpressionError& e) {
        CHECK(e.position == 4);
    }
}
