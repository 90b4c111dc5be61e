#include <doctest.h>

#include <cmath>
#include <random>

#include "caloric/gauss_legendre.hpp"
#include "caloric/io_format.hpp"
#include "caloric/least_squares.hpp"
#include "caloric/rational.hpp"

using namespace caloric;

TEST_CASE("Gauss-Legendre rules integrate polynomials exactly") {
    // Independent oracle: monomial moments over [a, b] in closed form.
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ab(-2.0, 2.0);
    for (int n : {2, 5, 9, 16}) {
        const double a = ab(rng);
        const double b = a + 1.0 + std::abs(ab(rng));
        auto [xs, ws] = gauss_legendre_on(n, a, b);
        for (int k = 0; k <= 2 * n - 1; ++k) {
            double quad = 0.0;
            for (int i = 0; i < n; ++i) quad += ws[i] * std::pow(xs[i], k);
            const double exact = (std::pow(b, k + 1) - std::pow(a, k + 1)) / (k + 1);
            CHECK(quad == doctest::Approx(exact).epsilon(1e-12));
        }
    }
}

TEST_CASE("snap_to_rational recovers simple fractions and rejects noise") {
    CHECK(*snap_to_rational(1.0 / 3.0 + 3e-12, 1e-9, 1000000) == Rational(1, 3));
    CHECK(*snap_to_rational(-2.75, 1e-9, 1000000) == Rational(-11, 4));
    CHECK(*snap_to_rational(3.0, 1e-9, 1000000) == 3);
    CHECK(*snap_to_rational(1e-15, 1e-9, 1000000) == 0);
    // No small-denominator fraction sits within 1e-12 of this value.
    CHECK(!snap_to_rational(0.1234567890123, 1e-12, 1000).has_value());
}

TEST_CASE("rational round trips") {
    CHECK(parse_rational("22/7") == Rational(22, 7));
    CHECK(parse_rational("-3") == -3);
    Rational nine_sixths(-9, 6);
    nine_sixths.canonicalize();
    CHECK(format_rational(nine_sixths) == "-3/2");
    CHECK_THROWS_AS((void)parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_rational("a"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_rational("1.5"), std::invalid_argument);

    // Dyadic conversion is exact.
    const double v = 0.1;
    CHECK(to_double(rational_from_double(v)) == v);
}

TEST_CASE("least squares reproduces exact fits and flags rank deficiency") {
    // Quadratic through noise-free samples.
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    for (double x : {-1.0, -0.5, 0.0, 0.5, 1.0, 1.5}) {
        a.push_back({1.0, x, x * x});
        b.push_back(2.0 - x + 0.5 * x * x);
    }
    const auto fit = solve_least_squares(a, b);
    CHECK(fit.coefficients[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(fit.coefficients[1] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(fit.coefficients[2] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(fit.condition_estimate < 1e3);

    // Duplicate column: the condition estimate must explode.
    std::vector<std::vector<double>> bad;
    for (double x : {-1.0, 0.0, 1.0, 2.0}) bad.push_back({x, x});
    const auto rankdef = solve_least_squares(bad, {1.0, 2.0, 3.0, 4.0});
    CHECK(rankdef.condition_estimate > 1e12);
}

TEST_CASE("json writer escapes and formats deterministically") {
    JsonWriter w;
    w.field("name", std::string("line\n\"quoted\""))
        .field("value", 0.1)
        .field("count", std::size_t{3})
        .field("flag", false);
    const std::string s = w.str();
    CHECK(s.find("\"name\": \"line\\n\\\"quoted\\\"\"") != std::string::npos);
    CHECK(s.find("\"value\": 0.1000000000000000") != std::string::npos);
    CHECK(s.find("\"flag\": false") != std::string::npos);
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-0.5) == "-0.5");
}
