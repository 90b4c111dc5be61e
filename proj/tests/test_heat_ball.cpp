#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "caloric/correction.hpp"
#include "caloric/heat_ball.hpp"
#include "caloric/kernels.hpp"

using namespace caloric;

TEST_CASE("section radius solves the defining inequality") {
    const double r = 0.8;
    SUBCASE("vanishes at both ends") {
        CHECK(heat_ball_section_radius(1e-12, r, 1) < 1e-4);
        CHECK(heat_ball_section_radius(r * (1.0 - 1e-12), r, 1) < 1e-4);
    }
    SUBCASE("maximal section at s = r/e") {
        const double s_star = r / std::numbers::e;
        CHECK(heat_ball_section_radius(s_star, r, 2) ==
              doctest::Approx(std::sqrt(2.0 * 2.0 * r / std::numbers::e)));
        CHECK(heat_ball_section_radius(s_star, r, 2) > heat_ball_section_radius(s_star * 0.9, r, 2));
        CHECK(heat_ball_section_radius(s_star, r, 2) > heat_ball_section_radius(s_star * 1.1, r, 2));
    }
    SUBCASE("rejects depths outside (0, r)") {
        CHECK_THROWS_AS((void)heat_ball_section_radius(0.0, r, 1), std::invalid_argument);
        CHECK_THROWS_AS((void)heat_ball_section_radius(r, r, 1), std::invalid_argument);
        CHECK_THROWS_AS((void)heat_ball_section_radius(-0.1, r, 1), std::invalid_argument);
    }
}

TEST_CASE("quadrature nodes lie strictly inside the heat ball with positive weights") {
    for (std::size_t n = 1; n <= 3; ++n) {
        const SpaceTimePoint pole(std::vector<double>(n, 0.25), 1.5);
        const double r = 0.6;
        QuadratureResolution res;
        if (n == 3) {
            res.depth_levels = 12;
            res.radial_order = 8;
            res.angular_order = 8;
        }
        const HeatBallQuadrature quad(pole, r, res);
        const double threshold = std::pow(4.0 * std::numbers::pi * r, -static_cast<double>(n) / 2.0);
        REQUIRE(!quad.nodes().empty());
        REQUIRE(quad.offsets().size() == quad.nodes().size());
        bool weights_positive = true, inside = true;
        for (std::size_t i = 0; i < quad.nodes().size(); ++i) {
            weights_positive = weights_positive && quad.weights()[i] > 0.0;
            // z0 - node, computed without cancellation.
            inside = inside && gw_kernel(quad.offsets()[i]) > threshold;
        }
        CHECK(weights_positive);
        CHECK(inside);
    }
}

TEST_CASE("normalization holds at the default resolution") {
    const Field one = [](const SpaceTimePoint&) { return 1.0; };
    for (std::size_t n = 1; n <= 3; ++n) {
        for (double r : {0.1, 0.5, 1.0}) {
            QuadratureResolution res;
            if (n == 3) {
                res.depth_levels = 14;
                res.radial_order = 10;
                res.angular_order = 10;
                res.polar_order = 8;
            }
            const auto quad = build_heat_ball_quadrature(SpaceTimePoint(std::vector<double>(n, 0.0), 0.0),
                                                         r, res);
            CHECK(std::abs(mean_value(one, quad) - 1.0) <= 1e-8);
        }
    }
}

TEST_CASE("node count grows monotonically under refinement") {
    const SpaceTimePoint pole{{0.0}, 0.0};
    QuadratureResolution res;
    std::size_t prev = 0;
    for (int level = 0; level < 3; ++level) {
        const HeatBallQuadrature quad(pole, 0.5, res);
        CHECK(quad.nodes().size() > prev);
        prev = quad.nodes().size();
        res = res.refined();
    }
}

TEST_CASE("normalization error decreases monotonically under refinement") {
    const SpaceTimePoint pole{{0.0}, 0.0};
    QuadratureResolution res;
    res.depth_levels = 4;
    res.depth_order = 3;
    res.radial_order = 3;
    const Field one = [](const SpaceTimePoint&) { return 1.0; };
    double prev_err = 1e300;
    for (int level = 0; level < 5; ++level) {
        const HeatBallQuadrature quad(pole, 0.5, res);
        const double err = std::abs(mean_value(one, quad) - 1.0);
        CHECK(err < prev_err * 1.01);  // within noise
        prev_err = err;
        res = res.refined();
    }
    CHECK(prev_err < 1e-7);
}

TEST_CASE("mean value reproduces caloric functions") {
    SUBCASE("x^2 + 2t at the origin") {
        const auto quad = build_heat_ball_quadrature({{0.0}, 0.0}, 0.5);
        const double m = mean_value(
            [](const SpaceTimePoint& z) { return z.x[0] * z.x[0] + 2.0 * z.t; }, quad);
        CHECK(std::abs(m) <= 1e-6);
    }
    SUBCASE("constants") {
        const auto quad = build_heat_ball_quadrature({{0.3}, 0.7}, 0.25);
        CHECK(mean_value([](const SpaceTimePoint&) { return 4.25; }, quad) ==
              doctest::Approx(4.25).epsilon(1e-8));
    }
    SUBCASE("x^3 + 6xt away from the origin") {
        const auto quad = build_heat_ball_quadrature({{0.4}, -0.3}, 0.5);
        const Field u = [](const SpaceTimePoint& z) {
            return z.x[0] * z.x[0] * z.x[0] + 6.0 * z.x[0] * z.t;
        };
        CHECK(std::abs(mean_value(u, quad) - u(quad.pole())) <= 1e-6);
    }
}

TEST_CASE("strictly supercaloric data averages below its pole value") {
    // u = t has H u = -1: the average over the heat ball (which lies in the
    // past of the pole) must fall strictly below u(z0).
    const auto quad = build_heat_ball_quadrature({{0.0}, 0.0}, 0.5);
    const double m = mean_value([](const SpaceTimePoint& z) { return z.t; }, quad);
    CHECK(m < -1e-4);

    // Reversed direction for u = |x|^2 with H u = 2N >= 0.
    const double msub = mean_value([](const SpaceTimePoint& z) { return z.x[0] * z.x[0]; }, quad);
    CHECK(msub > 1e-4);
}

TEST_CASE("unmeetable tolerance reports the achieved error") {
    QuadratureResolution res;
    res.depth_levels = 2;
    res.depth_order = 2;
    res.radial_order = 2;
    res.normalization_tolerance = 1e-14;
    res.max_refinements = 0;
    CHECK_THROWS_AS((void)build_heat_ball_quadrature({{0.0}, 0.0}, 0.5, res), QuadratureError);
}

TEST_CASE("mean value holds for random exactly-caloric polynomials") {
    std::mt19937_64 rng(404);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 5);
    std::uniform_real_distribution<double> pick(0.0, 1.0);
    const ExtensionSolver extender(1, 4);
    std::vector<HeatBallQuadrature> quads;
    for (double r : {0.1, 0.5}) {
        quads.emplace_back(SpaceTimePoint{{0.0}, 0.0}, r, QuadratureResolution{});
        quads.emplace_back(SpaceTimePoint{{-0.4}, 0.6}, r, QuadratureResolution{});
    }
    for (int trial = 0; trial < 5; ++trial) {
        Polynomial p(1);
        for (const MultiIndex& alpha : monomials_up_to_height(1, 6)) {
            if (pick(rng) > 0.4) continue;
            const int n = num(rng);
            if (n == 0) continue;
            Rational c(n, den(rng));
            c.canonicalize();
            p.add_term(alpha, c);
        }
        const Polynomial u = extender.extend(p);
        REQUIRE(apply_heat(u).is_zero());
        const Field field = [&u](const SpaceTimePoint& z) { return u.evaluate(z); };
        for (const auto& quad : quads) {
            CHECK(std::abs(mean_value(field, quad) - u.evaluate(quad.pole())) <= 1e-6);
        }
    }
}

TEST_CASE("closed-form means of the simplest non-caloric fields") {
    // Slicing the ball at depth s gives a section of radius
    // R(s) = sqrt(2 s ln(r/s)); integrating the Watson factor against t and
    // x^2 reduces to Gamma integrals:
    //   M_r(t)(0,0)   = -(4 pi)^{-1/2} (sqrt(2)/3) Gamma(5/2) / 1.5^{5/2} * r
    //   M_r(x^2)(0,0) = +(4 pi)^{-1/2} (2^{5/2}/10) Gamma(7/2) / 1.5^{7/2} * r
    const double c1 = std::pow(4.0 * std::numbers::pi, -0.5) * (std::sqrt(2.0) / 3.0) *
                      std::tgamma(2.5) / std::pow(1.5, 2.5);
    const double c2 = std::pow(4.0 * std::numbers::pi, -0.5) * (std::pow(2.0, 2.5) / 10.0) *
                      std::tgamma(3.5) / std::pow(1.5, 3.5);
    for (double r : {0.1, 0.5, 1.0}) {
        const auto quad = build_heat_ball_quadrature({{0.0}, 0.0}, r, {});
        const double mean_t = mean_value([](const SpaceTimePoint& z) { return z.t; }, quad);
        const double mean_x2 =
            mean_value([](const SpaceTimePoint& z) { return z.x[0] * z.x[0]; }, quad);
        CHECK(mean_t == doctest::Approx(-c1 * r).epsilon(1e-7));
        CHECK(mean_x2 == doctest::Approx(c2 * r).epsilon(1e-7));
    }
}

TEST_CASE("mean value in two spatial dimensions") {
    const auto quad = build_heat_ball_quadrature({{0.2, -0.1}, 0.5}, 0.4, {});
    const Field u = [](const SpaceTimePoint& z) { return spatial_norm_sq(z) + 4.0 * z.t; };
    CHECK(std::abs(mean_value(u, quad) - u(quad.pole())) <= 1e-6);
}
