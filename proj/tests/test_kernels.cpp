#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "caloric/cutoff.hpp"
#include "caloric/kernels.hpp"
#include "caloric/representation.hpp"

using namespace caloric;
using std::numbers::pi;

TEST_CASE("gw_kernel matches the closed form") {
    CHECK(gw_kernel({{0.0}, -1.0}) == 0.0);
    CHECK(gw_kernel({{3.0}, 0.0}) == 0.0);
    CHECK(gw_kernel({{0.0}, 1.0}) == doctest::Approx(std::pow(4.0 * pi, -0.5)).epsilon(1e-14));
    CHECK(gw_kernel({{2.0}, 1.0}) ==
          doctest::Approx(std::pow(4.0 * pi, -0.5) * std::exp(-1.0)).epsilon(1e-14));
    CHECK(gw_kernel({{0.1, 0.2}, 0.5}) > 0.0);
    CHECK_THROWS_AS((void)gw_kernel({{0.0}, 0.0}), std::domain_error);
}

TEST_CASE("gw_gradient matches the closed form") {
    CHECK(gw_gradient({{0.0}, 1.0})[0] == 0.0);
    CHECK(gw_gradient({{2.0}, 1.0})[0] ==
          doctest::Approx(-std::pow(4.0 * pi, -0.5) * std::exp(-1.0)).epsilon(1e-14));
    CHECK(gw_gradient({{1.0, 1.0}, -2.0}) == std::vector<double>{0.0, 0.0});
    CHECK_THROWS_AS((void)gw_gradient({{0.0, 0.0}, 0.0}), std::domain_error);

    // Finite-difference cross-check away from the pole.
    const SpaceTimePoint z{{0.7, -0.3}, 0.4};
    const double h = 1e-6;
    const auto grad = gw_gradient(z);
    for (std::size_t i = 0; i < 2; ++i) {
        SpaceTimePoint zp = z, zm = z;
        zp.x[i] += h;
        zm.x[i] -= h;
        const double fd = (gw_kernel(zp) - gw_kernel(zm)) / (2.0 * h);
        CHECK(grad[i] == doctest::Approx(fd).epsilon(1e-6));
    }
}

TEST_CASE("caloric norm formula and parabolic homogeneity") {
    CHECK(caloric_norm({{0.0}, 4.0}) == doctest::Approx(2.0));
    CHECK(caloric_norm({{3.0}, 0.0}) == doctest::Approx(3.0));
    CHECK(caloric_norm({{1.0}, 1.0}) == doctest::Approx(std::pow(2.0, 0.25)));

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    for (int trial = 0; trial < 30; ++trial) {
        const SpaceTimePoint z{{d(rng), d(rng)}, d(rng)};
        const double lambda = std::abs(d(rng)) + 0.1;
        const SpaceTimePoint scaled{{lambda * z.x[0], lambda * z.x[1]}, lambda * lambda * z.t};
        CHECK(caloric_norm(scaled) == doctest::Approx(lambda * caloric_norm(z)).epsilon(1e-12));
    }
}

TEST_CASE("cutoff plateau, support, and analytic derivatives") {
    const CaloricDisk disk({{0.25, -0.5}, 0.75}, 0.8);
    const CutoffFunction psi(disk);

    SUBCASE("plateau covers the closure of D and support stays in 2D") {
        CHECK(psi.value(disk.center) == 1.0);
        CHECK(psi.inner_radius() > disk.radius);
        CHECK(psi.outer_radius() < 2.0 * disk.radius);
        // On the rim of D: still inside the plateau.
        const SpaceTimePoint rim{{disk.center.x[0] + disk.radius, disk.center.x[1]}, disk.center.t};
        CHECK(psi.value(rim) == 1.0);
        // Outside the outer radius: identically zero.
        const SpaceTimePoint far{{disk.center.x[0] + 2.0 * disk.radius, disk.center.x[1]}, disk.center.t};
        CHECK(psi.value(far) == 0.0);
        CHECK(psi.is_flat_at(far));
    }

    SUBCASE("derivatives match finite differences in the transition annulus") {
        std::mt19937_64 rng(17);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        const double h = 1e-5;
        int tested = 0;
        while (tested < 20) {
            // Sample the annulus between the plateau and the support edge.
            const double rho = psi.inner_radius() + (psi.outer_radius() - psi.inner_radius()) * u(rng);
            const double ang = 2.0 * pi * u(rng);
            const double split = u(rng);  // how much of the norm comes from time
            const double xpart = rho * std::sqrt(std::sqrt(1.0 - split));
            const double tpart = rho * rho * std::sqrt(split) * (u(rng) < 0.5 ? -1.0 : 1.0);
            const SpaceTimePoint z{{disk.center.x[0] + xpart * std::cos(ang),
                                    disk.center.x[1] + xpart * std::sin(ang)},
                                   disk.center.t + tpart};
            if (psi.is_flat_at(z)) continue;
            ++tested;

            const auto grad = psi.gradient(z);
            for (std::size_t i = 0; i < 2; ++i) {
                SpaceTimePoint zp = z, zm = z;
                zp.x[i] += h;
                zm.x[i] -= h;
                const double fd = (psi.value(zp) - psi.value(zm)) / (2.0 * h);
                CHECK(grad[i] == doctest::Approx(fd).epsilon(5e-5));
            }
            SpaceTimePoint tp = z, tm = z;
            tp.t += h;
            tm.t -= h;
            CHECK(psi.dt(z) == doctest::Approx((psi.value(tp) - psi.value(tm)) / (2.0 * h)).epsilon(5e-5));

            double fd_lap = 0.0;
            for (std::size_t i = 0; i < 2; ++i) {
                SpaceTimePoint zp = z, zm = z;
                zp.x[i] += h;
                zm.x[i] -= h;
                fd_lap += (psi.value(zp) - 2.0 * psi.value(z) + psi.value(zm)) / (h * h);
            }
            CHECK(psi.laplacian(z) == doctest::Approx(fd_lap).epsilon(2e-3));
        }
    }
}

TEST_CASE("representation kernel vanishes where the cutoff is flat") {
    const CaloricDisk disk({{0.0}, 0.0}, 0.5);
    const CutoffFunction psi(disk);
    const SpaceTimePoint z{{0.1}, 0.05};

    CHECK(representation_kernel(z, {{0.2}, -0.1}, psi) == 0.0);   // plateau
    CHECK(representation_kernel(z, {{5.0}, 0.0}, psi) == 0.0);    // outside support
    CHECK(representation_kernel(z, z, psi) == 0.0);               // z itself sits in the plateau
}

TEST_CASE("reproduction integral recovers caloric functions") {
    const CaloricDisk disk({{0.0}, 0.0}, 0.5);
    const SpaceTimePoint z{{0.05}, 0.02};

    SUBCASE("constants") {
        const auto res = reproduce([](const SpaceTimePoint&) { return 1.0; }, z, disk);
        CHECK(res.value == doctest::Approx(1.0).epsilon(1e-7));
    }
    SUBCASE("x^2 + 2t at the disk center") {
        const Field u = [](const SpaceTimePoint& p) { return p.x[0] * p.x[0] + 2.0 * p.t; };
        const auto res = reproduce(u, disk.center, disk);
        CHECK(std::abs(res.value - u(disk.center)) <= 1e-6);
    }
    SUBCASE("heat kernel with a distant pole") {
        const SpaceTimePoint pole{{0.0}, -5.0};
        const Field u = [&](const SpaceTimePoint& p) { return gw_kernel(p - pole); };
        const auto res = reproduce(u, z, disk);
        CHECK(std::abs(res.value - u(z)) <= 1e-6);
    }
    SUBCASE("printed kernel variant misses the reproduction identity") {
        const Field u = [](const SpaceTimePoint& p) { return p.x[0] * p.x[0] + 2.0 * p.t; };
        const auto derived = reproduce(u, z, disk, {}, KernelForm::derived);
        const auto printed = reproduce(u, z, disk, {}, KernelForm::printed);
        CHECK(std::abs(derived.value - u(z)) <= 1e-6);
        CHECK(std::abs(printed.value - u(z)) > 1e-2);  // order-one relative residual
    }
    SUBCASE("evaluation point must lie inside the disk") {
        CHECK_THROWS_AS((void)reproduce([](const SpaceTimePoint&) { return 1.0; },
                                        SpaceTimePoint{{5.0}, 0.0}, disk),
                        std::invalid_argument);
    }
}
