#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "caloric/expression.hpp"
#include "caloric/perron.hpp"

using namespace caloric;

namespace {

DomainSpec rectangle() {
    return DomainSpec::from_boxes({Box{{-1.0, 0.0}, {1.0, 1.0}}});
}

const Field g_parab = [](const SpaceTimePoint& z) { return z.x[0] * z.x[0] + 2.0 * z.t; };
const Field g_cosh = [](const SpaceTimePoint& z) { return std::exp(z.t) * std::cosh(z.x[0]); };

SweepConfig test_config(double opening = 0.3) {
    // 41x41 grids admit r = 0.3; the coarser 21x21 grids need r >= 0.39
    // to span three temporal steps.
    SweepConfig cfg;
    cfg.bowl_opening = opening;
    cfg.tolerance = 1e-6;
    return cfg;
}

double sup_interior_error(const GridFunction& g, const Field& ref) {
    double worst = 0.0;
    for (std::size_t flat = 0; flat < g.node_count(); ++flat) {
        if (g.node_class(flat) != NodeClass::interior) continue;
        worst = std::max(worst, std::abs(g.value(flat) - ref(g.point(flat))));
    }
    return worst;
}

}  // namespace

TEST_CASE("grid classification on the rectangle") {
    GridFunction g(rectangle(), {21, 21});
    std::size_t interior = 0, boundary = 0, exterior = 0;
    for (std::size_t flat = 0; flat < g.node_count(); ++flat) {
        switch (g.node_class(flat)) {
            case NodeClass::interior: ++interior; break;
            case NodeClass::boundary: ++boundary; break;
            case NodeClass::exterior: ++exterior; break;
        }
    }
    CHECK(interior == 19 * 19);
    CHECK(boundary == 4 * 19 + 4);  // faces plus corners
    CHECK(exterior == 0);
}

TEST_CASE("interpolation orders reproduce their exact spaces") {
    GridFunction g(rectangle(), {21, 21});
    g.fill(g_parab);
    SUBCASE("quadratic interpolation is exact for x^2 + 2t") {
        CHECK(g.interpolate({{0.123}, 0.456}, 2) == doctest::Approx(g_parab({{0.123}, 0.456})).epsilon(1e-12));
    }
    SUBCASE("linear interpolation is exact for t") {
        GridFunction h(rectangle(), {21, 21});
        h.fill([](const SpaceTimePoint& z) { return z.t; });
        CHECK(h.interpolate({{0.37}, 0.81}, 1) == doctest::Approx(0.81).epsilon(1e-13));
    }
    SUBCASE("out-of-box points are rejected") {
        CHECK_THROWS_AS((void)g.interpolate({{2.0}, 0.5}, 1), StencilError);
    }
}

TEST_CASE("classifier sorts the canonical fields") {
    GridFunction g(rectangle(), {21, 21});
    ClassifyConfig cfg;
    cfg.radii = {0.1, 0.2};

    SUBCASE("u = t is supercaloric everywhere testable") {
        g.fill([](const SpaceTimePoint& z) { return z.t; });
        const ClassifyReport rep = classify_supercaloric(g, cfg);
        REQUIRE(!rep.verdicts.empty());
        for (const auto& v : rep.verdicts) CHECK(v.verdict == CaloricClass::supercaloric);
    }
    SUBCASE("u = x^2 is subcaloric everywhere testable") {
        g.fill([](const SpaceTimePoint& z) { return z.x[0] * z.x[0]; });
        const ClassifyReport rep = classify_supercaloric(g, cfg);
        REQUIRE(!rep.verdicts.empty());
        for (const auto& v : rep.verdicts) CHECK(v.verdict == CaloricClass::subcaloric);
    }
    SUBCASE("u = x^2 + 2t is caloric everywhere testable") {
        g.fill(g_parab);
        const ClassifyReport rep = classify_supercaloric(g, cfg);
        REQUIRE(!rep.verdicts.empty());
        for (const auto& v : rep.verdicts) CHECK(v.verdict == CaloricClass::caloric);
    }
    SUBCASE("balls that exit the grid are skipped and reported") {
        g.fill(g_parab);
        const ClassifyReport rep = classify_supercaloric(g, cfg);
        CHECK(rep.skipped > 0);
        CHECK(rep.skipped + rep.verdicts.size() == 21 * 21);
    }
}

TEST_CASE("caloric_regularize") {
    GridFunction g(rectangle(), {41, 41});
    const CaloricBowl bowl({{0.0}, 0.1}, 0.35);  // 2B reaches x in [-0.7, 0.7], t in [0.1, 0.59]
    SweepConfig cfg = test_config();

    SUBCASE("caloric data is a fixed point") {
        g.fill(g_parab);
        const GridFunction out = caloric_regularize(g, bowl, cfg);
        for (std::size_t flat = 0; flat < g.node_count(); ++flat) {
            CHECK(out.value(flat) == doctest::Approx(g.value(flat)).epsilon(1e-8));
        }
    }
    SUBCASE("nodes outside B-hat never change") {
        g.fill(g_cosh);
        const GridFunction out = caloric_regularize(g, bowl, cfg);
        for (std::size_t flat = 0; flat < g.node_count(); ++flat) {
            if (!bowl.in_hat(g.point(flat))) CHECK(out.value(flat) == g.value(flat));
        }
    }
    SUBCASE("supercaloric data decreases on B-hat and becomes caloric in B") {
        const CaloricBowl wide({{0.0}, 0.1}, 0.45);
        g.fill([](const SpaceTimePoint& z) { return z.t; });
        const GridFunction out = caloric_regularize(g, wide, cfg);
        bool changed = false;
        for (std::size_t flat = 0; flat < g.node_count(); ++flat) {
            if (!wide.in_hat(g.point(flat))) continue;
            CHECK(out.value(flat) <= g.value(flat) + 1e-6);
            if (std::abs(out.value(flat) - g.value(flat)) > 1e-9) changed = true;
        }
        CHECK(changed);

        // Classify with small balls and order-1 stencils so every read stays
        // inside the replaced patch; those nodes must come out caloric while
        // untouched nodes far from the bowl stay supercaloric.
        const double rb = 0.03;
        ClassifyConfig ccfg;
        ccfg.radii = {rb};
        ccfg.interpolation_order = 1;
        ccfg.band = 5e-4;
        const ClassifyReport rep = classify_supercaloric(out, ccfg);
        const double hx = 0.05, ht = 0.025;
        const double reach = std::sqrt(2.0 * rb / std::numbers::e) + hx + 1e-9;
        std::size_t caloric_inside = 0, super_outside = 0;
        for (const auto& v : rep.verdicts) {
            const SpaceTimePoint z = out.point(v.node);
            const double plane_min = std::floor((z.t - rb) / ht - 1e-9) * ht;
            const bool reads_inside_patch =
                wide.contains(z) &&
                (std::abs(z.x[0]) + reach) * (std::abs(z.x[0]) + reach) < plane_min - 0.1;
            if (reads_inside_patch) {
                CHECK(v.verdict == CaloricClass::caloric);
                ++caloric_inside;
            }
            const bool reads_outside_patch =
                z.t - rb - ht > 0.1 + wide.opening * wide.opening ||
                std::abs(z.x[0]) - reach > wide.opening;
            if (reads_outside_patch && z.t > 0.2) {
                CHECK(v.verdict == CaloricClass::supercaloric);
                ++super_outside;
            }
        }
        CHECK(caloric_inside > 0);
        CHECK(super_outside > 0);
    }
    SUBCASE("constants stay constant") {
        g.fill([](const SpaceTimePoint&) { return 2.5; });
        const GridFunction out = caloric_regularize(g, bowl, cfg);
        for (std::size_t flat = 0; flat < g.node_count(); ++flat) {
            CHECK(out.value(flat) == doctest::Approx(2.5).epsilon(1e-12));
        }
    }
    SUBCASE("doubled bowl must stay inside") {
        g.fill(g_parab);
        const CaloricBowl tall({{0.0}, 0.8}, 0.25);  // 2B pokes through the top
        CHECK_THROWS_AS((void)caloric_regularize(g, tall, cfg), std::invalid_argument);
    }
}

TEST_CASE("perron_upper converges to caloric comparators") {
    const SweepConfig cfg = test_config();
    SUBCASE("x^2 + 2t") {
        const SweepResult res = perron_upper(rectangle(), {41, 41}, g_parab, cfg);
        CHECK(res.converged);
        CHECK(res.sweeps <= cfg.max_sweeps);
        CHECK(sup_interior_error(res.grid, g_parab) <= 5e-2);
        // Descent diagnostics: increases die out by termination (nodes that
        // undershoot during the start-up transient must climb back, so
        // strict nodewise monotonicity is asserted only on the settled
        // tail), and no iterate ever exceeds the initial majorant M.
        CHECK(res.increase_trace.back() < cfg.tolerance);
        double top = -1e300;
        for (std::size_t flat = 0; flat < res.grid.node_count(); ++flat) {
            if (res.grid.node_class(flat) != NodeClass::exterior) {
                top = std::max(top, res.grid.value(flat));
            }
        }
        CHECK(top <= res.data_max + 1e-9);
    }
    SUBCASE("e^t cosh x") {
        const SweepResult res = perron_upper(rectangle(), {41, 41}, g_cosh, cfg);
        CHECK(res.converged);
        CHECK(sup_interior_error(res.grid, g_cosh) <= 5e-2);
    }
    SUBCASE("constant data converges in one sweep") {
        const SweepResult res = perron_upper(rectangle(), {41, 41},
                                             [](const SpaceTimePoint&) { return 3.0; }, cfg);
        CHECK(res.converged);
        CHECK(res.sweeps <= 2);
        CHECK(sup_interior_error(res.grid, [](const SpaceTimePoint&) { return 3.0; }) <= 1e-9);
    }
}

TEST_CASE("monotone descent of the upper sweep") {
    // Track a few interior nodes across manual sweeps by re-running with
    // increasing sweep caps; iterates never rise by more than the noise.
    const SweepConfig base = test_config(0.4);
    std::vector<double> prev;
    for (int sweeps = 1; sweeps <= 4; ++sweeps) {
        SweepConfig cfg = base;
        cfg.max_sweeps = sweeps;
        cfg.tolerance = 0.0;  // force exactly `sweeps` passes
        const SweepResult res = perron_upper(rectangle(), {21, 21}, g_cosh, cfg);
        std::vector<double> cur;
        for (std::size_t flat = 0; flat < res.grid.node_count(); ++flat) {
            if (res.grid.node_class(flat) == NodeClass::interior) cur.push_back(res.grid.value(flat));
        }
        if (!prev.empty()) {
            for (std::size_t i = 0; i < cur.size(); ++i) CHECK(cur[i] <= prev[i] + 1e-6);
        }
        prev = std::move(cur);
    }
}

TEST_CASE("order preservation between data sets") {
    const SweepConfig cfg = test_config(0.4);
    const SweepResult lo = perron_upper(rectangle(), {21, 21}, g_parab, cfg);
    const SweepResult hi = perron_upper(
        rectangle(), {21, 21},
        [](const SpaceTimePoint& z) { return g_parab(z) + 0.5; }, cfg);
    for (std::size_t flat = 0; flat < lo.grid.node_count(); ++flat) {
        if (lo.grid.node_class(flat) == NodeClass::exterior) continue;
        CHECK(lo.grid.value(flat) <= hi.grid.value(flat) + 2e-6);
    }
}

TEST_CASE("duality: the lower solution is exactly the negated upper of -phi") {
    const SweepConfig cfg = test_config(0.4);
    const SweepResult lower = perron_lower(rectangle(), {21, 21}, g_parab, cfg);
    const SweepResult neg_upper = perron_upper(
        rectangle(), {21, 21}, [](const SpaceTimePoint& z) { return -g_parab(z); }, cfg);
    for (std::size_t flat = 0; flat < lower.grid.node_count(); ++flat) {
        CHECK(lower.grid.value(flat) == -neg_upper.grid.value(flat));
    }
}

TEST_CASE("perron_solve gap, sandwich, and report") {
    // The sweep contracts at roughly 0.85 per pass, so the iterate stopped
    // at update < tol sits about 6 tol from the fixed point. Running the
    // solver tighter keeps the reported gap within 2e-6 while the stated
    // convergence criterion (update < 1e-6) holds a fortiori.
    SweepConfig cfg = test_config();
    cfg.tolerance = 5e-8;
    const PerronReport rep = perron_solve(rectangle(), {41, 41}, g_parab, cfg);
    CHECK(rep.converged);
    CHECK(rep.upper.final_update < 1e-6);
    CHECK(rep.lower.final_update < 1e-6);
    CHECK(rep.sandwich_ok);
    CHECK(rep.max_gap <= 2e-6);
    CHECK(rep.min_gap >= -2e-6);
    CHECK(rep.m == doctest::Approx(0.0));
    CHECK(rep.M == doctest::Approx(3.0));
    const std::string json = rep.to_json();
    CHECK(json.find("\"sandwich_ok\": true") != std::string::npos);
    CHECK(json.find("\"m\": 0") != std::string::npos);
}

TEST_CASE("parallel mode matches some deterministic schedule and itself") {
    SweepConfig seq = test_config(0.4);
    SweepConfig par = test_config(0.4);
    par.parallel = true;
    const SweepResult a = perron_upper(rectangle(), {21, 21}, g_cosh, par);
    const SweepResult b = perron_upper(rectangle(), {21, 21}, g_cosh, par);
    // Bitwise repeatable across runs.
    for (std::size_t flat = 0; flat < a.grid.node_count(); ++flat) {
        CHECK(a.grid.value(flat) == b.grid.value(flat));
    }
    // And close to the sequential fixed point.
    const SweepResult s = perron_upper(rectangle(), {21, 21}, g_cosh, seq);
    for (std::size_t flat = 0; flat < a.grid.node_count(); ++flat) {
        if (a.grid.node_class(flat) == NodeClass::exterior) continue;
        CHECK(a.grid.value(flat) == doctest::Approx(s.grid.value(flat)).epsilon(1e-4));
    }
}

TEST_CASE("degenerate slabs report no interior bowls") {
    const DomainSpec slab = DomainSpec::from_boxes({Box{{-1.0, 0.0}, {1.0, 0.05}}});
    SweepConfig cfg = test_config();
    CHECK_THROWS_WITH_AS((void)perron_upper(slab, {41, 3}, g_parab, cfg),
                         doctest::Contains("no interior bowls"), std::runtime_error);
}

TEST_CASE("grid CSV output is deterministic") {
    GridFunction g(rectangle(), {5, 5});
    g.fill(g_parab);
    std::ostringstream a, b;
    g.write_csv(a);
    g.write_csv(b);
    CHECK(a.str() == b.str());
    CHECK(a.str().find("i_t,i_x1,x1,t,class,value") == 0);
}

TEST_CASE("idempotence: a sweep started from sampled caloric data barely moves") {
    SweepConfig cfg = test_config();
    cfg.initial_data = g_parab;
    cfg.tolerance = 0.0;  // force exactly max_sweeps passes
    cfg.max_sweeps = 3;
    const SweepResult res = perron_upper(rectangle(), {41, 41}, g_parab, cfg);
    GridFunction reference(rectangle(), {41, 41});
    reference.fill(g_parab);
    double worst = 0.0;
    for (std::size_t flat = 0; flat < res.grid.node_count(); ++flat) {
        if (res.grid.node_class(flat) == NodeClass::exterior) continue;
        worst = std::max(worst, std::abs(res.grid.value(flat) - reference.value(flat)));
    }
    CHECK(worst <= 1e-6);

    // The analytic comparator is held only up to the equilibrium of the
    // grid-interpolation bias (quadratic stencils on h = 0.05 feed each
    // bowl solve), three orders above the exactly-interpolated case.
    SweepConfig cfg2 = cfg;
    cfg2.initial_data = g_cosh;
    const SweepResult res2 = perron_upper(rectangle(), {41, 41}, g_cosh, cfg2);
    double worst2 = 0.0;
    for (std::size_t flat = 0; flat < res2.grid.node_count(); ++flat) {
        if (res2.grid.node_class(flat) == NodeClass::exterior) continue;
        worst2 = std::max(worst2, std::abs(res2.grid.value(flat) - g_cosh(res2.grid.point(flat))));
    }
    CHECK(worst2 <= 2e-3);
}

TEST_CASE("predicate-carved domains classify and solve") {
    // Keep the right half x > 0 of the rectangle.
    const DomainSpec half = DomainSpec::from_boxes_and_predicate(
        {Box{{-1.0, 0.0}, {1.0, 1.0}}}, Expression::parse("x", 1));
    GridFunction g(half, {41, 41});
    // Half the box is carved away, so the doubled bowls of the default
    // opening no longer fit; a finer temporal grid admits r = 0.2.
    std::size_t interior = 0, boundary = 0, exterior = 0;
    for (std::size_t flat = 0; flat < g.node_count(); ++flat) {
        switch (g.node_class(flat)) {
            case NodeClass::interior: ++interior; break;
            case NodeClass::boundary: ++boundary; break;
            case NodeClass::exterior: ++exterior; break;
        }
    }
    CHECK(interior == 19 * 39);  // x in (0, 1), t in (0, 1)
    CHECK(boundary > 0);
    CHECK(exterior > 0);

    SweepConfig cfg = test_config(0.2);
    const SweepResult res = perron_upper(half, {41, 161}, g_parab, cfg);
    CHECK(res.converged);
    CHECK(res.bowl_count > 0);
    CHECK(sup_interior_error(res.grid, g_parab) <= 5e-2);
}
