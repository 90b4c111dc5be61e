#include <benchmark/benchmark.h>

#include <cmath>

#include "caloric/bowl_solver.hpp"
#include "caloric/heat_ball.hpp"
#include "caloric/perron.hpp"
#include "caloric/representation.hpp"

using namespace caloric;

namespace {

const Field g_cosh = [](const SpaceTimePoint& z) { return std::exp(z.t) * std::cosh(z.x[0]); };

void BM_HeatBallQuadratureBuild(benchmark::State& state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    const SpaceTimePoint pole(std::vector<double>(dim, 0.0), 0.0);
    for (auto _ : state) {
        HeatBallQuadrature quad(pole, 0.5, {});
        benchmark::DoNotOptimize(quad.nodes().size());
    }
}
BENCHMARK(BM_HeatBallQuadratureBuild)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_MeanValue(benchmark::State& state) {
    const HeatBallQuadrature quad({{0.0}, 0.5}, 0.5, {});
    for (auto _ : state) benchmark::DoNotOptimize(mean_value(g_cosh, quad));
}
BENCHMARK(BM_MeanValue)->Unit(benchmark::kMicrosecond);

void BM_Reproduce(benchmark::State& state) {
    const CaloricDisk disk({{0.0}, 0.0}, 0.5);
    ReproduceResolution res;
    res.with_refinement_check = false;
    for (auto _ : state) {
        benchmark::DoNotOptimize(reproduce(g_cosh, {{0.05}, 0.02}, disk, res).value);
    }
}
BENCHMARK(BM_Reproduce)->Unit(benchmark::kMillisecond);

void BM_SolveBowl(benchmark::State& state) {
    const CaloricBowl bowl({{0.0}, 0.0}, 1.0);
    const auto phi = BoundaryData::restrict_to_boundary(g_cosh, bowl);
    BowlSolveOptions opts;
    opts.fixed_degree = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(solve_bowl(bowl, phi, opts).certified_error);
}
BENCHMARK(BM_SolveBowl)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_PerronSweep(benchmark::State& state) {
    const DomainSpec rect = DomainSpec::from_boxes({Box{{-1.0, 0.0}, {1.0, 1.0}}});
    SweepConfig cfg;
    cfg.bowl_opening = 0.3;
    cfg.tolerance = 0.0;  // run exactly max_sweeps passes
    cfg.max_sweeps = 5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(perron_upper(rect, {41, 41}, g_cosh, cfg).final_update);
    }
    state.SetItemsProcessed(state.iterations() * cfg.max_sweeps);
}
BENCHMARK(BM_PerronSweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
