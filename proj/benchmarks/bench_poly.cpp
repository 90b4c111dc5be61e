#include <benchmark/benchmark.h>

#include <random>

#include "caloric/correction.hpp"
#include "caloric/polynomial.hpp"

using namespace caloric;

namespace {

Polynomial random_polynomial(std::mt19937_64& rng, std::size_t dim, int height) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    std::uniform_real_distribution<double> pick(0.0, 1.0);
    Polynomial p(dim);
    for (const MultiIndex& alpha : monomials_up_to_height(dim, height)) {
        if (pick(rng) > 0.4) continue;
        const int n = num(rng);
        if (n == 0) continue;
        Rational c(n, den(rng));
        c.canonicalize();
        p.add_term(alpha, c);
    }
    return p;
}

void BM_BuildCorrectionSystem(benchmark::State& state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    const int degree = static_cast<int>(state.range(1));
    for (auto _ : state) {
        CorrectionSystem sys(dim, degree);
        benchmark::DoNotOptimize(sys.dimension());
    }
}
BENCHMARK(BM_BuildCorrectionSystem)
    ->Args({1, 8})
    ->Args({2, 8})
    ->Args({3, 6})
    ->Args({3, 8})
    ->Unit(benchmark::kMillisecond);

void BM_CaloricExtension(benchmark::State& state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    const int height = static_cast<int>(state.range(1));
    std::mt19937_64 rng(7);
    const ExtensionSolver solver(dim, std::max(0, height - 2));
    std::vector<Polynomial> inputs;
    for (int i = 0; i < 32; ++i) inputs.push_back(random_polynomial(rng, dim, height));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(solver.extend(inputs[i]));
        i = (i + 1) % inputs.size();
    }
}
BENCHMARK(BM_CaloricExtension)->Args({1, 8})->Args({2, 8})->Args({3, 8})->Unit(benchmark::kMicrosecond);

void BM_SubstituteParaboloid(benchmark::State& state) {
    std::mt19937_64 rng(11);
    const Polynomial p = random_polynomial(rng, static_cast<std::size_t>(state.range(0)), 8);
    for (auto _ : state) benchmark::DoNotOptimize(substitute_paraboloid(p));
}
BENCHMARK(BM_SubstituteParaboloid)->Arg(1)->Arg(3)->Unit(benchmark::kMicrosecond);

}  // namespace
