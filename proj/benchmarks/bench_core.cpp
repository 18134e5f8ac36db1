#include <benchmark/benchmark.h>

#include "dephase/kernel.hpp"
#include "dephase/oracle.hpp"
#include "dephase/regime.hpp"

namespace {

void BM_GammaPoint(benchmark::State& state)
{
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(dephase::gamma_point(t, 10.0, 0.0384));
        t += 1e-3;
    }
}
BENCHMARK(BM_GammaPoint);

void BM_ExponentsOnGrid(benchmark::State& state)
{
    const auto geom = dephase::QubitGeometry::standard();
    const auto grid = dephase::uniform_grid(400.0, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto ex = dephase::exponents_on_grid(geom, dephase::SubstrateContext(0.0384), grid);
        benchmark::DoNotOptimize(ex.outer.back());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExponentsOnGrid)->RangeMultiplier(4)->Range(250, 4000)->Complexity()->Unit(benchmark::kMillisecond);

void BM_ScanRegimes(benchmark::State& state)
{
    const auto geom = dephase::QubitGeometry::standard();
    const auto grid = dephase::uniform_grid(400.0, 4000);
    const auto trajectory = dephase::Trajectory::simulate(geom, 0.8, dephase::SubstrateContext(0.0384), grid);
    for (auto _ : state) {
        auto report = dephase::scan_regimes(trajectory);
        benchmark::DoNotOptimize(report.crossings.size());
    }
}
BENCHMARK(BM_ScanRegimes)->Unit(benchmark::kMillisecond);

void BM_ClassicalInfoAt(benchmark::State& state)
{
    const auto rho = dephase::densify(dephase::XState(0.8, 0.3, 0.1));
    double theta = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(dephase::classical_info_at(rho, dephase::MeasurementBasis(theta, 0.3)));
        theta = theta > 3.0 ? 0.0 : theta + 1e-3;
    }
}
BENCHMARK(BM_ClassicalInfoAt);

void BM_MaximizeClassical(benchmark::State& state)
{
    const dephase::XState x(0.8, 0.3, 0.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dephase::maximize_classical(x).value);
    }
}
BENCHMARK(BM_MaximizeClassical)->Unit(benchmark::kMillisecond);

void BM_CrossoverTemperature(benchmark::State& state)
{
    const auto geom = dephase::QubitGeometry::standard();
    for (auto _ : state) {
        benchmark::DoNotOptimize(dephase::crossover_temperature(geom, 0.8, 400.0));
    }
}
BENCHMARK(BM_CrossoverTemperature)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
