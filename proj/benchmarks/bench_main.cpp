#include <benchmark/benchmark.h>

#include "coble/hesse.hpp"
#include "coble/nu.hpp"

using namespace coble;

static void BM_InvariantBasis(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(invariant_basis(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_InvariantBasis)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_OrbitCount(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(count_invariant_orbits(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_OrbitCount)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_RestrictSextic(benchmark::State& state) {
    const auto basis = invariant_basis(6);
    const auto charts = fixed_plane_charts(ChartMode::annexe);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(restrict_sextic(basis.elements[i % 43], charts[i % charts.size()]));
        ++i;
    }
}
BENCHMARK(BM_RestrictSextic)->Unit(benchmark::kMicrosecond);

static void BM_AssembleNu(benchmark::State& state) {
    const auto mode = state.range(0) ? ChartMode::all_lifts : ChartMode::annexe;
    for (auto _ : state) benchmark::DoNotOptimize(assemble_nu(mode));
}
BENCHMARK(BM_AssembleNu)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_NuElimination(benchmark::State& state) {
    const auto m = assemble_nu(ChartMode::annexe).entries;
    for (auto _ : state) benchmark::DoNotOptimize(rank_and_kernel(m));
}
BENCHMARK(BM_NuElimination)->Unit(benchmark::kMillisecond);

static void BM_DualityOracle(benchmark::State& state) {
    const auto p = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(finite_field_duality_oracle(Rational(2), p));
}
BENCHMARK(BM_DualityOracle)->Arg(13)->Arg(997)->Unit(benchmark::kMillisecond);

static void BM_PolynomialMultiply(benchmark::State& state) {
    const Poly a = printed_cubic(1) + printed_cubic(3);
    const Poly b = printed_cubic(2) + printed_cubic(4);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolynomialMultiply)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
