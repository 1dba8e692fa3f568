// Serial reference vs OpenMP kernels. Arg 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include "monorec/oracle.hpp"
#include "monorec/regions.hpp"

using namespace monorec;

namespace {

Execution mode(const benchmark::State& state) {
    return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void BM_RasterizeDP(benchmark::State& state) {
    const BoundingBox box{-1, 5, -7, 5};
    for (auto _ : state) {
        benchmark::DoNotOptimize(rasterize(RegionId::DP, box, state.range(1), mode(state)));
    }
}
BENCHMARK(BM_RasterizeDP)->ArgsProduct({{0, 1}, {101, 201}})->Unit(benchmark::kMillisecond);

void BM_IdentityD(benchmark::State& state) {
    const BoundingBox box{-3, 3, -3, 3};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            verify_intersection_identity(RegionId::D, box, state.range(1), mode(state)));
    }
}
BENCHMARK(BM_IdentityD)->ArgsProduct({{0, 1}, {201}})->Unit(benchmark::kMillisecond);

void BM_IdentityDP(benchmark::State& state) {
    const BoundingBox box{-1, 5, -7, 5};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            verify_intersection_identity(RegionId::DP, box, state.range(1), mode(state)));
    }
}
BENCHMARK(BM_IdentityDP)->ArgsProduct({{0, 1}, {201}})->Unit(benchmark::kMillisecond);

const RecurrenceSpec& counterexample_spec() {
    static const RecurrenceSpec spec =
        RecurrenceSpec::make(Rational(1, 10), Rational(-21, 5), 1, 3);
    return spec;
}

void BM_P1Window(benchmark::State& state) {
    const RecurrenceSpec spec = make_h_spec(Rational(7, 3), Rational(-5, 4), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_p1_window(spec, 0, state.range(1), mode(state)));
    }
}
BENCHMARK(BM_P1Window)->ArgsProduct({{0, 1}, {300, 1000}})->Unit(benchmark::kMillisecond);

void BM_P2Window(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_p2_window(counterexample_spec(), state.range(1), mode(state)));
    }
}
BENCHMARK(BM_P2Window)->ArgsProduct({{0, 1}, {300, 1000}})->Unit(benchmark::kMillisecond);

void BM_P3Window(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_p3_window(counterexample_spec(), state.range(1), mode(state)));
    }
}
BENCHMARK(BM_P3Window)->ArgsProduct({{0, 1}, {300, 1000}})->Unit(benchmark::kMillisecond);

void BM_P3WindowComplex(benchmark::State& state) {
    const RecurrenceSpec spec = make_h_spec(1, Rational(3, 2), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_p3_window(spec, state.range(1), mode(state)));
    }
}
BENCHMARK(BM_P3WindowComplex)->ArgsProduct({{0, 1}, {300}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
