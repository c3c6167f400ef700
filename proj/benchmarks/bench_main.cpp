#include "severi/f2.hpp"
#include "severi/f3.hpp"
#include "severi/fiber.hpp"
#include "severi/plane.hpp"

#include <benchmark/benchmark.h>

#include <array>

using namespace severi;

// Cold engines: every iteration recomputes the whole dependency closure.
static void BM_PlaneN(benchmark::State& state) {
  for (auto _ : state) {
    PlaneEngine e(EngineOptions{false});
    benchmark::DoNotOptimize(e.N(state.range(0)));
  }
}
BENCHMARK(BM_PlaneN)->DenseRange(4, 16, 4);

static void BM_PlaneCrossChecked(benchmark::State& state) {
  for (auto _ : state) {
    PlaneEngine e;
    benchmark::DoNotOptimize(e.record(state.range(0)));
  }
}
BENCHMARK(BM_PlaneCrossChecked)->DenseRange(4, 16, 4);

static void BM_F2N(benchmark::State& state) {
  const DivClass d = fn_class(SurfaceId::F2, state.range(0), state.range(0));
  for (auto _ : state) {
    F2Engine e;
    benchmark::DoNotOptimize(e.N(d));
  }
}
BENCHMARK(BM_F2N)->DenseRange(1, 4);

static void BM_F3Record(benchmark::State& state) {
  const DivClass d = fn_class(SurfaceId::F3, state.range(0), 1);
  for (auto _ : state) {
    F3Engine e(EngineOptions{state.range(1) != 0});
    benchmark::DoNotOptimize(e.full_record(d));
  }
}
BENCHMARK(BM_F3Record)->ArgsProduct({{2, 3, 4}, {0, 1}});

static void BM_FiberSolve(benchmark::State& state) {
  const auto& s = SurfaceModel::get(SurfaceId::F3);
  const auto parts = std::array{fn_class(SurfaceId::F3, 2, 0), fn_class(SurfaceId::F3, 1, 3), s.F()};
  for (auto _ : state) {
    auto m = make_fiber(s, FiberType::H, parts);
    benchmark::DoNotOptimize(pullback_coefficients(m, s.C()));
  }
}
BENCHMARK(BM_FiberSolve);
BENCHMARK_MAIN();
