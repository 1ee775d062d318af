// Serial reference vs OpenMP kernels. Arg(0) = serial, Arg(1) = parallel.
//
//   ./build/bench/bench_cubature --benchmark_min_time=0.2

#include <benchmark/benchmark.h>

#include <cmath>

#include "squarint/cubature.hpp"
#include "squarint/kernels.hpp"

using namespace squarint;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::Parallel : Exec::Serial; }

const char* label(const benchmark::State& s) { return s.range(0) ? "parallel" : "serial"; }

CubeIntegrandSpec cubic_spec() {
  CubeIntegrandSpec s;
  s.dim = 3;
  s.exponents = {3.0, 2.0, 1.0};
  s.log_weights = {1.0, 2.0, 3.0};
  s.log_power = 1;
  return s;
}

void BM_SumPoints(benchmark::State& state) {
  const long long n = 1 << 20;
  const auto f = [](long long i) {
    const double x = (i + 0.5) / (1 << 20);
    return PointEval{Complex(std::exp(-x) * std::cos(x) / (1.0 + x), 0.0)};
  };
  for (auto _ : state) {
    const PointSum s = state.range(0) ? sum_points_parallel(n, f) : sum_points_serial(n, f);
    benchmark::DoNotOptimize(s);
  }
  state.SetLabel(label(state));
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SumPoints)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CubeTensor(benchmark::State& state) {
  CubatureOptions o;
  o.tolerance = 1e-8;
  o.exec = exec_of(state);
  const CubePlan plan{{CubeTerm{1.0, cubic_spec()}}, CubeMethod::CubeTensor};
  for (auto _ : state) benchmark::DoNotOptimize(integrate_cube_tensor(plan, Part::Value, o));
  state.SetLabel(label(state));
}
BENCHMARK(BM_CubeTensor)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_RadialSimplex(benchmark::State& state) {
  CubatureOptions o;
  o.tolerance = 1e-10;
  o.exec = exec_of(state);
  const OrthantForm form = to_orthant(cubic_spec());
  for (auto _ : state) benchmark::DoNotOptimize(integrate_radial_simplex(form, Part::Value, o));
  state.SetLabel(label(state));
}
BENCHMARK(BM_RadialSimplex)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_LowDiscrepancy(benchmark::State& state) {
  CubatureOptions o;
  o.qmc_points = 1 << 14;
  o.exec = exec_of(state);
  const OrthantForm form = to_orthant(cubic_spec());
  for (auto _ : state) benchmark::DoNotOptimize(integrate_low_discrepancy(form, Part::Value, o));
  state.SetLabel(label(state));
}
BENCHMARK(BM_LowDiscrepancy)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
