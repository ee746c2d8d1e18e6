#include <benchmark/benchmark.h>

#include <vector>

#include "minsurf/fields.hpp"
#include "minsurf/holo.hpp"
#include "minsurf/jet.hpp"
#include "minsurf/jordan.hpp"
#include "minsurf/operators.hpp"
#include "minsurf/verify.hpp"

namespace {

std::vector<double> ramp(int n) {
  std::vector<double> x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = 0.3 + 0.1 * i;
  return x;
}

void bm_jet_mul(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto x = ramp(n);
  const auto seeds = minsurf::seed_point(x);
  minsurf::Jet2 a = seeds[0];
  minsurf::Jet2 b = seeds[static_cast<std::size_t>(n - 1)];
  for (int i = 1; i < n; ++i) a = a + seeds[static_cast<std::size_t>(i)];
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(bm_jet_mul)->Arg(3)->Arg(9)->Arg(27);

void bm_helicoid_residual(benchmark::State& state) {
  const auto f = minsurf::helicoid();
  const std::vector<double> x{0.8, -0.4, 1.1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(minsurf::ph_residual(f.eval(x)));
  }
}
BENCHMARK(bm_helicoid_residual);

void bm_hsiang_eval(benchmark::State& state) {
  const auto f = minsurf::hsiang_field(static_cast<int>(state.range(0)));
  const auto x = ramp(f.dim());
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.eval(x));
  }
}
BENCHMARK(bm_hsiang_eval)->Arg(1)->Arg(4);

void bm_det_jet(benchmark::State& state) {
  const auto h = minsurf::holo_det(3);
  std::vector<minsurf::complexd> z;
  for (int i = 0; i < h.dim(); ++i) z.emplace_back(0.4 + 0.05 * i, 0.2 - 0.03 * i);
  for (auto _ : state) {
    benchmark::DoNotOptimize(minsurf::tm_residual(h, z));
  }
}
BENCHMARK(bm_det_jet);

void bm_newton_project(benchmark::State& state) {
  const auto f = minsurf::helicoid();
  const std::vector<double> x0{1.2, 0.7, -0.9};
  for (auto _ : state) {
    benchmark::DoNotOptimize(minsurf::newton_project(f, x0, 0.0));
  }
}
BENCHMARK(bm_newton_project);

}  // namespace

BENCHMARK_MAIN();
