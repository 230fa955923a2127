#include <benchmark/benchmark.h>

#include <vector>

#include "gsqg/dyadic.hpp"
#include "gsqg/ensemble.hpp"
#include "gsqg/fft.hpp"
#include "gsqg/kernels.hpp"
#include "gsqg/multipliers.hpp"
#include "gsqg/solver.hpp"

using namespace gsqg;

static void BM_ForwardInverse(benchmark::State& state) {
  const Grid2D g(static_cast<std::size_t>(state.range(0)));
  const ScalarField f = random_band_limited(g, 1);
  const std::vector<double> v(f.values().begin(), f.values().end());
  for (auto _ : state) {
    auto c = forward_transform(g, std::span<const double>(v));
    benchmark::DoNotOptimize(inverse_transform(g, std::span<const cplx>(c)));
  }
}
BENCHMARK(BM_ForwardInverse)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_ProjectBlock(benchmark::State& state) {
  const Grid2D g(static_cast<std::size_t>(state.range(0)));
  const DyadicFamily fam = build_partition(g);
  const ScalarField f = random_band_limited(g, 2);
  for (auto _ : state) benchmark::DoNotOptimize(project_block(f, fam, fam.j_max(), BlockMode::inhomogeneous));
}
BENCHMARK(BM_ProjectBlock)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_BiotSavart(benchmark::State& state) {
  const Grid2D g(static_cast<std::size_t>(state.range(0)));
  const ScalarField f = random_band_limited(g, 3);
  for (auto _ : state) benchmark::DoNotOptimize(biot_savart_velocity(f, 0.5));
}
BENCHMARK(BM_BiotSavart)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_RK4Step(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Grid2D g(n, 16.0);
  const ScalarField th = random_compact_bump(g, 4);
  SolverConfig c;
  c.n_side = n;
  c.L = 16.0;
  c.dt = 1e-3;
  c.stop_at_existence_time = false;
  c.constitutive = state.range(1) ? Constitutive::serfati : Constitutive::direct;
  Simulation sim(c, th, biot_savart_velocity(th, c.beta));
  sim.step(1e-3);  // builds the kernel split outside the timed loop
  for (auto _ : state) sim.step(1e-3);
  state.SetLabel(state.range(1) ? "serfati" : "direct");
}
BENCHMARK(BM_RK4Step)->Args({256, 0})->Args({256, 1})->Args({512, 0})->Unit(benchmark::kMillisecond);

static void BM_ConvolveFar(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Grid2D g(n, 16.0);
  const KernelSplit split = build_split(g, 0.5);
  const ScalarField th = random_compact_bump(g, 5);
  const VectorField u = biot_savart_velocity(th, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(convolve_far(split, th, u));
}
BENCHMARK(BM_ConvolveFar)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
