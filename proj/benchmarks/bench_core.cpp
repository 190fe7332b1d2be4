#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "dfsbary/disk_interp.hpp"
#include "dfsbary/gauss_legendre.hpp"
#include "dfsbary/sphere_interp.hpp"
#include "dfsbary/targets.hpp"
#include "dfsbary/transport.hpp"

using namespace dfsbary;

namespace {

SphereInterpolant make_sphere(int m) {
  const SphereGrid g = make_sphere_grid(SphereGridKind::EQ, m, m + 1);
  std::vector<double> samples(static_cast<std::size_t>(m + 1) * 2 * m);
  for (int j = 0; j <= m; ++j) {
    for (int k = 0; k < 2 * m; ++k) {
      samples[static_cast<std::size_t>(j) * 2 * m + k] = sphere_target(g.phi[k], g.theta[j]);
    }
  }
  return SphereInterpolant(g, samples);
}

void BM_SphereEval(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const SphereInterpolant s = make_sphere(m);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> angle(0.0, 6.28);
  std::uniform_real_distribution<double> colat(0.0, 3.14);
  std::vector<double> phis(1024), thetas(1024);
  for (int i = 0; i < 1024; ++i) {
    phis[i] = angle(rng);
    thetas[i] = colat(rng);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(s.eval(phis[i & 1023], thetas[i & 1023]));
    ++i;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SphereEval)->Arg(16)->Arg(32)->Arg(64)->Arg(120);

void BM_SphereBuild(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const SphereGrid g = make_sphere_grid(SphereGridKind::EQ, m, m + 1);
  std::vector<double> samples(static_cast<std::size_t>(m + 1) * 2 * m, 1.0);
  for (auto _ : state) {
    SphereInterpolant s(g, samples);
    benchmark::DoNotOptimize(s.raw_samples().data());
  }
}
BENCHMARK(BM_SphereBuild)->Arg(32)->Arg(120);

void BM_DiskEval(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const DiskGrid g = make_disk_grid(DiskGridKind::CH2, m, m, true);
  std::vector<double> samples(static_cast<std::size_t>(m + 1) * 2 * m);
  for (int j = 0; j <= m; ++j) {
    for (int k = 0; k < 2 * m; ++k) {
      samples[static_cast<std::size_t>(j) * 2 * m + k] = disk_target(g.phi[k], g.rho[j]);
    }
  }
  const DiskInterpolant s(g, samples);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> angle(0.0, 6.28);
  std::uniform_real_distribution<double> radius(0.0, 1.0);
  std::vector<double> phis(1024), rhos(1024);
  for (int i = 0; i < 1024; ++i) {
    phis[i] = angle(rng);
    rhos[i] = radius(rng);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(s.eval(phis[i & 1023], rhos[i & 1023]));
    ++i;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_DiskEval)->Arg(32)->Arg(64);

void BM_GlNodes(benchmark::State& state) {
  const int deg = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gl_nodes(deg).nodes.data());
  }
}
BENCHMARK(BM_GlNodes)->Arg(64)->Arg(256)->Arg(1024);

void BM_TraceDeparture(benchmark::State& state) {
  const VelocityField field;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> lon(0.0, 6.28);
  std::uniform_real_distribution<double> lat(-1.5, 1.5);
  std::vector<double> lons(1024), lats(1024);
  for (int i = 0; i < 1024; ++i) {
    lons[i] = lon(rng);
    lats[i] = lat(rng);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        trace_departure(lons[i & 1023], lats[i & 1023], 2.5, 0.142857, field, 1));
    ++i;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_TraceDeparture);

}  // namespace

BENCHMARK_MAIN();
