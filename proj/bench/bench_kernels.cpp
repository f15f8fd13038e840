#include <benchmark/benchmark.h>

#include "hypercone/gallery.hpp"
#include "hypercone/kernels.hpp"

using namespace hypercone;

namespace {

HyperCone cone_for(int which) {
  switch (which) {
    case 0: return orthant(6);
    case 1: return psd(4);
    default: return soc(5);
  }
}

template <ExecPolicy P>
void min_eigenvalue(benchmark::State& state) {
  HyperCone c = cone_for(static_cast<int>(state.range(0)));
  PointBatch pts = gaussian_points(c.dim(), static_cast<int>(state.range(1)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(batch_min_eigenvalue(c, pts, P));
  state.SetItemsProcessed(state.iterations() * state.range(1));
  state.SetLabel(c.label());
}

template <ExecPolicy P>
void contains_by_inequalities(benchmark::State& state) {
  HyperCone c = cone_for(static_cast<int>(state.range(0)));
  PointBatch pts = gaussian_points(c.dim(), static_cast<int>(state.range(1)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(batch_contains_by_inequalities(c, 1, pts, kZeroTol, P));
  state.SetItemsProcessed(state.iterations() * state.range(1));
  state.SetLabel(c.label());
}

void args(benchmark::internal::Benchmark* b) {
  for (int cone = 0; cone < 3; ++cone) b->Args({cone, 4096});
}

}  // namespace

BENCHMARK(min_eigenvalue<ExecPolicy::Serial>)->Apply(args)->Unit(benchmark::kMillisecond);
BENCHMARK(min_eigenvalue<ExecPolicy::Parallel>)->Apply(args)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(contains_by_inequalities<ExecPolicy::Serial>)->Apply(args)->Unit(benchmark::kMillisecond);
BENCHMARK(contains_by_inequalities<ExecPolicy::Parallel>)->Apply(args)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
