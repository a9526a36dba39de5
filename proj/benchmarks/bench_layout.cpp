#include <benchmark/benchmark.h>

#include "hyperlay/force_layout.hpp"
#include "hyperlay/graph.hpp"
#include "hyperlay/hmds.hpp"
#include "hyperlay/render.hpp"

using namespace hyperlay;

namespace {

Graph bench_graph(std::size_t n) { return random_graph(n, 3 * n, 1); }

SgdParams single_iteration() {
  SgdParams p;
  p.iterations = 1;
  p.record_trace = false;
  return p;
}

void BM_Apsp(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(apsp(g));
  state.SetComplexityN(state.range(0));
}

void run_iteration(benchmark::State& state, Geometry geom, bool gd) {
  const Graph g = bench_graph(static_cast<std::size_t>(state.range(0)));
  const DistanceMatrix d = apsp(g);
  const SgdParams p = single_iteration();
  const double alpha = resolve_alpha(d, geom, p);
  const Layout init = init_layout(d, InitMode::random, geom, alpha, 1);
  for (auto _ : state) {
    MdsResult r = gd ? run_gd(init, d, alpha, p) : run_sgd(init, d, alpha, p);
    benchmark::DoNotOptimize(r.layout);
  }
  state.SetComplexityN(state.range(0));
}

void BM_SgdIterationHyperbolic(benchmark::State& s) { run_iteration(s, Geometry::hyperbolic, false); }
void BM_SgdIterationEuclidean(benchmark::State& s) { run_iteration(s, Geometry::euclidean, false); }
void BM_SgdIterationSpherical(benchmark::State& s) { run_iteration(s, Geometry::spherical, false); }
void BM_GdIterationHyperbolic(benchmark::State& s) { run_iteration(s, Geometry::hyperbolic, true); }

void BM_ForcePass(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<std::size_t>(state.range(0)));
  const DistanceMatrix d = apsp(g);
  ForceParams p;
  p.max_iterations = 1;
  p.record_trace = false;
  for (auto _ : state) benchmark::DoNotOptimize(run_force(d, p, 1).layout);
  state.SetComplexityN(state.range(0));
}

void BM_RenderSvg(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<std::size_t>(state.range(0)));
  SgdParams p;
  p.seed = 1;
  p.record_trace = false;
  const Layout l = run_mds(g, Geometry::hyperbolic, p).layout;
  const RenderStyle style;
  for (auto _ : state) benchmark::DoNotOptimize(render_svg(l, g, style));
}

}  // namespace

BENCHMARK(BM_Apsp)->RangeMultiplier(2)->Range(64, 512)->Complexity();
BENCHMARK(BM_SgdIterationHyperbolic)->RangeMultiplier(2)->Range(64, 512)->Complexity()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SgdIterationEuclidean)->RangeMultiplier(2)->Range(64, 512)->Complexity()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SgdIterationSpherical)->RangeMultiplier(2)->Range(64, 512)->Complexity()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GdIterationHyperbolic)->RangeMultiplier(2)->Range(64, 512)->Complexity()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ForcePass)->RangeMultiplier(2)->Range(64, 512)->Complexity()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RenderSvg)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
