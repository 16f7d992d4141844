// Microbenchmarks for the hot paths: sampling, distance sweeps, rainbow
// reachability, enumeration, danger detection and full repair, plus the
// exact search on a small cycle. Fixed seeds keep runs comparable.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "rainbow/colouring.hpp"
#include "rainbow/gnp.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/rc_exact.hpp"
#include "rainbow/repair.hpp"
#include "rainbow/rng.hpp"
#include "rainbow/thresholds.hpp"

namespace {

rainbow::Graph cycle(int n) {
  std::vector<rainbow::Edge> edges;
  for (int i = 0; i < n; ++i)
    edges.push_back({i, (i + 1) % n});
  return rainbow::Graph::from_edges(n, std::move(edges));
}

double threshold_p(int n, double multiplier) {
  return multiplier * rainbow::conjectured_threshold(n, 3, 0.0);
}

void BM_GnpGenerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const double p = threshold_p(n, 1.0);
  std::uint64_t seed = 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(rainbow::gnp_generate(n, p, seed++));
}
BENCHMARK(BM_GnpGenerate)->Arg(100)->Arg(300)->Arg(1000);

void BM_Diameter(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const rainbow::Graph g = rainbow::gnp_generate(n, threshold_p(n, 1.5), 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(rainbow::diameter(g));
}
BENCHMARK(BM_Diameter)->Arg(100)->Arg(300);

void BM_RainbowReachability(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const rainbow::Graph g = rainbow::gnp_generate(n, threshold_p(n, 1.5), 7);
  const rainbow::EdgeColouring c = rainbow::random_colouring(g, 3, 11);
  for (auto _ : state)
    benchmark::DoNotOptimize(rainbow::rainbow_reachable_from(c, 0));
}
BENCHMARK(BM_RainbowReachability)->Arg(100)->Arg(300);

void BM_EnumerateRainbowPaths(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const rainbow::Graph g = rainbow::gnp_generate(n, threshold_p(n, 1.5), 7);
  const rainbow::EdgeColouring c = rainbow::random_colouring(g, 3, 11);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        rainbow::enumerate_rainbow_r_paths(c, 0, n - 1, 3, 1 << 20));
}
BENCHMARK(BM_EnumerateRainbowPaths)->Arg(100)->Arg(300);

void BM_DetectDangerousPairs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const rainbow::Graph g = rainbow::gnp_generate(n, threshold_p(n, 1.5), 7);
  const rainbow::EdgeColouring c = rainbow::random_colouring(g, 3, 11);
  for (auto _ : state)
    benchmark::DoNotOptimize(rainbow::detect_dangerous_pairs(c, 3, 1));
}
BENCHMARK(BM_DetectDangerousPairs)->Arg(100)->Arg(200);

void BM_RepairColouring(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const rainbow::Graph g = rainbow::gnp_generate(n, threshold_p(n, 1.5), 7);
  std::uint64_t seed = 11;
  for (auto _ : state)
    benchmark::DoNotOptimize(rainbow::repair_colouring(g, seed++, 3, 1, 50));
}
BENCHMARK(BM_RepairColouring)->Arg(100)->Arg(200);

void BM_RcExactCycle(benchmark::State& state) {
  const rainbow::Graph g = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(rainbow::rc_exact(g));
}
BENCHMARK(BM_RcExactCycle)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
