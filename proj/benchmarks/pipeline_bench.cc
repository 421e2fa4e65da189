// Helper-set construction and the walker DP on one block.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "udc/blocksolver.h"
#include "udc/dp.h"
#include "udc/instance.h"

namespace udc {
namespace {

// Disks in three clusters of the given spread, one point per disk.
Instance Clusters(int n, double spread) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Instance inst;
  Point centers[3] = {{1.0, 1.0}, {2.2, 1.4}, {1.5, 2.4}};
  for (int i = 0; i < n; ++i) {
    Point c = centers[i % 3];
    Point p = {c.x + spread * (u(rng) - 0.5), c.y + spread * (u(rng) - 0.5)};
    inst.disks.push_back({i, p, 1.0 + std::floor(10.0 * u(rng))});
    double r = 0.999 * std::sqrt(u(rng)), th = kTwoPi * u(rng);
    inst.points.push_back({p.x + r * std::cos(th), p.y + r * std::sin(th)});
  }
  return inst;
}

void BM_EvaluateEmptyGuess(benchmark::State& state) {
  Instance inst = Clusters(static_cast<int>(state.range(0)), 0.8);
  BlockConfig config;
  config.prune_dominated = false;
  int failures = 0;
  for (auto _ : state) {
    GuessEvaluation ev = EvaluateGuess(inst, {-2, -2, 7}, {}, config);
    failures += ev.ok ? 0 : 1;
    benchmark::DoNotOptimize(ev);
  }
  state.counters["failures"] = failures;
}
BENCHMARK(BM_EvaluateEmptyGuess)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

// Staircase of caps over one baseline: each arc crosses its successor.
DpProblem Staircase(int arcs) {
  DpSubstructure s;
  for (int i = 0; i < arcs; ++i) {
    DpArc a;
    a.disk = i;
    a.weight = 1.0 + (i % 3);
    a.start = 0.5 * i;
    a.end = 0.5 * i + 1.2;
    a.length = 2.0;
    a.points = {i};
    s.arcs.push_back(a);
    if (i > 0) s.crossings.push_back({i - 1, i, 1.5, 0.5});
  }
  return {{s}};
}

void BM_DpStaircase(benchmark::State& state) {
  DpProblem p = Staircase(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(SolveComponent(p));
}
BENCHMARK(BM_DpStaircase)->Arg(8)->Arg(32)->Arg(128);

}  // namespace
}  // namespace udc
