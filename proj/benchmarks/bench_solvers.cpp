#include <benchmark/benchmark.h>

#include <random>

#include "femtonc/femtonc.hpp"

using namespace femtonc;

namespace {

Graph random_graph(int n, double p, std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (edge(rng)) g.add_edge(u, v);
  return g;
}

ScenarioParams small_network(int U)
{
  ScenarioParams p;
  p.F = 10;
  p.C = 2;
  p.U = U;
  p.sigma_c = 0.7;
  p.sigma_u = 0.1;
  p.fc_radius = 120;
  return p;
}

}  // namespace

static void BM_MisExact(benchmark::State& st)
{
  Graph g = random_graph(static_cast<int>(st.range(0)), 0.5, 1);
  for (auto _ : st) benchmark::DoNotOptimize(mis_exact(g, 64));
}
BENCHMARK(BM_MisExact)->Arg(16)->Arg(32)->Arg(48);

static void BM_Gvs(benchmark::State& st)
{
  Graph g = random_graph(static_cast<int>(st.range(0)), 0.5, 2);
  for (auto _ : st) benchmark::DoNotOptimize(gvs(g));
}
BENCHMARK(BM_Gvs)->Arg(50)->Arg(200)->Arg(800);

static void BM_Ggc(benchmark::State& st)
{
  Graph g = random_graph(static_cast<int>(st.range(0)), 0.9, 3);
  for (auto _ : st) benchmark::DoNotOptimize(ggc(g));
}
BENCHMARK(BM_Ggc)->Arg(50)->Arg(200)->Arg(800);

static void BM_ExactColoring(benchmark::State& st)
{
  Graph g = random_graph(static_cast<int>(st.range(0)), 0.5, 4);
  for (auto _ : st) benchmark::DoNotOptimize(exact_coloring(g, 32));
}
BENCHMARK(BM_ExactColoring)->Arg(10)->Arg(16)->Arg(22);

static void BM_DualGraph(benchmark::State& st)
{
  ScenarioParams p;
  p.F = 100;
  p.C = 32;
  p.U = static_cast<int>(st.range(0));
  p.sigma_c = 0.5;
  p.sigma_u = 0.1;
  p.fc_radius = 200;
  p.mbs_radius = 350;
  Scenario s = generate_scenario(p);
  for (auto _ : st) benchmark::DoNotOptimize(build_dual_conflict_graph(s));
}
BENCHMARK(BM_DualGraph)->Arg(50)->Arg(150);

static void BM_OncSchedule(benchmark::State& st)
{
  Scenario s = generate_scenario(small_network(static_cast<int>(st.range(0))));
  SchedulerPolicy pol = parse_policy(st.range(1) ? "exact-exact" : "gvs-ggc");
  pol.mis_cap = 64;
  pol.chromatic_cap = 32;
  for (auto _ : st) benchmark::DoNotOptimize(onc_broadcast_schedule(s, pol));
}
BENCHMARK(BM_OncSchedule)->Args({10, 0})->Args({25, 0})->Args({10, 1})->Args({25, 1});

BENCHMARK_MAIN();
