// Serial reference vs OpenMP kernels. Arg is the node count (or run count for batches).

#include <benchmark/benchmark.h>

#include <cmath>

#include "gpsr/graph_kernels.hpp"
#include "gpsr/random.hpp"
#include "gpsr/report.hpp"

namespace {

using namespace gpsr;

// Constant density: about 12 neighbors per node at R = 100.
std::vector<Position> layout(std::size_t n) {
  RandomStream rng(2024);
  const double side = std::sqrt(static_cast<double>(n) * 3.14159 * 100.0 * 100.0 / 12.0);
  std::vector<Position> nodes;
  for (std::size_t i = 0; i < n; ++i) nodes.push_back({rng.uniform(0, side), rng.uniform(0, side)});
  return nodes;
}

void BM_PlanarSerial(benchmark::State& state) {
  const auto nodes = layout(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(planar_edges_serial(nodes, 100.0, Planarization::GG));
}

void BM_PlanarParallel(benchmark::State& state) {
  const auto nodes = layout(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(planar_edges(nodes, 100.0, Planarization::GG));
}

void BM_CrossingsSerial(benchmark::State& state) {
  const auto nodes = layout(static_cast<std::size_t>(state.range(0)));
  const auto edges = planar_edges_serial(nodes, 100.0, Planarization::GG);
  for (auto _ : state) benchmark::DoNotOptimize(count_crossings_serial(nodes, edges));
}

void BM_CrossingsParallel(benchmark::State& state) {
  const auto nodes = layout(static_cast<std::size_t>(state.range(0)));
  const auto edges = planar_edges_serial(nodes, 100.0, Planarization::GG);
  for (auto _ : state) benchmark::DoNotOptimize(count_crossings(nodes, edges));
}

ScenarioConfig batch_config() {
  ScenarioConfig c;
  c.radio_range = 100.0;
  c.duration = 6.0;
  const auto nodes = layout(40);
  for (std::uint32_t i = 0; i < nodes.size(); ++i) c.nodes.push_back({NodeId{i}, nodes[i]});
  for (std::uint32_t i = 0; i < 20; ++i) c.flows.push_back({NodeId{i}, NodeId{39 - i}, 2.0, 0.5, 6});
  return c;
}

void BM_BatchSerial(benchmark::State& state) {
  const auto c = batch_config();
  for (auto _ : state) benchmark::DoNotOptimize(run_batch_serial(c, static_cast<std::uint32_t>(state.range(0)), false));
}

void BM_BatchParallel(benchmark::State& state) {
  const auto c = batch_config();
  for (auto _ : state) benchmark::DoNotOptimize(run_batch(c, static_cast<std::uint32_t>(state.range(0)), false));
}

}  // namespace

BENCHMARK(BM_PlanarSerial)->Arg(200)->Arg(1000)->Arg(4000);
BENCHMARK(BM_PlanarParallel)->Arg(200)->Arg(1000)->Arg(4000);
BENCHMARK(BM_CrossingsSerial)->Arg(200)->Arg(1000);
BENCHMARK(BM_CrossingsParallel)->Arg(200)->Arg(1000);
BENCHMARK(BM_BatchSerial)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchParallel)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
