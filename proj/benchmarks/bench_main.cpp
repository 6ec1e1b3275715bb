#include <benchmark/benchmark.h>

#include "conncraft/connectivity.hpp"
#include "conncraft/decomp.hpp"
#include "conncraft/isomorphism.hpp"
#include "conncraft/named_graphs.hpp"
#include "conncraft/series.hpp"
#include "conncraft/synth.hpp"

using namespace conncraft;

namespace {

Graph generated(std::size_t k, std::size_t steps) { return replay(generate(7, k, steps)); }

// Relabels by reversing ids, so isomorphism has to do real work.
Graph reversed(const Graph& g) {
  VertexMap map;
  const auto ids = g.vertices();
  for (std::size_t i = 0; i < ids.size(); ++i) map[ids[i]] = ids[ids.size() - 1 - i];
  return relabel(g, map);
}

void BM_VertexConnectivity(benchmark::State& state) {
  const Graph g = generated(3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(vertex_connectivity(g));
  state.counters["n"] = static_cast<double>(g.num_vertices());
}
BENCHMARK(BM_VertexConnectivity)->Arg(4)->Arg(16)->Arg(64);

void BM_Core(benchmark::State& state) {
  const Graph g = generated(2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(core(g).core().num_vertices());
  state.counters["n"] = static_cast<double>(g.num_vertices());
}
BENCHMARK(BM_Core)->Arg(8)->Arg(32)->Arg(128);

void BM_Isomorphism(benchmark::State& state) {
  const Graph g = generated(3, static_cast<std::size_t>(state.range(0)));
  const Graph h = reversed(g);
  for (auto _ : state) benchmark::DoNotOptimize(are_isomorphic(g, h).has_value());
  state.counters["n"] = static_cast<double>(g.num_vertices());
}
BENCHMARK(BM_Isomorphism)->Arg(4)->Arg(16)->Arg(32);

void BM_Petersen(benchmark::State& state) {
  const Graph g = named::petersen();
  const Graph h = reversed(g);
  for (auto _ : state) benchmark::DoNotOptimize(are_isomorphic(g, h).has_value());
}
BENCHMARK(BM_Petersen);

void BM_Decompose3(benchmark::State& state) {
  const Graph g = generated(3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decompose_3(g).trace.steps.size());
  state.counters["n"] = static_cast<double>(g.num_vertices());
}
BENCHMARK(BM_Decompose3)->Arg(2)->Arg(4)->Arg(8);

void BM_EarDecompose(benchmark::State& state) {
  const Graph g = generated(2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ear_decompose_2(g).trace.steps.size());
  state.counters["n"] = static_cast<double>(g.num_vertices());
}
BENCHMARK(BM_EarDecompose)->Arg(8)->Arg(32);

}  // namespace
BENCHMARK_MAIN();
