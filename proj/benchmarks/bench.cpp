#include <benchmark/benchmark.h>

#include "graphcord/concurrence.hpp"
#include "graphcord/graph.hpp"
#include "graphcord/lc.hpp"
#include "graphcord/state.hpp"

using namespace graphcord;

namespace {

void BM_EnumerateLabeledGraphs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto graphs = enumerate_labeled_graphs(n);
    benchmark::DoNotOptimize(graphs);
  }
}
BENCHMARK(BM_EnumerateLabeledGraphs)->Arg(4)->Arg(5)->Arg(6);

void BM_BuildStatePhase(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g(n, (1u << Graph::pair_count(n)) - 1);  // complete graph
  for (auto _ : state) {
    auto s = build_state_phase(g);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_BuildStatePhase)->Arg(4)->Arg(5)->Arg(6);

void BM_CanonicalForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g(n, 0b10110);
  for (auto _ : state) {
    auto c = canonical_form(g);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_CanonicalForm)->Arg(5)->Arg(6);

void BM_PuritySpectrum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GraphState s = build_state_phase(Graph(n, (1u << Graph::pair_count(n)) - 1));
  for (auto _ : state) {
    auto spectrum = purity_spectrum(s);
    benchmark::DoNotOptimize(spectrum);
  }
}
BENCHMARK(BM_PuritySpectrum)->Arg(4)->Arg(5)->Arg(6);

void BM_ClassifyByConcurrence(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto classification = classify_by_concurrence(n);
    benchmark::DoNotOptimize(classification);
  }
}
BENCHMARK(BM_ClassifyByConcurrence)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_LcOrbitsQuotiented(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto report = lc_orbits(n, true);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_LcOrbitsQuotiented)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
