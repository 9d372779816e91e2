#include <benchmark/benchmark.h>

#include "cascade_duel/cascade.hpp"
#include "cascade_duel/centrality.hpp"
#include "cascade_duel/generators.hpp"
#include "cascade_duel/graph_stats.hpp"
#include "cascade_duel/meanfield.hpp"

using namespace cascade_duel;

namespace {

// Roughly the size of a mid-sized social graph.
const Graph& er_graph() {
  static const Graph g = gen_er(4000, 40.0, 11);
  return g;
}

void bm_propagate(benchmark::State& state) {
  const Graph& g = er_graph();
  for (auto _ : state) {
    auto f = propagate_influence(g, 0, 1);
    benchmark::DoNotOptimize(f.tracks[0].alpha.data());
  }
}
BENCHMARK(bm_propagate)->Unit(benchmark::kMillisecond);

void bm_classify(benchmark::State& state) {
  const Graph& g = er_graph();
  const auto f = propagate_influence(g, 0, 1);
  const auto theta = assign_thresholds(g, ThresholdMode::uniform(), 3);
  for (auto _ : state) {
    auto out = classify(f, theta, 5);
    benchmark::DoNotOptimize(out.supporters1.data());
  }
}
BENCHMARK(bm_classify)->Unit(benchmark::kMillisecond);

void bm_eigenvector(benchmark::State& state) {
  const Graph& g = er_graph();
  for (auto _ : state) {
    auto ec = eigenvector_centrality(g);
    benchmark::DoNotOptimize(ec.ranking.data());
  }
}
BENCHMARK(bm_eigenvector)->Unit(benchmark::kMillisecond);

void bm_rk4_trajectory(benchmark::State& state) {
  const auto init = meanfield::CompartmentState::seeded(0.0005, 0.0005);
  meanfield::IntegrationOptions o;
  o.record_stride = 0;
  o.stop_at_steady = false;
  for (auto _ : state) {
    auto tr = meanfield::integrate(init, {20.0, 10.0}, o);
    benchmark::DoNotOptimize(tr.states.back());
  }
}
BENCHMARK(bm_rk4_trajectory)->Unit(benchmark::kMillisecond);

void bm_sweep_grid(benchmark::State& state) {
  const auto init = meanfield::CompartmentState::seeded(0.0005, 0.0005);
  const auto res = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto grid = meanfield::sweep_grid(init, {0, 20}, {0, 20}, res, {}, 1);
    benchmark::DoNotOptimize(grid.cells.data());
  }
}
BENCHMARK(bm_sweep_grid)->Arg(21)->Arg(51)->Unit(benchmark::kMillisecond);

void bm_graph_stats(benchmark::State& state) {
  const Graph g = gen_er(2000, 20.0, 13);
  for (auto _ : state) {
    auto s = compute_stats(g, 1);
    benchmark::DoNotOptimize(s.diameter);
  }
}
BENCHMARK(bm_graph_stats)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
