#include <benchmark/benchmark.h>

#include "thue/hypercube.hpp"
#include "thue/paths.hpp"
#include "thue/reductions.hpp"
#include "thue/solver.hpp"
#include "thue/word.hpp"

using namespace thue;

static void BM_SquarePathHypercube(benchmark::State& state) {
  const auto q = build_hypercube(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_square_path(q.graph, q.coloring));
}
BENCHMARK(BM_SquarePathHypercube)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_SquarePathCliqueK8(benchmark::State& state) {
  const auto c = group_clique_coloring(3);
  const SearchOptions opt{std::nullopt, static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(find_square_path(c.graph, c.coloring, opt));
}
BENCHMARK(BM_SquarePathCliqueK8)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_EnumerateQ3(benchmark::State& state) {
  ThueQuery q;
  q.graph = build_hypercube(3).graph;
  q.palette_size = 3;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_colorings(q));
}
BENCHMARK(BM_EnumerateQ3)->Unit(benchmark::kMillisecond);

static void BM_ClamK33(benchmark::State& state) {
  std::vector<Edge> e;
  for (VertexId a = 0; a < 3; ++a) {
    for (VertexId b = 3; b < 6; ++b) e.push_back({a, b});
  }
  ThueQuery q;
  q.graph = reduce_edgecoloring_clam(Graph(6, e)).graph;
  q.palette_size = 6;
  q.max_half_len = 2;
  for (auto _ : state) benchmark::DoNotOptimize(decide_thue(q));
}
BENCHMARK(BM_ClamK33)->Unit(benchmark::kMillisecond);

static void BM_SquarefreeWord(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(squarefree_ternary_word(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_SquarefreeWord)->Arg(1000)->Arg(100000);

static void BM_FindSquare(benchmark::State& state) {
  const auto w = squarefree_ternary_word(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_square(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FindSquare)->RangeMultiplier(2)->Range(256, 4096)->Complexity(benchmark::oNSquared);

static void BM_ReduceQbfThue(benchmark::State& state) {
  const QBFInstance q{{1}, {2}, {2, {{1, 2}, {-1, -2}}}};
  for (auto _ : state) benchmark::DoNotOptimize(reduce_qbf_thue(q));
}
BENCHMARK(BM_ReduceQbfThue)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
