// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "corrclust/experiment.hpp"
#include "corrclust/oracle.hpp"
#include "corrclust/simplex.hpp"

using namespace corrclust;

namespace {

WeightedInstance random_graph_instance(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PairTable<bool> pos(n, false);
  for_each_pair(n, [&](Vertex u, Vertex v) { pos(u, v) = rng() % 2 == 0; });
  return SignedGraph(std::move(pos)).to_instance(2);
}

void BM_OracleSerial(benchmark::State& state) {
  auto inst = random_graph_instance(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(optimal_clustering_serial(inst).best_cost.total);
}

void BM_OracleParallel(benchmark::State& state) {
  auto inst = random_graph_instance(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(optimal_clustering(inst).best_cost.total);
}

void BM_TrialsSerial(benchmark::State& state) {
  auto inst = random_graph_instance(8, 2);
  auto spec = AlgorithmSpec::parse("bounded_cc_pivot:greedy");
  double opt = optimal_clustering(inst, {.hard_bound = true}).best_cost.total;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        empirical_ratio_serial(spec, inst, static_cast<std::uint64_t>(state.range(0)), 3, {.opt_cost = opt}).mean_cost);
}

void BM_TrialsParallel(benchmark::State& state) {
  auto inst = random_graph_instance(8, 2);
  auto spec = AlgorithmSpec::parse("bounded_cc_pivot:greedy");
  double opt = optimal_clustering(inst, {.hard_bound = true}).best_cost.total;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        empirical_ratio(spec, inst, static_cast<std::uint64_t>(state.range(0)), 3, {.opt_cost = opt}).mean_cost);
}

// Each iteration restores `fresh` first; the copy is the same for both kernels.
struct Tableau {
  std::size_t rows, stride;
  std::vector<double> cells, fresh;
  std::vector<std::size_t> cols;

  explicit Tableau(std::size_t n) : rows(n), stride(n), cells(n * n), cols(n) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (auto& c : cells) c = d(rng);
    for (std::size_t j = 0; j < n; ++j) cells[j] /= cells[0];
    std::iota(cols.begin(), cols.end(), 0);
    fresh = cells;
  }
};

void BM_EliminateSerial(benchmark::State& state) {
  Tableau t(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    std::copy(t.fresh.begin(), t.fresh.end(), t.cells.begin());
    kernels::eliminate_serial(t.cells, t.rows, t.stride, 0, 0, t.cols);
    benchmark::ClobberMemory();
  }
}

void BM_EliminateParallel(benchmark::State& state) {
  Tableau t(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    std::copy(t.fresh.begin(), t.fresh.end(), t.cells.begin());
    kernels::eliminate_parallel(t.cells, t.rows, t.stride, 0, 0, t.cols);
    benchmark::ClobberMemory();
  }
}

}  // namespace

BENCHMARK(BM_OracleSerial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrialsSerial)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrialsParallel)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EliminateSerial)->Arg(256)->Arg(1024);
BENCHMARK(BM_EliminateParallel)->Arg(256)->Arg(1024);

BENCHMARK_MAIN();
