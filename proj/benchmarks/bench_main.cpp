#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "oddsplit/decompose.hpp"
#include "oddsplit/gf2.hpp"
#include "oddsplit/multigraph.hpp"
#include "oddsplit/oracle.hpp"
#include "oddsplit/parity.hpp"

using namespace oddsplit;

namespace {

Multigraph random_graph(int n, int m, std::uint64_t seed) {
  return generate({n, m, seed, 2, false});
}

void BM_DecomposeTwoOdd(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = 5 * n;
  const Multigraph g = random_graph(n, m, 0xbe9c);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose_two_odd(g));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_DecomposeTwoOdd)->RangeMultiplier(10)->Range(100, 10000)->Complexity();

void BM_TwoOddPartitionMatrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Multigraph g = normalize(random_graph(n, 3 * n, 0x7a11)).graph;
  for (auto _ : state) {
    benchmark::DoNotOptimize(two_odd_partition(g, Solver::Matrix));
  }
}
BENCHMARK(BM_TwoOddPartitionMatrix)->RangeMultiplier(10)->Range(100, 10000);

void BM_TwoOddPartitionGraph(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Multigraph g = normalize(random_graph(n, 3 * n, 0x7a11)).graph;
  for (auto _ : state) {
    benchmark::DoNotOptimize(two_odd_partition(g, Solver::Graph));
  }
}
BENCHMARK(BM_TwoOddPartitionGraph)->RangeMultiplier(10)->Range(100, 10000);

void BM_TJoin(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Multigraph g = generate({n, n - 1, 0x90ad, 1, true});
  // pair up the first half of the vertices
  std::vector<Vertex> targets;
  for (Vertex v = 0; v < n / 2 * 2; ++v) {
    targets.push_back(v);
  }
  const VertexSet target_set(targets);
  for (auto _ : state) {
    benchmark::DoNotOptimize(t_join(g, target_set));
  }
}
BENCHMARK(BM_TJoin)->RangeMultiplier(10)->Range(1000, 100000);

void BM_Gf2Solve(benchmark::State& state) {
  const int vars = static_cast<int>(state.range(0));
  std::mt19937_64 rng(0x6f2u);
  Gf2System system;
  system.num_vars = vars;
  for (int r = 0; r < vars; ++r) {
    BitVector coeffs(vars);
    for (int c = 0; c < vars; ++c) {
      coeffs.set(c, (rng() & 1) != 0);
    }
    system.add_row(coeffs, (rng() & 1) != 0);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(system));
  }
}
BENCHMARK(BM_Gf2Solve)->RangeMultiplier(4)->Range(64, 4096);

void BM_BruteForce(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Multigraph g = random_graph(8, m, 0xb0b);
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force(g, Mode::TwoOdd, m));
  }
}
BENCHMARK(BM_BruteForce)->DenseRange(8, 16, 4);

}  // namespace

BENCHMARK_MAIN();
