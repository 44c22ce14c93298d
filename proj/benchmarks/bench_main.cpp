#include <benchmark/benchmark.h>

#include <random>

#include "kgraph/decider.hpp"
#include "kgraph/hermite.hpp"
#include "kgraph/ktheory.hpp"
#include "kgraph/oracle.hpp"

using namespace kgraph;

namespace {

std::vector<KGraph> corpus(std::size_t n, std::size_t count) {
  std::vector<KGraph> out;
  for (std::uint64_t seed = 0; seed < count; ++seed)
    out.push_back(random_kgraph({seed, n, 2, 2, seed % 2 ? Strategy::Polynomial : Strategy::Permutation}));
  return out;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  IntMatrix m(n, n);
  std::uniform_int_distribution<long> dist(-9, 9);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

void BM_DecideCondition(benchmark::State& state) {
  const auto graphs = corpus(static_cast<std::size_t>(state.range(0)), 32);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(decide_condition(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_DecideCondition)->Arg(2)->Arg(4)->Arg(6)->Arg(10);

void BM_Classify(benchmark::State& state) {
  const auto graphs = corpus(static_cast<std::size_t>(state.range(0)), 32);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(classify(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_Classify)->Arg(3)->Arg(6);

void BM_SmithNormalForm(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<IntMatrix> ms;
  for (int t = 0; t < 16; ++t) ms.push_back(random_matrix(rng, static_cast<std::size_t>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(ms[i++ % ms.size()]));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

void BM_BoxWitnessSearch(benchmark::State& state) {
  const auto graphs = corpus(static_cast<std::size_t>(state.range(0)), 32);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(box_witness_search(graphs[i++ % graphs.size()], 2));
}
BENCHMARK(BM_BoxWitnessSearch)->Arg(3)->Arg(6);

void BM_HalphaSearcher(benchmark::State& state) {
  const auto graphs = corpus(static_cast<std::size_t>(state.range(0)), 8);
  std::size_t i = 0;
  for (auto _ : state) {
    const HalphaSearcher s(graphs[i++ % graphs.size()], 2);
    benchmark::DoNotOptimize(s.test(IntVector(static_cast<std::size_t>(state.range(0)), 1)));
  }
}
BENCHMARK(BM_HalphaSearcher)->Arg(3)->Arg(5);

}  // namespace
BENCHMARK_MAIN();
