// Wall-clock timings; lookup counts are reported as counters.

#include <benchmark/benchmark.h>

#include "tourney/algorithms.hpp"
#include "tourney/baseline.hpp"
#include "tourney/batched.hpp"
#include "tourney/generators.hpp"
#include "tourney/probabilistic.hpp"

namespace {

using namespace tourney;

void report(benchmark::State& state, const LookupStats& s) {
  state.counters["comparisons"] = static_cast<double>(s.comparisons);
  state.counters["batch_calls"] = static_cast<double>(s.batch_calls);
}

void BM_FindChampions(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto ell = static_cast<std::size_t>(state.range(1));
  const auto inst = gen_planted(n, ell, 1);
  LookupStats last;
  for (auto _ : state) {
    MatrixOracle oracle(inst.matrix);
    const auto r = find_champions(oracle);
    benchmark::DoNotOptimize(r.champions.data());
    last = r.stats;
  }
  report(state, last);
}
BENCHMARK(BM_FindChampions)->ArgsProduct({{100, 1000, 4000}, {0, 4, 16}});

void BM_FindChampionsOrdered(benchmark::State& state) {
  const auto inst = gen_planted(static_cast<std::size_t>(state.range(0)), 4, 1);
  for (auto _ : state) {
    MatrixOracle oracle(inst.matrix);
    benchmark::DoNotOptimize(find_champions(oracle, {.schedule = Schedule::order_preserving}).losses);
  }
}
BENCHMARK(BM_FindChampionsOrdered)->Arg(1000)->Arg(4000);

void BM_TopK(benchmark::State& state) {
  const auto m = gen_random(1000, 3);
  for (auto _ : state) {
    MatrixOracle oracle(m);
    benchmark::DoNotOptimize(top_k_champions(oracle, static_cast<std::size_t>(state.range(0))).losses.data());
  }
}
BENCHMARK(BM_TopK)->Arg(1)->Arg(10);

void BM_Batched(benchmark::State& state) {
  const auto inst = gen_planted(1000, 4, 1);
  LookupStats last;
  for (auto _ : state) {
    MatrixOracle oracle(inst.matrix);
    const auto r = find_champions_batched(oracle, {.batch_size = static_cast<std::size_t>(state.range(0))});
    benchmark::DoNotOptimize(r.losses);
    last = r.stats;
  }
  report(state, last);
}
BENCHMARK(BM_Batched)->RangeMultiplier(4)->Range(2, 512);

void BM_Probabilistic(benchmark::State& state) {
  const auto p = gen_random_probabilistic(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) {
    ProbabilisticOracle oracle(p);
    benchmark::DoNotOptimize(find_champions_probabilistic(oracle).losses);
  }
}
BENCHMARK(BM_Probabilistic)->Arg(200)->Arg(1000);

void BM_BruteForce(benchmark::State& state) {
  const auto inst = gen_planted(static_cast<std::size_t>(state.range(0)), 4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_champions(inst.matrix).losses.data());
}
BENCHMARK(BM_BruteForce)->Arg(100)->Arg(1000)->Arg(4000);

}  // namespace

BENCHMARK_MAIN();
