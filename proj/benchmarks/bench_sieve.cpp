#include <benchmark/benchmark.h>

#include "eisen/arith.hpp"

static void BM_BuildSieve(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    eisen::ArithSieve sieve(limit);
    benchmark::DoNotOptimize(sieve.primes().size());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildSieve)->RangeMultiplier(10)->Range(10'000, 10'000'000)
    ->Unit(benchmark::kMillisecond);

static void BM_PhiBounded(benchmark::State& state) {
  static const eisen::ArithSieve sieve(1'000'000);
  std::uint64_t s = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eisen::phi_bounded(s, 1'000'000 / s, sieve));
    s = s == 1'000'000 ? 2 : s + 1;
  }
}
BENCHMARK(BM_PhiBounded);
