#include <benchmark/benchmark.h>

#include "eisen/counting.hpp"
#include "eisen/oracle.hpp"

namespace {

const eisen::ArithSieve& sieve() {
  static const eisen::ArithSieve s(10'000'000);
  return s;
}

}  // namespace

static void BM_CountMonic(benchmark::State& state) {
  const auto h = static_cast<std::uint64_t>(state.range(1));
  const auto d = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eisen::count_monic_eisenstein(d, h, sieve()));
  }
}
BENCHMARK(BM_CountMonic)
    ->ArgsProduct({{2, 3, 8}, {10'000, 1'000'000, 10'000'000}})
    ->Unit(benchmark::kMillisecond);

static void BM_CountGeneral(benchmark::State& state) {
  const auto h = static_cast<std::uint64_t>(state.range(1));
  const auto d = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eisen::count_general_eisenstein(d, h, sieve()));
  }
}
BENCHMARK(BM_CountGeneral)
    ->ArgsProduct({{2, 3}, {10'000, 1'000'000}})
    ->Unit(benchmark::kMillisecond);

static void BM_BruteGeneral(benchmark::State& state) {
  const auto h = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eisen::brute_count_general(3, h));
  }
  state.SetItemsProcessed(
      state.iterations() *
      static_cast<std::int64_t>(
          eisen::enumeration_size(eisen::Variant::general, 3, h)));
}
BENCHMARK(BM_BruteGeneral)->Arg(10)->Arg(25)->Unit(benchmark::kMillisecond);
