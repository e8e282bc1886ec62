#include <benchmark/benchmark.h>

#include "eisen/density.hpp"

namespace {

const eisen::ArithSieve& sieve() {
  static const eisen::ArithSieve s(1'000'000);
  return s;
}

}  // namespace

static void BM_ThetaProduct(benchmark::State& state) {
  const auto primes = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        eisen::theta_product(2, eisen::Truncation::primes(primes), sieve()));
  }
}
BENCHMARK(BM_ThetaProduct)->Arg(1'000)->Arg(10'000)->Arg(78'498)
    ->Unit(benchmark::kMillisecond);

static void BM_RhoSeries(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eisen::rho_series(2, limit, sieve()));
  }
}
BENCHMARK(BM_RhoSeries)->Arg(10'000)->Arg(100'000)->Arg(1'000'000)
    ->Unit(benchmark::kMillisecond);

static void BM_Precision(benchmark::State& state) {
  const auto bits = static_cast<mpfr_prec_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eisen::theta_product(
        3, eisen::Truncation::primes(10'000), sieve(), bits));
  }
}
BENCHMARK(BM_Precision)->Arg(64)->Arg(128)->Arg(512)
    ->Unit(benchmark::kMillisecond);
