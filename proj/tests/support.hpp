#pragma once

#include <cstdint>
#include <vector>

#include "eisen/arith.hpp"

namespace eisen::test {

/// Shared sieve large enough for 10,000 primes and S = 10^6 series.
inline const ArithSieve& shared_sieve() {
  static const ArithSieve sieve(1'000'000);
  return sieve;
}

/// Plain Eratosthenes, independent of the linear sieve under test.
inline std::vector<std::uint64_t> reference_primes(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

/// Deterministic 64-bit generator for property tests.
class SplitMix {
 public:
  explicit SplitMix(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

}  // namespace eisen::test
