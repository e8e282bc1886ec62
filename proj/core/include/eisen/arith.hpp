#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace eisen {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes. Empty for n = 1.
struct Factorization {
  std::vector<PrimePower> pairs;

  [[nodiscard]] std::uint64_t value() const;
  [[nodiscard]] bool square_free() const;
};

/// Smallest-prime-factor table over [2, limit], built by a linear sieve.
/// Immutable after construction, so one instance may be shared across threads.
class ArithSieve {
 public:
  static constexpr std::uint64_t kDefaultLimit = 10'000'000;
  static constexpr std::size_t kDefaultMemoryBudget = std::size_t{1} << 30;

  /// Throws InvalidArgument for limit < 2 and ResourceError when the table
  /// would not fit in memory_budget bytes.
  explicit ArithSieve(std::uint64_t limit,
                      std::size_t memory_budget = kDefaultMemoryBudget);

  [[nodiscard]] std::uint64_t limit() const noexcept { return limit_; }
  [[nodiscard]] std::span<const std::uint32_t> primes() const noexcept {
    return primes_;
  }

  /// Smallest prime factor of 2 <= n <= limit.
  [[nodiscard]] std::uint64_t spf(std::uint64_t n) const;
  [[nodiscard]] bool is_prime(std::uint64_t n) const;

  /// Bytes a sieve of the given limit occupies, used for budget checks.
  static std::size_t estimated_bytes(std::uint64_t limit) noexcept;

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

[[nodiscard]] ArithSieve build_sieve(
    std::uint64_t limit,
    std::size_t memory_budget = ArithSieve::kDefaultMemoryBudget);

// All functions below require 1 <= n <= sieve.limit() and throw OutOfRange
// otherwise.
[[nodiscard]] Factorization factorize(std::uint64_t n, const ArithSieve& sieve);
[[nodiscard]] int mobius(std::uint64_t n, const ArithSieve& sieve);
[[nodiscard]] std::uint64_t euler_phi(std::uint64_t n, const ArithSieve& sieve);
[[nodiscard]] unsigned omega(std::uint64_t n, const ArithSieve& sieve);
[[nodiscard]] std::uint64_t radical(std::uint64_t n, const ArithSieve& sieve);
/// Number of divisors, computed from the factorization.
[[nodiscard]] std::uint64_t divisor_count(std::uint64_t n,
                                          const ArithSieve& sieve);

// Factorization-based variants for callers that already hold the factors.
[[nodiscard]] int mobius(const Factorization& f) noexcept;
[[nodiscard]] std::uint64_t euler_phi(const Factorization& f) noexcept;

/// Count of integers a with |a| <= bound and gcd(a, s) = 1, where
/// gcd(0, s) = s. Exact: sum of mu(e) * (2 floor(bound / e) + 1) over the
/// square-free divisors e of s.
[[nodiscard]] std::uint64_t phi_bounded(std::uint64_t s, std::uint64_t bound,
                                        const ArithSieve& sieve);
[[nodiscard]] std::uint64_t phi_bounded(const Factorization& s,
                                        std::uint64_t bound);

}  // namespace eisen
