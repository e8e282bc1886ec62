#include "eisen/arith.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "eisen/errors.hpp"

namespace eisen {

namespace {

void check_range(std::uint64_t n, const ArithSieve& sieve) {
  if (n < 1 || n > sieve.limit()) {
    throw OutOfRange("argument " + std::to_string(n) +
                     " outside sieve range [1, " +
                     std::to_string(sieve.limit()) + "]");
  }
}

// Walks the square-free divisors of the product of `primes`, yielding
// (divisor, mobius(divisor)).
template <typename Fn>
void for_each_squarefree_divisor(std::span<const PrimePower> primes, Fn&& fn) {
  const std::size_t k = primes.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::uint64_t divisor = 1;
    int sign = 1;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        divisor *= primes[i].prime;
        sign = -sign;
      }
    }
    fn(divisor, sign);
  }
}

}  // namespace

std::uint64_t Factorization::value() const {
  std::uint64_t v = 1;
  for (const auto& [p, e] : pairs) {
    for (unsigned i = 0; i < e; ++i) v *= p;
  }
  return v;
}

bool Factorization::square_free() const {
  for (const auto& pp : pairs) {
    if (pp.exponent > 1) return false;
  }
  return true;
}

std::size_t ArithSieve::estimated_bytes(std::uint64_t limit) noexcept {
  const double n = static_cast<double>(limit);
  // pi(n) < 1.25506 n / ln n for n > 1
  const double prime_bound = limit < 3 ? 2.0 : 1.25506 * n / std::log(n) + 1.0;
  return sizeof(std::uint32_t) *
         (static_cast<std::size_t>(limit) + 1 +
          static_cast<std::size_t>(prime_bound));
}

ArithSieve::ArithSieve(std::uint64_t limit, std::size_t memory_budget)
    : limit_(limit) {
  if (limit < 2) {
    throw InvalidArgument("sieve limit must be at least 2, got " +
                          std::to_string(limit));
  }
  if (limit >= std::numeric_limits<std::uint32_t>::max()) {
    throw ResourceError("sieve limit " + std::to_string(limit) +
                        " exceeds the 32-bit table range");
  }
  if (estimated_bytes(limit) > memory_budget) {
    throw ResourceError("sieve limit " + std::to_string(limit) + " needs ~" +
                        std::to_string(estimated_bytes(limit)) +
                        " bytes, over the memory budget of " +
                        std::to_string(memory_budget));
  }

  spf_.assign(limit + 1, 0);
  primes_.reserve(static_cast<std::size_t>(
      limit < 3 ? 2 : 1.25506 * limit / std::log(double(limit)) + 1));
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes_.push_back(static_cast<std::uint32_t>(i));
    }
    const std::uint32_t lp = spf_[i];
    for (const std::uint32_t p : primes_) {
      if (p > lp || i * p > limit) break;
      spf_[i * p] = p;
    }
  }
}

std::uint64_t ArithSieve::spf(std::uint64_t n) const {
  if (n < 2 || n > limit_) {
    throw OutOfRange("spf argument " + std::to_string(n) +
                     " outside sieve range [2, " + std::to_string(limit_) +
                     "]");
  }
  return spf_[n];
}

bool ArithSieve::is_prime(std::uint64_t n) const {
  return n >= 2 && n <= limit_ && spf_[n] == n;
}

ArithSieve build_sieve(std::uint64_t limit, std::size_t memory_budget) {
  return ArithSieve(limit, memory_budget);
}

Factorization factorize(std::uint64_t n, const ArithSieve& sieve) {
  check_range(n, sieve);
  Factorization f;
  while (n > 1) {
    const std::uint64_t p = sieve.spf(n);
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.pairs.push_back({p, e});
  }
  return f;
}

int mobius(const Factorization& f) noexcept {
  if (!f.square_free()) return 0;
  return f.pairs.size() % 2 == 0 ? 1 : -1;
}

std::uint64_t euler_phi(const Factorization& f) noexcept {
  std::uint64_t phi = 1;
  for (const auto& [p, e] : f.pairs) {
    phi *= p - 1;
    for (unsigned i = 1; i < e; ++i) phi *= p;
  }
  return phi;
}

int mobius(std::uint64_t n, const ArithSieve& sieve) {
  check_range(n, sieve);
  int sign = 1;
  while (n > 1) {
    const std::uint64_t p = sieve.spf(n);
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return sign;
}

std::uint64_t euler_phi(std::uint64_t n, const ArithSieve& sieve) {
  return euler_phi(factorize(n, sieve));
}

unsigned omega(std::uint64_t n, const ArithSieve& sieve) {
  return static_cast<unsigned>(factorize(n, sieve).pairs.size());
}

std::uint64_t radical(std::uint64_t n, const ArithSieve& sieve) {
  std::uint64_t r = 1;
  for (const auto& pp : factorize(n, sieve).pairs) r *= pp.prime;
  return r;
}

std::uint64_t divisor_count(std::uint64_t n, const ArithSieve& sieve) {
  std::uint64_t tau = 1;
  for (const auto& pp : factorize(n, sieve).pairs) tau *= pp.exponent + 1;
  return tau;
}

std::uint64_t phi_bounded(const Factorization& s, std::uint64_t bound) {
  if (bound > (std::uint64_t{1} << 61)) {
    throw InvalidArgument("phi_bounded bound too large: " +
                          std::to_string(bound));
  }
  std::int64_t total = 0;
  for_each_squarefree_divisor(s.pairs, [&](std::uint64_t e, int mu) {
    total += mu * static_cast<std::int64_t>(2 * (bound / e) + 1);
  });
  return static_cast<std::uint64_t>(total);
}

std::uint64_t phi_bounded(std::uint64_t s, std::uint64_t bound,
                          const ArithSieve& sieve) {
  return phi_bounded(factorize(s, sieve), bound);
}

}  // namespace eisen
