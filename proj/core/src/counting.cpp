#include "eisen/counting.hpp"

#include <algorithm>
#include <string>
#include <thread>
#include <vector>

#include "eisen/errors.hpp"

namespace eisen {

namespace {

void check_degree(unsigned degree) {
  if (degree < 2) {
    throw InvalidArgument("degree must be at least 2, got " +
                          std::to_string(degree));
  }
}

void check_s(std::uint64_t s, const ArithSieve& sieve) {
  if (s < 1 || s > sieve.limit()) {
    throw OutOfRange("modulus " + std::to_string(s) +
                     " outside sieve range [1, " +
                     std::to_string(sieve.limit()) + "]");
  }
}

mpz_class power(std::uint64_t base, unsigned exponent) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

// Signed partial sum -sum mu(s) * term(s) over square-free s in [lo, hi].
// (2q+1)^(d-1) is cached across runs of equal q = floor(H/s).
mpz_class partial_sum(Variant variant, unsigned degree, std::uint64_t height,
                      std::uint64_t lo, std::uint64_t hi,
                      const ArithSieve& sieve) {
  mpz_class total = 0;
  mpz_class term;
  mpz_class middle;
  std::uint64_t cached_q = 0;
  bool have_cache = false;

  for (std::uint64_t s = lo; s <= hi; ++s) {
    const Factorization f = factorize(s, sieve);
    const int mu = mobius(f);
    if (mu == 0) continue;

    const std::uint64_t q = height / s;
    const std::uint64_t constant_choices = phi_bounded(f, q);
    if (constant_choices == 0) continue;

    if (!have_cache || q != cached_q) {
      middle = power(2 * q + 1, degree - 1);
      cached_q = q;
      have_cache = true;
    }
    term = middle * constant_choices;
    if (variant == Variant::general) term *= phi_bounded(f, height);

    if (mu > 0) {
      total -= term;
    } else {
      total += term;
    }
  }
  return total;
}

ExactCount count_eisenstein(Variant variant, unsigned degree,
                            std::uint64_t height, const ArithSieve& sieve,
                            const CountOptions& options) {
  check_degree(degree);
  if (height < 1) throw InvalidArgument("height must be at least 1");
  if (height > sieve.limit()) {
    throw OutOfRange("height " + std::to_string(height) +
                     " exceeds sieve limit " + std::to_string(sieve.limit()));
  }

  ExactCount result{0, degree, height, variant,
                    CountMethod::inclusion_exclusion};
  if (height < 2) return result;

  // Terms with s > H vanish, so the sum stops at H.
  const std::uint64_t count = height - 1;
  const std::uint64_t workers =
      std::clamp<std::uint64_t>(options.threads, 1, count);
  if (workers == 1) {
    result.value = partial_sum(variant, degree, height, 2, height, sieve);
    return result;
  }
  std::vector<mpz_class> partial(workers);
  {
    std::vector<std::jthread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t lo = 2 + count * w / workers;
      const std::uint64_t hi = 1 + count * (w + 1) / workers;
      pool.emplace_back([&, w, lo, hi] {
        partial[w] = partial_sum(variant, degree, height, lo, hi, sieve);
      });
    }
  }
  for (const auto& p : partial) result.value += p;
  return result;
}

}  // namespace

mpz_class count_monic_s(unsigned degree, std::uint64_t s, std::uint64_t height,
                        const ArithSieve& sieve) {
  check_degree(degree);
  check_s(s, sieve);
  const std::uint64_t q = height / s;
  return power(2 * q + 1, degree - 1) * phi_bounded(s, q, sieve);
}

mpz_class count_general_s(unsigned degree, std::uint64_t s,
                          std::uint64_t height, const ArithSieve& sieve) {
  return count_monic_s(degree, s, height, sieve) *
         phi_bounded(s, height, sieve);
}

ExactCount count_monic_eisenstein(unsigned degree, std::uint64_t height,
                                  const ArithSieve& sieve,
                                  const CountOptions& options) {
  return count_eisenstein(Variant::monic, degree, height, sieve, options);
}

ExactCount count_general_eisenstein(unsigned degree, std::uint64_t height,
                                    const ArithSieve& sieve,
                                    const CountOptions& options) {
  return count_eisenstein(Variant::general, degree, height, sieve, options);
}

}  // namespace eisen
