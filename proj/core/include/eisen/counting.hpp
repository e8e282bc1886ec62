#pragma once

#include <cstdint>

#include <gmpxx.h>

#include "eisen/arith.hpp"
#include "eisen/exact_count.hpp"

namespace eisen {

/// Number of monic degree-d polynomials of height <= H with s | a_i for
/// i < d and gcd(a_0 / s, s) = 1:
///   (2 floor(H/s) + 1)^(d-1) * phi_bounded(s, floor(H/s)).
[[nodiscard]] mpz_class count_monic_s(unsigned degree, std::uint64_t s,
                                      std::uint64_t height,
                                      const ArithSieve& sieve);

/// As count_monic_s, with the leading coefficient free in [-H, H] and
/// coprime to s; contributes the extra factor phi_bounded(s, H).
[[nodiscard]] mpz_class count_general_s(unsigned degree, std::uint64_t s,
                                        std::uint64_t height,
                                        const ArithSieve& sieve);

struct CountOptions {
  /// Contiguous s-blocks evaluated concurrently; the result does not depend
  /// on this value.
  unsigned threads = 1;
};

/// E_d(H) = -sum_{s=2..H} mu(s) * count_monic_s(d, s, H).
[[nodiscard]] ExactCount count_monic_eisenstein(unsigned degree,
                                                std::uint64_t height,
                                                const ArithSieve& sieve,
                                                const CountOptions& options = {});

/// F_d(H) = -sum_{s=2..H} mu(s) * count_general_s(d, s, H).
[[nodiscard]] ExactCount count_general_eisenstein(
    unsigned degree, std::uint64_t height, const ArithSieve& sieve,
    const CountOptions& options = {});

}  // namespace eisen
