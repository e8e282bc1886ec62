#pragma once

#include <cstdint>
#include <string_view>

#include "eisen/arith.hpp"
#include "eisen/bigfloat.hpp"

namespace eisen {

// theta_d = 1 - prod_p (1 - (p-1)/p^(d+1))   (monic density)
// rho_d   = 1 - prod_p (1 - (p-1)^2/p^(d+2)) (general density)
enum class DensityKind { theta, rho };
enum class DensityMethod { euler_product, mobius_series };

[[nodiscard]] std::string_view to_string(DensityKind k) noexcept;
[[nodiscard]] std::string_view to_string(DensityMethod m) noexcept;

struct Truncation {
  enum class Kind { prime_count, prime_limit, series_limit };

  Kind kind;
  std::uint64_t bound;

  static constexpr Truncation primes(std::uint64_t count) noexcept {
    return {Kind::prime_count, count};
  }
  static constexpr Truncation primes_up_to(std::uint64_t limit) noexcept {
    return {Kind::prime_limit, limit};
  }
  static constexpr Truncation series(std::uint64_t limit) noexcept {
    return {Kind::series_limit, limit};
  }
};

[[nodiscard]] std::string_view to_string(Truncation::Kind k) noexcept;

inline constexpr std::uint64_t kDefaultPrimeCount = 10'000;
inline constexpr std::uint64_t kDefaultSeriesLimit = 1'000'000;

/// Point value of a truncated product or series together with a rigorous
/// enclosure [lower, upper] of the infinite limit. The enclosure covers both
/// the omitted tail and every rounding step (evaluated with directed
/// rounding).
struct DensityEstimate {
  DensityKind kind;
  unsigned degree;
  BigFloat value;
  BigFloat lower;
  BigFloat upper;
  Truncation truncation;
  DensityMethod method;

  [[nodiscard]] bool overlaps(const DensityEstimate& other) const noexcept {
    return lower <= other.upper && other.lower <= upper;
  }
};

/// Truncated Euler product. The omitted primes p > P contribute a factor in
/// [exp(-T), 1] with T = 2 / ((d-1) P^(d-1)), using -log(1-x) <= 2x for
/// x <= 1/2. Throws InvalidArgument for d < 2, a series truncation, or a
/// precision below BigFloat::kMinPrecision; OutOfRange when the sieve lacks
/// the requested primes.
[[nodiscard]] DensityEstimate density_product(
    DensityKind kind, unsigned degree, Truncation truncation,
    const ArithSieve& sieve,
    mpfr_prec_t precision = BigFloat::kDefaultPrecision);

/// -sum_{s=2..S} mu(s) phi(s)^k / s^(d+k) with k = 1 (theta) or 2 (rho); the
/// tail is bounded by sum_{s>S} 1/s^d <= 1/((d-1) S^(d-1)).
[[nodiscard]] DensityEstimate density_series(
    DensityKind kind, unsigned degree, std::uint64_t series_limit,
    const ArithSieve& sieve,
    mpfr_prec_t precision = BigFloat::kDefaultPrecision);

[[nodiscard]] inline DensityEstimate theta_product(
    unsigned degree, Truncation truncation, const ArithSieve& sieve,
    mpfr_prec_t precision = BigFloat::kDefaultPrecision) {
  return density_product(DensityKind::theta, degree, truncation, sieve,
                         precision);
}
[[nodiscard]] inline DensityEstimate rho_product(
    unsigned degree, Truncation truncation, const ArithSieve& sieve,
    mpfr_prec_t precision = BigFloat::kDefaultPrecision) {
  return density_product(DensityKind::rho, degree, truncation, sieve,
                         precision);
}
[[nodiscard]] inline DensityEstimate theta_series(
    unsigned degree, std::uint64_t series_limit, const ArithSieve& sieve,
    mpfr_prec_t precision = BigFloat::kDefaultPrecision) {
  return density_series(DensityKind::theta, degree, series_limit, sieve,
                        precision);
}
[[nodiscard]] inline DensityEstimate rho_series(
    unsigned degree, std::uint64_t series_limit, const ArithSieve& sieve,
    mpfr_prec_t precision = BigFloat::kDefaultPrecision) {
  return density_series(DensityKind::rho, degree, series_limit, sieve,
                        precision);
}

/// Leading term for large d: 1/2^(d+1) (theta) or 1/2^(d+2) (rho).
[[nodiscard]] BigFloat asymptotic_main(
    DensityKind kind, unsigned degree,
    mpfr_prec_t precision = BigFloat::kDefaultPrecision);

/// 1/2^(d+1) - 2/3^(d+1).
[[nodiscard]] BigFloat refined_asymptotic_theta(
    unsigned degree, mpfr_prec_t precision = BigFloat::kDefaultPrecision);

}  // namespace eisen
