#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "eisen/arith.hpp"
#include "eisen/bigfloat.hpp"
#include "eisen/density.hpp"
#include "eisen/exact_count.hpp"

namespace eisen {

/// One table line; densities are rendered to four decimals, ties away from
/// zero.
struct DensityRow {
  unsigned degree = 0;
  std::string theta;
  std::string rho;

  friend bool operator==(const DensityRow&, const DensityRow&) = default;
};

struct DensityTable {
  std::vector<DensityRow> rows;
  std::uint64_t prime_count = 0;

  friend bool operator==(const DensityTable&, const DensityTable&) = default;
};

inline constexpr int kTableDecimals = 4;

/// Euler-product values of theta_d and rho_d for d_min..d_max over the first
/// `prime_count` primes. Throws InvalidArgument for an empty or d < 2 range.
[[nodiscard]] DensityTable density_table(
    unsigned d_min, unsigned d_max, std::uint64_t prime_count,
    const ArithSieve& sieve,
    mpfr_prec_t precision = BigFloat::kDefaultPrecision);

/// exact - main for one height, plus residual / normalization where the
/// normalization is
///   monic:   H^(d-1)  (d > 2),  H (ln H)^2    (d = 2)
///   general: H^d      (d > 2),  H^2 (ln H)^2  (d = 2)
struct ErrorTermRow {
  Variant variant = Variant::monic;
  unsigned degree = 0;
  std::uint64_t height = 0;
  mpz_class exact;
  BigFloat main;
  BigFloat residual;
  BigFloat ratio;
};

struct ProfileOptions {
  std::uint64_t prime_count = kDefaultPrimeCount;
  mpfr_prec_t precision = BigFloat::kDefaultPrecision;
  unsigned threads = 1;
};

/// Main term theta_d 2^d H^d (monic) or rho_d 2^(d+1) H^(d+1) (general),
/// using the point value of the Euler product.
[[nodiscard]] BigFloat main_term(Variant variant, unsigned degree,
                                 std::uint64_t height,
                                 const BigFloat& density);
[[nodiscard]] BigFloat error_normalization(Variant variant, unsigned degree,
                                           std::uint64_t height,
                                           mpfr_prec_t precision);

/// Heights must be ascending and >= 2, the largest within the sieve.
[[nodiscard]] std::vector<ErrorTermRow> error_term_profile(
    Variant variant, unsigned degree, std::span<const std::uint64_t> heights,
    const ArithSieve& sieve, const ProfileOptions& options = {});

inline constexpr int kReportSignificantDigits = 10;

// CSV: LF line endings, header always present.
//   table:   d,theta,rho
//   profile: variant,d,H,exact,main,residual,ratio
// JSON: big integers as decimal strings, reals rounded to 10 significant
// digits. All emitters throw InvalidArgument on empty input.
[[nodiscard]] std::string emit_csv(const DensityTable& table);
[[nodiscard]] std::string emit_csv(std::span<const ErrorTermRow> rows);
[[nodiscard]] std::string emit_json(const DensityTable& table);
[[nodiscard]] std::string emit_json(std::span<const ErrorTermRow> rows);

// Inverses of the emitters; throw InvalidArgument on malformed text.
[[nodiscard]] DensityTable parse_density_table_csv(std::string_view text);
[[nodiscard]] DensityTable parse_density_table_json(std::string_view text);
[[nodiscard]] std::vector<ErrorTermRow> parse_error_rows_csv(
    std::string_view text);
[[nodiscard]] std::vector<ErrorTermRow> parse_error_rows_json(
    std::string_view text);

[[nodiscard]] Variant parse_variant(std::string_view text);

}  // namespace eisen
