#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace eisen {

/// Owning MPFR value with value semantics. Arithmetic is done through the
/// raw mpfr_* API on get() so every call site states its rounding mode.
class BigFloat {
 public:
  static constexpr mpfr_prec_t kDefaultPrecision = 128;
  static constexpr mpfr_prec_t kMinPrecision = 60;

  explicit BigFloat(mpfr_prec_t precision = kDefaultPrecision);
  BigFloat(double value, mpfr_prec_t precision);
  ~BigFloat();

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;

  /// Parses a decimal string; throws InvalidArgument on malformed input.
  static BigFloat parse(std::string_view text,
                        mpfr_prec_t precision = kDefaultPrecision);
  static BigFloat from_integer(const mpz_class& value, mpfr_prec_t precision,
                               mpfr_rnd_t rnd = MPFR_RNDN);

  [[nodiscard]] mpfr_ptr get() noexcept { return value_; }
  [[nodiscard]] mpfr_srcptr get() const noexcept { return value_; }
  [[nodiscard]] mpfr_prec_t precision() const noexcept {
    return mpfr_get_prec(value_);
  }

  [[nodiscard]] double to_double() const noexcept;
  /// Rendering with `digits` significant digits (%g style), rounded toward
  /// `rnd`.
  [[nodiscard]] std::string to_significant(int digits,
                                           mpfr_rnd_t rnd = MPFR_RNDN) const;
  /// Round-half-away-from-zero to `places` decimals, fixed notation.
  [[nodiscard]] std::string to_fixed(int places) const;

  friend std::partial_ordering operator<=>(const BigFloat& a,
                                           const BigFloat& b) noexcept;
  friend bool operator==(const BigFloat& a, const BigFloat& b) noexcept;

 private:
  mpfr_t value_;
};

}  // namespace eisen
