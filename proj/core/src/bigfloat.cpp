#include "eisen/bigfloat.hpp"

#include <cstdio>
#include <string>
#include <utility>

#include "eisen/errors.hpp"

namespace eisen {

namespace {

std::string mpfr_format(int digits, mpfr_rnd_t rnd, mpfr_srcptr x) {
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, "%.*R*g", digits, rnd, x) < 0 || raw == nullptr) {
    throw ResourceError("mpfr_asprintf failed");
  }
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

}  // namespace

BigFloat::BigFloat(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(double value, mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::~BigFloat() {
  if (value_->_mpfr_d != nullptr) mpfr_clear(value_);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  // Steal the limbs; leave `other` as an empty shell the destructor skips.
  *value_ = *other.value_;
  other.value_->_mpfr_d = nullptr;
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    if (value_->_mpfr_d == nullptr) {
      mpfr_init2(value_, other.precision());
    } else {
      mpfr_set_prec(value_, other.precision());
    }
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) {
    std::swap(*value_, *other.value_);
  }
  return *this;
}

BigFloat BigFloat::parse(std::string_view text, mpfr_prec_t precision) {
  BigFloat out(precision);
  const std::string buf(text);
  char* end = nullptr;
  if (buf.empty() || mpfr_strtofr(out.value_, buf.c_str(), &end, 10,
                                  MPFR_RNDN),
      end != buf.c_str() + buf.size()) {
    throw InvalidArgument("not a decimal number: '" + buf + "'");
  }
  return out;
}

BigFloat BigFloat::from_integer(const mpz_class& value, mpfr_prec_t precision,
                                mpfr_rnd_t rnd) {
  BigFloat out(precision);
  mpfr_set_z(out.value_, value.get_mpz_t(), rnd);
  return out;
}

double BigFloat::to_double() const noexcept {
  return mpfr_get_d(value_, MPFR_RNDN);
}

std::string BigFloat::to_significant(int digits, mpfr_rnd_t rnd) const {
  return mpfr_format(digits, rnd, value_);
}

std::string BigFloat::to_fixed(int places) const {
  // mpfr_round breaks ties away from zero; scale, round, then print exactly.
  BigFloat scaled(precision() + 64);
  mpfr_mul_ui(scaled.value_, value_, 1, MPFR_RNDN);
  for (int i = 0; i < places; ++i) {
    mpfr_mul_ui(scaled.value_, scaled.value_, 10, MPFR_RNDN);
  }
  mpfr_round(scaled.value_, scaled.value_);
  mpz_class n;
  mpfr_get_z(n.get_mpz_t(), scaled.value_, MPFR_RNDN);

  const bool negative = n < 0;
  if (negative) n = -n;
  std::string digits = n.get_str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places)) {
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(),
                    '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  return (negative ? "-" : "") + digits;
}

std::partial_ordering operator<=>(const BigFloat& a,
                                  const BigFloat& b) noexcept {
  if (mpfr_unordered_p(a.value_, b.value_)) {
    return std::partial_ordering::unordered;
  }
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

bool operator==(const BigFloat& a, const BigFloat& b) noexcept {
  return mpfr_equal_p(a.value_, b.value_) != 0;
}

}  // namespace eisen
