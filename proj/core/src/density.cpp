#include "eisen/density.hpp"

#include <string>

#include <gmpxx.h>

#include "eisen/errors.hpp"

namespace eisen {

namespace {

void check_args(unsigned degree, mpfr_prec_t precision) {
  if (degree < 2) {
    throw InvalidArgument("density needs degree >= 2, got " +
                          std::to_string(degree));
  }
  if (precision < BigFloat::kMinPrecision) {
    throw InvalidArgument("precision must be at least " +
                          std::to_string(BigFloat::kMinPrecision) + " bits");
  }
}

// Exact integer power base^exponent, shared by the three rounding directions.
class ExactPower {
 public:
  void set(std::uint64_t base, unsigned long exponent) {
    mpz_ui_pow_ui(value_.get_mpz_t(), base, exponent);
  }
  // out = num / base^exponent, rounded toward `rnd`.
  void divide(mpfr_ptr out, std::uint64_t num, mpfr_rnd_t rnd) const {
    mpfr_set_ui(out, num, rnd);
    mpfr_div_z(out, out, value_.get_mpz_t(), rnd);
  }

 private:
  mpz_class value_;
};

// Upper bound for sum_{n > cutoff} factor / n^d, i.e. factor/((d-1) cutoff^(d-1)).
BigFloat tail_bound(unsigned long factor, unsigned degree,
                    std::uint64_t cutoff, mpfr_prec_t precision) {
  BigFloat den(precision);
  mpfr_ui_pow_ui(den.get(), cutoff, degree - 1, MPFR_RNDD);
  mpfr_mul_ui(den.get(), den.get(), degree - 1, MPFR_RNDD);
  BigFloat tail(precision);
  mpfr_ui_div(tail.get(), factor, den.get(), MPFR_RNDU);
  return tail;
}

struct LocalTerm {
  std::uint64_t numerator;
  unsigned long exponent;
};

// Local deficit at prime p, or series summand magnitude at s with totient phi.
LocalTerm local_term(DensityKind kind, unsigned degree, std::uint64_t phi) {
  if (kind == DensityKind::theta) return {phi, degree + 1UL};
  return {phi * phi, degree + 2UL};
}

}  // namespace

std::string_view to_string(DensityKind k) noexcept {
  return k == DensityKind::theta ? "theta" : "rho";
}

std::string_view to_string(DensityMethod m) noexcept {
  return m == DensityMethod::euler_product ? "euler_product" : "mobius_series";
}

std::string_view to_string(Truncation::Kind k) noexcept {
  switch (k) {
    case Truncation::Kind::prime_count: return "prime_count";
    case Truncation::Kind::prime_limit: return "prime_limit";
    case Truncation::Kind::series_limit: return "series_limit";
  }
  return "unknown";
}

DensityEstimate density_product(DensityKind kind, unsigned degree,
                                Truncation truncation, const ArithSieve& sieve,
                                mpfr_prec_t precision) {
  check_args(degree, precision);
  const auto all_primes = sieve.primes();

  std::size_t used = 0;
  std::uint64_t cutoff = 0;  // every omitted prime exceeds this
  switch (truncation.kind) {
    case Truncation::Kind::prime_count:
      if (truncation.bound < 1) {
        throw InvalidArgument("prime count must be at least 1");
      }
      if (truncation.bound > all_primes.size()) {
        throw OutOfRange("requested " + std::to_string(truncation.bound) +
                         " primes but the sieve up to " +
                         std::to_string(sieve.limit()) + " holds only " +
                         std::to_string(all_primes.size()));
      }
      used = truncation.bound;
      cutoff = all_primes[used - 1];
      break;
    case Truncation::Kind::prime_limit:
      if (truncation.bound < 2) {
        throw InvalidArgument("prime limit must be at least 2");
      }
      if (truncation.bound > sieve.limit()) {
        throw OutOfRange("prime limit " + std::to_string(truncation.bound) +
                         " exceeds sieve limit " +
                         std::to_string(sieve.limit()));
      }
      while (used < all_primes.size() && all_primes[used] <= truncation.bound) {
        ++used;
      }
      cutoff = truncation.bound;
      break;
    case Truncation::Kind::series_limit:
      throw InvalidArgument("Euler product needs a prime truncation");
  }

  BigFloat prod_lo(1.0, precision);
  BigFloat prod_nr(1.0, precision);
  BigFloat prod_hi(1.0, precision);
  BigFloat x(precision);
  ExactPower den;

  for (std::size_t i = 0; i < used; ++i) {
    const std::uint64_t p = all_primes[i];
    const LocalTerm t = local_term(kind, degree, p - 1);
    den.set(p, t.exponent);

    den.divide(x.get(), t.numerator, MPFR_RNDU);
    mpfr_ui_sub(x.get(), 1, x.get(), MPFR_RNDD);
    mpfr_mul(prod_lo.get(), prod_lo.get(), x.get(), MPFR_RNDD);

    den.divide(x.get(), t.numerator, MPFR_RNDN);
    mpfr_ui_sub(x.get(), 1, x.get(), MPFR_RNDN);
    mpfr_mul(prod_nr.get(), prod_nr.get(), x.get(), MPFR_RNDN);

    den.divide(x.get(), t.numerator, MPFR_RNDD);
    mpfr_ui_sub(x.get(), 1, x.get(), MPFR_RNDU);
    mpfr_mul(prod_hi.get(), prod_hi.get(), x.get(), MPFR_RNDU);
  }

  // Full product lies in [prod_lo * exp(-T), prod_hi].
  BigFloat tail_factor = tail_bound(2, degree, cutoff, precision);
  mpfr_neg(tail_factor.get(), tail_factor.get(), MPFR_RNDN);
  mpfr_exp(tail_factor.get(), tail_factor.get(), MPFR_RNDD);
  mpfr_mul(prod_lo.get(), prod_lo.get(), tail_factor.get(), MPFR_RNDD);

  DensityEstimate est{kind,
                      degree,
                      BigFloat(precision),
                      BigFloat(precision),
                      BigFloat(precision),
                      truncation,
                      DensityMethod::euler_product};
  mpfr_ui_sub(est.value.get(), 1, prod_nr.get(), MPFR_RNDN);
  mpfr_ui_sub(est.lower.get(), 1, prod_hi.get(), MPFR_RNDD);
  mpfr_ui_sub(est.upper.get(), 1, prod_lo.get(), MPFR_RNDU);
  return est;
}

DensityEstimate density_series(DensityKind kind, unsigned degree,
                               std::uint64_t series_limit,
                               const ArithSieve& sieve, mpfr_prec_t precision) {
  check_args(degree, precision);
  if (series_limit < 1) throw InvalidArgument("series limit must be >= 1");
  if (series_limit > sieve.limit()) {
    throw OutOfRange("series limit " + std::to_string(series_limit) +
                     " exceeds sieve limit " + std::to_string(sieve.limit()));
  }

  BigFloat sum_lo(precision);
  BigFloat sum_nr(precision);
  BigFloat sum_hi(precision);
  BigFloat x(precision);
  ExactPower den;

  for (std::uint64_t s = 2; s <= series_limit; ++s) {
    const Factorization f = factorize(s, sieve);
    const int mu = mobius(f);
    if (mu == 0) continue;
    const LocalTerm t = local_term(kind, degree, euler_phi(f));
    den.set(s, t.exponent);

    // The summand carries sign -mu(s).
    if (mu < 0) {
      den.divide(x.get(), t.numerator, MPFR_RNDD);
      mpfr_add(sum_lo.get(), sum_lo.get(), x.get(), MPFR_RNDD);
      den.divide(x.get(), t.numerator, MPFR_RNDU);
      mpfr_add(sum_hi.get(), sum_hi.get(), x.get(), MPFR_RNDU);
      den.divide(x.get(), t.numerator, MPFR_RNDN);
      mpfr_add(sum_nr.get(), sum_nr.get(), x.get(), MPFR_RNDN);
    } else {
      den.divide(x.get(), t.numerator, MPFR_RNDU);
      mpfr_sub(sum_lo.get(), sum_lo.get(), x.get(), MPFR_RNDD);
      den.divide(x.get(), t.numerator, MPFR_RNDD);
      mpfr_sub(sum_hi.get(), sum_hi.get(), x.get(), MPFR_RNDU);
      den.divide(x.get(), t.numerator, MPFR_RNDN);
      mpfr_sub(sum_nr.get(), sum_nr.get(), x.get(), MPFR_RNDN);
    }
  }

  const BigFloat tail = tail_bound(1, degree, series_limit, precision);
  DensityEstimate est{kind,
                      degree,
                      std::move(sum_nr),
                      std::move(sum_lo),
                      std::move(sum_hi),
                      Truncation::series(series_limit),
                      DensityMethod::mobius_series};
  mpfr_sub(est.lower.get(), est.lower.get(), tail.get(), MPFR_RNDD);
  mpfr_add(est.upper.get(), est.upper.get(), tail.get(), MPFR_RNDU);
  return est;
}

BigFloat asymptotic_main(DensityKind kind, unsigned degree,
                         mpfr_prec_t precision) {
  check_args(degree, precision);
  BigFloat out(precision);
  const long shift = kind == DensityKind::theta ? degree + 1L : degree + 2L;
  mpfr_set_ui_2exp(out.get(), 1, -shift, MPFR_RNDN);
  return out;
}

BigFloat refined_asymptotic_theta(unsigned degree, mpfr_prec_t precision) {
  BigFloat out = asymptotic_main(DensityKind::theta, degree, precision);
  BigFloat correction(precision);
  ExactPower den;
  den.set(3, degree + 1UL);
  den.divide(correction.get(), 2, MPFR_RNDN);
  mpfr_sub(out.get(), out.get(), correction.get(), MPFR_RNDN);
  return out;
}

}  // namespace eisen
