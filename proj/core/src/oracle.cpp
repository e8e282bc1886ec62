#include "eisen/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

#include "eisen/errors.hpp"

namespace eisen {

namespace {

std::uint64_t magnitude(std::int64_t v) noexcept {
  return v < 0 ? std::uint64_t(0) - static_cast<std::uint64_t>(v)
               : static_cast<std::uint64_t>(v);
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Primes p | n with p^2 not dividing n; empty for n = 0.
std::vector<std::uint64_t> exact_prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n == 0) return out;
  for (const std::uint64_t p : prime_divisors(n)) {
    if ((n / p) % p != 0) out.push_back(p);
  }
  return out;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

void check_count_args(unsigned degree, std::uint64_t height) {
  if (degree < 2) {
    throw InvalidArgument("degree must be at least 2, got " +
                          std::to_string(degree));
  }
  if (height < 1) throw InvalidArgument("height must be at least 1");
  if (height > (std::uint64_t{1} << 40)) {
    throw InvalidArgument("height too large for enumeration");
  }
}

void check_budget(Variant variant, unsigned degree, std::uint64_t height,
                  std::uint64_t budget) {
  const std::uint64_t size = enumeration_size(variant, degree, height);
  if (size > budget) {
    throw ResourceError("brute-force enumeration of " +
                        std::string(to_string(variant)) + " d=" +
                        std::to_string(degree) + " H=" +
                        std::to_string(height) + " visits " +
                        (size == std::numeric_limits<std::uint64_t>::max()
                             ? std::string("more than 2^64")
                             : std::to_string(size)) +
                        " polynomials, over the budget of " +
                        std::to_string(budget));
  }
}

// Counts Eisenstein polynomials whose middle coefficients a_1..a_{d-1} and
// constant term range over [-H, H] and whose leading coefficient lies in
// [lead_lo, lead_hi]. The middle coefficients only matter through their gcd:
// p divides all of them iff p divides the gcd.
std::uint64_t enumerate(unsigned degree, std::int64_t height,
                        std::int64_t lead_lo, std::int64_t lead_hi,
                        const std::vector<std::vector<std::uint64_t>>& cands) {
  std::vector<std::int64_t> middle(degree - 1, -height);
  std::uint64_t count = 0;
  for (;;) {
    std::uint64_t g = 0;
    for (const std::int64_t a : middle) g = std::gcd(g, magnitude(a));

    for (std::int64_t a0 = -height; a0 <= height; ++a0) {
      const auto& primes = cands[magnitude(a0)];
      if (primes.empty()) continue;
      for (std::int64_t lead = lead_lo; lead <= lead_hi; ++lead) {
        const std::uint64_t lead_abs = magnitude(lead);
        for (const std::uint64_t p : primes) {
          if (g % p == 0 && lead_abs % p != 0) {
            ++count;
            break;
          }
        }
      }
    }

    // Odometer step over the middle coefficients.
    std::size_t i = 0;
    while (i < middle.size() && middle[i] == height) {
      middle[i] = -height;
      ++i;
    }
    if (i == middle.size()) break;
    ++middle[i];
  }
  return count;
}

std::vector<std::vector<std::uint64_t>> candidate_table(std::uint64_t height) {
  std::vector<std::vector<std::uint64_t>> cands(height + 1);
  for (std::uint64_t n = 1; n <= height; ++n) cands[n] = exact_prime_divisors(n);
  return cands;
}

}  // namespace

std::string_view to_string(Variant v) noexcept {
  return v == Variant::monic ? "monic" : "general";
}

std::string_view to_string(CountMethod m) noexcept {
  return m == CountMethod::brute ? "brute" : "inclusion_exclusion";
}

Polynomial::Polynomial(std::vector<std::int64_t> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) {
    throw InvalidArgument("polynomial needs at least one coefficient");
  }
}

Polynomial::Polynomial(std::initializer_list<std::int64_t> coefficients)
    : Polynomial(std::vector<std::int64_t>(coefficients)) {}

std::uint64_t Polynomial::height() const noexcept {
  std::uint64_t h = 0;
  for (const std::int64_t a : coefficients_) h = std::max(h, magnitude(a));
  return h;
}

std::vector<std::uint64_t> eisenstein_witnesses(const Polynomial& f) {
  const unsigned d = f.degree();
  if (d == 0) {
    throw InvalidArgument("Eisenstein criterion needs degree >= 1");
  }
  const auto coeffs = f.coefficients();
  std::vector<std::uint64_t> witnesses;
  for (const std::uint64_t p : exact_prime_divisors(magnitude(coeffs[0]))) {
    const bool divides_middle =
        std::all_of(coeffs.begin() + 1, coeffs.begin() + d,
                    [p](std::int64_t a) { return magnitude(a) % p == 0; });
    if (divides_middle && magnitude(coeffs[d]) % p != 0) {
      witnesses.push_back(p);
    }
  }
  return witnesses;
}

bool is_eisenstein(const Polynomial& f) {
  return !eisenstein_witnesses(f).empty();
}

std::uint64_t enumeration_size(Variant variant, unsigned degree,
                               std::uint64_t height) noexcept {
  const std::uint64_t side = saturating_mul(2, height) + 1;
  const unsigned free_coeffs = variant == Variant::monic ? degree : degree + 1;
  std::uint64_t size = 1;
  for (unsigned i = 0; i < free_coeffs; ++i) size = saturating_mul(size, side);
  return size;
}

ExactCount brute_count_monic(unsigned degree, std::uint64_t height,
                             const BruteOptions& options) {
  check_count_args(degree, height);
  check_budget(Variant::monic, degree, height, options.budget);
  const auto cands = candidate_table(height);
  const std::uint64_t n =
      enumerate(degree, static_cast<std::int64_t>(height), 1, 1, cands);
  return ExactCount{mpz_class(n), degree, height, Variant::monic,
                    CountMethod::brute};
}

ExactCount brute_count_general(unsigned degree, std::uint64_t height,
                               const BruteOptions& options) {
  check_count_args(degree, height);
  check_budget(Variant::general, degree, height, options.budget);
  const auto cands = candidate_table(height);
  const auto h = static_cast<std::int64_t>(height);

  const std::int64_t span = 2 * h + 1;
  const std::int64_t workers =
      std::clamp<std::int64_t>(options.threads, 1, span);
  if (workers == 1) {
    return ExactCount{mpz_class(enumerate(degree, h, -h, h, cands)), degree,
                      height, Variant::general, CountMethod::brute};
  }
  std::vector<std::uint64_t> partial(static_cast<std::size_t>(workers), 0);
  {
    std::vector<std::jthread> pool;
    for (std::int64_t w = 0; w < workers; ++w) {
      const std::int64_t lo = -h + span * w / workers;
      const std::int64_t hi = -h + span * (w + 1) / workers - 1;
      pool.emplace_back([&, w, lo, hi] {
        partial[static_cast<std::size_t>(w)] =
            enumerate(degree, h, lo, hi, cands);
      });
    }
  }
  mpz_class total = 0;
  for (const std::uint64_t c : partial) total += mpz_class(c);
  return ExactCount{total, degree, height, Variant::general,
                    CountMethod::brute};
}

}  // namespace eisen
