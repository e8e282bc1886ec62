#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "eisen/exact_count.hpp"

namespace eisen {

/// Integer polynomial a_0 + a_1 X + ... + a_d X^d; coefficient i is the
/// coefficient of X^i. The degree is the length minus one, so a zero leading
/// coefficient is allowed (it simply fails the Eisenstein criterion).
class Polynomial {
 public:
  /// Throws InvalidArgument on an empty coefficient list.
  explicit Polynomial(std::vector<std::int64_t> coefficients);
  Polynomial(std::initializer_list<std::int64_t> coefficients);

  [[nodiscard]] unsigned degree() const noexcept {
    return static_cast<unsigned>(coefficients_.size() - 1);
  }
  [[nodiscard]] std::span<const std::int64_t> coefficients() const noexcept {
    return coefficients_;
  }
  [[nodiscard]] std::int64_t operator[](std::size_t i) const {
    return coefficients_.at(i);
  }
  [[nodiscard]] std::uint64_t height() const noexcept;

 private:
  std::vector<std::int64_t> coefficients_;
};

/// Primes p with p | a_i (i < d), p^2 not dividing a_0 and p not dividing
/// a_d, ascending. Throws InvalidArgument for constant polynomials.
[[nodiscard]] std::vector<std::uint64_t> eisenstein_witnesses(
    const Polynomial& f);
[[nodiscard]] bool is_eisenstein(const Polynomial& f);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

struct BruteOptions {
  std::uint64_t budget = kDefaultEnumerationBudget;
  unsigned threads = 1;
};

/// Number of polynomials brute force visits; saturates at UINT64_MAX.
[[nodiscard]] std::uint64_t enumeration_size(Variant variant, unsigned degree,
                                             std::uint64_t height) noexcept;

/// Exhaustive count of monic Eisenstein polynomials of degree d with
/// max |a_i| <= H over i < d. Throws ResourceError when (2H+1)^d exceeds
/// the budget, InvalidArgument for d < 2 or H < 1.
[[nodiscard]] ExactCount brute_count_monic(unsigned degree, std::uint64_t height,
                                           const BruteOptions& options = {});

/// Exhaustive count over all a_0..a_d with height <= H; budget is checked
/// against (2H+1)^(d+1). The a_d range is split across `threads` workers.
[[nodiscard]] ExactCount brute_count_general(unsigned degree,
                                             std::uint64_t height,
                                             const BruteOptions& options = {});

}  // namespace eisen
