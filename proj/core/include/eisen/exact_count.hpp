#pragma once

#include <cstdint>
#include <string_view>

#include <gmpxx.h>

namespace eisen {

enum class Variant { monic, general };
enum class CountMethod { brute, inclusion_exclusion };

[[nodiscard]] std::string_view to_string(Variant v) noexcept;
[[nodiscard]] std::string_view to_string(CountMethod m) noexcept;

/// E_d(H) (monic) or F_d(H) (general) with the parameters that produced it.
struct ExactCount {
  mpz_class value;
  unsigned degree = 0;
  std::uint64_t height = 0;
  Variant variant = Variant::monic;
  CountMethod method = CountMethod::inclusion_exclusion;
};

}  // namespace eisen
