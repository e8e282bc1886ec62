#include <doctest.h>

#include "eisen/errors.hpp"
#include "eisen/oracle.hpp"
#include "support.hpp"

using namespace eisen;

namespace {

// Reference count that builds every polynomial and asks the predicate.
std::uint64_t predicate_count(unsigned d, std::int64_t h, bool monic) {
  const unsigned free_coeffs = monic ? d : d + 1;
  std::vector<std::int64_t> c(d + 1, -h);
  if (monic) c[d] = 1;
  std::uint64_t count = 0;
  for (;;) {
    count += is_eisenstein(Polynomial(c));
    unsigned i = 0;
    while (i < free_coeffs && c[i] == h) c[i++] = -h;
    if (i == free_coeffs) break;
    ++c[i];
  }
  return count;
}

}  // namespace

TEST_CASE("Polynomial basics") {
  const Polynomial f{2, 2, 1};
  CHECK(f.degree() == 2);
  CHECK(f.height() == 2);
  CHECK(f[0] == 2);
  CHECK(Polynomial{-7, 3}.height() == 7);
  CHECK_THROWS_AS(Polynomial(std::vector<std::int64_t>{}), InvalidArgument);
}

TEST_CASE("eisenstein_witnesses examples") {
  CHECK(eisenstein_witnesses(Polynomial{2, 2, 1}) ==
        std::vector<std::uint64_t>{2});
  CHECK(eisenstein_witnesses(Polynomial{6, 6, 1}) ==
        std::vector<std::uint64_t>{2, 3});
  CHECK(eisenstein_witnesses(Polynomial{4, 3, 1}).empty());
  CHECK(eisenstein_witnesses(Polynomial{0, 2, 1}).empty());
  CHECK(eisenstein_witnesses(Polynomial{0, 0, 0, 5}).empty());
  CHECK_THROWS_AS((void)eisenstein_witnesses(Polynomial{6}), InvalidArgument);
}

TEST_CASE("is_eisenstein examples") {
  CHECK(is_eisenstein(Polynomial{2, 2, 1}));
  CHECK_FALSE(is_eisenstein(Polynomial{4, 0, 1}));
  CHECK(is_eisenstein(Polynomial{3, 6, 2}));
  // Linear polynomials are accepted by the predicate.
  CHECK(is_eisenstein(Polynomial{2, 1}));
  CHECK_FALSE(is_eisenstein(Polynomial{4, 1}));
  // Zero leading coefficient never passes p not dividing a_d.
  CHECK_FALSE(is_eisenstein(Polynomial{2, 2, 0}));
}

TEST_CASE("sign flips preserve the criterion; witnesses divide a_0") {
  test::SplitMix rng(0xE15E);
  for (int iter = 0; iter < 20'000; ++iter) {
    const auto d = static_cast<unsigned>(rng.uniform(1, 6));
    std::vector<std::int64_t> c(d + 1);
    for (auto& a : c) a = rng.uniform(-60, 60);
    const Polynomial f(c);
    const bool base = is_eisenstein(f);
    for (const std::uint64_t p : eisenstein_witnesses(f)) {
      const auto a0 = static_cast<std::uint64_t>(c[0] < 0 ? -c[0] : c[0]);
      REQUIRE(p <= a0);
      REQUIRE(a0 % p == 0);
    }
    for (unsigned i = 0; i <= d; ++i) {
      auto flipped = c;
      flipped[i] = -flipped[i];
      REQUIRE(is_eisenstein(Polynomial(flipped)) == base);
    }
  }
}

TEST_CASE("brute counts: hand-derived values") {
  CHECK(brute_count_monic(2, 1).value == 0);
  CHECK(brute_count_monic(2, 2).value == 6);
  CHECK(brute_count_monic(2, 3).value == 12);
  CHECK(brute_count_monic(3, 2).value == 18);
  CHECK(brute_count_general(2, 1).value == 0);
  CHECK(brute_count_general(2, 2).value == 12);
  CHECK(brute_count_general(2, 3).value == 48);

  const auto e = brute_count_monic(2, 10);
  CHECK(e.value == 108);
  CHECK(e.degree == 2);
  CHECK(e.height == 10);
  CHECK(e.variant == Variant::monic);
  CHECK(e.method == CountMethod::brute);
  CHECK(brute_count_general(2, 10).value == 1396);
  CHECK(brute_count_monic(3, 5).value == 86);
  CHECK(brute_count_general(3, 4).value == 308);
}

TEST_CASE("brute counts agree with the per-polynomial predicate") {
  for (unsigned d = 2; d <= 3; ++d) {
    for (std::int64_t h = 1; h <= (d == 2 ? 12 : 5); ++h) {
      const auto uh = static_cast<std::uint64_t>(h);
      REQUIRE(brute_count_monic(d, uh).value == predicate_count(d, h, true));
      REQUIRE(brute_count_general(d, uh).value ==
              predicate_count(d, h, false));
    }
  }
}

TEST_CASE("brute counts: structural properties") {
  for (unsigned d = 2; d <= 3; ++d) {
    mpz_class prev_monic = 0;
    mpz_class prev_general = 0;
    for (std::uint64_t h = 1; h <= (d == 2 ? 20 : 8); ++h) {
      const auto m = brute_count_monic(d, h).value;
      const auto g = brute_count_general(d, h).value;
      REQUIRE(m % 2 == 0);
      REQUIRE(g % 4 == 0);
      REQUIRE(m >= prev_monic);
      REQUIRE(g >= prev_general);
      REQUIRE(m <= enumeration_size(Variant::monic, d, h));
      REQUIRE(g <= mpz_class(2 * h) * enumeration_size(Variant::monic, d, h));
      prev_monic = m;
      prev_general = g;
    }
  }
}

TEST_CASE("general enumeration is independent of the worker split") {
  const auto base = brute_count_general(3, 6).value;
  for (unsigned threads : {2U, 3U, 5U, 13U, 64U}) {
    CHECK(brute_count_general(3, 6, {kDefaultEnumerationBudget, threads})
              .value == base);
  }
}

TEST_CASE("brute counts refuse over-budget and invalid requests") {
  CHECK(enumeration_size(Variant::monic, 2, 2) == 25);
  CHECK(enumeration_size(Variant::general, 2, 2) == 125);
  CHECK(enumeration_size(Variant::general, 60, 1'000'000) == UINT64_MAX);

  CHECK_THROWS_AS((void)brute_count_monic(2, 2, {24, 1}), ResourceError);
  CHECK(brute_count_monic(2, 2, {25, 1}).value == 6);
  CHECK_THROWS_AS((void)brute_count_general(9, 50), ResourceError);
  CHECK_THROWS_AS((void)brute_count_monic(1, 5), InvalidArgument);
  CHECK_THROWS_AS((void)brute_count_general(2, 0), InvalidArgument);
}
