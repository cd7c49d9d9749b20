#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gm/gaussian_int.hpp"

using gm::GaussianInt;
using gm::i64;

TEST_CASE("norm")
{
  CHECK(gm::norm(GaussianInt{0}) == 0);
  CHECK(gm::norm(GaussianInt{3, 2}) == 13);
  CHECK(gm::norm(GaussianInt{1, 1}) == 2);
  CHECK_THROWS_AS(gm::norm(GaussianInt{i64{1} << 31, i64{1} << 31}), gm::OverflowError);
  CHECK_THROWS_AS(GaussianInt(i64{1} << 31, 0) * GaussianInt(i64{1} << 31, 0), gm::OverflowError);
}

TEST_CASE("divmod examples")
{
  auto [q, r] = gm::divmod(GaussianInt{13}, GaussianInt{3, 2});
  CHECK(q == GaussianInt{3, -2});
  CHECK(r == GaussianInt{0});

  auto [q2, r2] = gm::divmod(GaussianInt{5}, GaussianInt{1});
  CHECK(q2 == GaussianInt{5});
  CHECK(r2 == GaussianInt{0});

  // 4+i over 2: imaginary coordinate 1/2 rounds down
  auto [q3, r3] = gm::divmod(GaussianInt{4, 1}, GaussianInt{2});
  CHECK(q3 == GaussianInt{2});
  CHECK(r3 == GaussianInt{0, 1});
  CHECK(gm::norm(r3) * 2 <= gm::norm(GaussianInt{2}));

  // tie toward negative infinity on a negative half
  auto [q4, r4] = gm::divmod(GaussianInt{-1}, GaussianInt{2});
  CHECK(q4 == GaussianInt{-1});
  CHECK(r4 == GaussianInt{1});

  CHECK_THROWS_AS(gm::divmod(GaussianInt{1}, GaussianInt{0}), gm::DomainError);
}

TEST_CASE("divmod remainder bound on random pairs")
{
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<i64> big(-1'000'000'000, 1'000'000'000);
  std::uniform_int_distribution<i64> small(-1000, 1000);
  for (int k = 0; k < 100'000; ++k) {
    GaussianInt const a{big(rng), big(rng)};
    GaussianInt b{small(rng), small(rng)};
    if (b.is_zero()) { b = GaussianInt{1}; }
    auto const [q, r] = gm::divmod(a, b);
    REQUIRE(q * b + r == a);
    REQUIRE(2 * gm::norm(r) <= gm::norm(b));
  }
}

TEST_CASE("gcd")
{
  CHECK(gm::gcd(GaussianInt{13}, GaussianInt{3, 2}) == GaussianInt{3, 2});
  CHECK(gm::gcd(GaussianInt{7, 5}, GaussianInt{1}) == GaussianInt{1});
  CHECK(gm::gcd(GaussianInt{2}, GaussianInt{1, 1}) == GaussianInt{1, 1});
  CHECK(gm::gcd(GaussianInt{0}, GaussianInt{0, 3}) == GaussianInt{-3});
  CHECK_THROWS_AS(gm::gcd(GaussianInt{0}, GaussianInt{0}), gm::DomainError);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<i64> d(-5000, 5000);
  for (int k = 0; k < 20'000; ++k) {
    GaussianInt const common{d(rng) % 50, d(rng) % 50};
    GaussianInt const a = GaussianInt{d(rng), d(rng)} * common;
    GaussianInt const b = GaussianInt{d(rng), d(rng)} * common;
    if (a.is_zero() && b.is_zero()) { continue; }
    GaussianInt const g = gm::gcd(a, b);
    REQUIRE(gm::divides(g, a));
    REQUIRE(gm::divides(g, b));
    if (!common.is_zero()) { REQUIRE(gm::divides(common, g)); }
    REQUIRE(gm::gcd(b, a) == g);
    REQUIRE(gm::gcd(a.times_i(), -b) == g);
  }
}

TEST_CASE("primary_normalize")
{
  auto p = gm::primary_normalize(GaussianInt{3, 2});
  CHECK(p.unit_exponent == 0);
  CHECK(p.primary == GaussianInt{3, 2});

  // 2+3i = i * (3-2i)
  p = gm::primary_normalize(GaussianInt{2, 3});
  CHECK(p.primary == GaussianInt{3, -2});
  CHECK(p.unit_exponent == 1);
  CHECK(gm::unit_power(p.unit_exponent) * p.primary == GaussianInt{2, 3});

  p = gm::primary_normalize(GaussianInt{5});
  CHECK(p.unit_exponent == 0);
  CHECK(p.primary == GaussianInt{5});

  p = gm::primary_normalize(GaussianInt{0, -1});
  CHECK(p.primary == GaussianInt{1});
  CHECK(p.unit_exponent == 3);

  CHECK_THROWS_AS(gm::primary_normalize(GaussianInt{1, 1}), gm::DomainError);
}

TEST_CASE("exactly one primary associate for every odd norm up to 1e6")
{
  i64 const limit = 1'000'000;
  i64 checked = 0;
  for (i64 a = -1000; a <= 1000; ++a) {
    for (i64 b = -1000; b <= 1000; ++b) {
      i64 const n = a * a + b * b;
      if (n > limit || n % 2 == 0 || n == 1) { continue; }
      GaussianInt const z{a, b};
      int hits = 0;
      for (GaussianInt w : {z, z.times_i(), -z, -z.times_i()}) { hits += gm::is_primary(w) ? 1 : 0; }
      REQUIRE(hits == 1);
      auto const pn = gm::primary_normalize(z);
      REQUIRE(gm::unit_power(pn.unit_exponent) * pn.primary == z);
      ++checked;
    }
  }
  CHECK(checked > 1'000'000);
}

TEST_CASE("decompose")
{
  auto d = gm::decompose(GaussianInt{2});
  CHECK(d.unit_exponent == 3);
  CHECK(d.two_exponent == 2);
  CHECK(d.primary == GaussianInt{1});

  d = gm::decompose(GaussianInt{3, 2});
  CHECK(d.unit_exponent == 0);
  CHECK(d.two_exponent == 0);
  CHECK(d.primary == GaussianInt{3, 2});

  d = gm::decompose(GaussianInt{1, 1});
  CHECK(d.unit_exponent == 0);
  CHECK(d.two_exponent == 1);
  CHECK(d.primary == GaussianInt{1});

  CHECK_THROWS_AS(gm::decompose(GaussianInt{0}), gm::DomainError);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<i64> dist(-1'000'000, 1'000'000);
  for (int k = 0; k < 20'000; ++k) {
    GaussianInt const n{dist(rng), dist(rng)};
    if (n.is_zero()) { continue; }
    auto const dd = gm::decompose(n);
    REQUIRE(gm::unit_power(dd.unit_exponent) * gm::pow(GaussianInt{1, 1}, dd.two_exponent) * dd.primary == n);
    REQUIRE((dd.primary == GaussianInt{1} || gm::is_primary(dd.primary)));
    REQUIRE(gm::norm(n) == (i64{1} << dd.two_exponent) * gm::norm(dd.primary));
  }
}

TEST_CASE("is_one_mod_16")
{
  CHECK(gm::is_one_mod_16(GaussianInt{17}));
  CHECK(gm::is_one_mod_16(GaussianInt{1, 16}));
  CHECK(gm::is_one_mod_16(GaussianInt{-15, -32}));
  CHECK_FALSE(gm::is_one_mod_16(GaussianInt{3, 2}));
}

TEST_CASE("parse and print")
{
  CHECK(gm::parse_gaussian("3+2i") == GaussianInt{3, 2});
  CHECK(gm::parse_gaussian(" 3 - 2i ") == GaussianInt{3, -2});
  CHECK(gm::parse_gaussian("-i") == GaussianInt{0, -1});
  CHECK(gm::parse_gaussian("17") == GaussianInt{17});
  CHECK(gm::parse_gaussian("16i") == GaussianInt{0, 16});
  CHECK(gm::parse_gaussian("1+i") == GaussianInt{1, 1});
  CHECK_THROWS_AS(gm::parse_gaussian("3+2"), gm::DomainError);
  CHECK_THROWS_AS(gm::parse_gaussian("2i+3"), gm::DomainError);
  CHECK_THROWS_AS(gm::parse_gaussian("x"), gm::DomainError);
  for (GaussianInt z : {GaussianInt{3, -2}, GaussianInt{0, 1}, GaussianInt{-4}, GaussianInt{0, -7}, GaussianInt{5, 1}}) {
    CHECK(gm::parse_gaussian(gm::to_string(z)) == z);
  }
}
