#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "gm/factor.hpp"
#include "gm/gauss_sum.hpp"
#include "gm/symbols.hpp"

using gm::GaussianInt;
using gm::i64;
using cd = std::complex<double>;

namespace {

// Definitional sum with the Gaussian residue-symbol evaluator and a plain
// exp(2 pi i Im(x/n)) in floating point, over a naive box scan.
cd reference_gauss_sum(GaussianInt const &n)
{
  double const N = static_cast<double>(gm::norm(n));
  i64 const m = static_cast<i64>(std::sqrt(2 * N)) + 2;
  cd sum{0, 0};
  for (i64 u = -m; u <= m; ++u) {
    for (i64 v = -m; v <= m; ++v) {
      GaussianInt const x{u, v};
      GaussianInt const w = x * n.conj();
      if (w.re() < 0 || w.re() >= gm::norm(n) || w.im() < 0 || w.im() >= gm::norm(n)) { continue; }
      double const im_ratio = static_cast<double>(w.im()) / N;
      sum += static_cast<double>(gm::quadratic_symbol(x, n)) * std::exp(cd{0, 2 * std::numbers::pi * im_ratio});
    }
  }
  return sum;
}

} // namespace

TEST_CASE("e_tilde")
{
  CHECK(std::abs(gm::e_tilde({3, 7}, {0, 1}) - cd{1, 0}) < 1e-15);
  CHECK(std::abs(gm::e_tilde({0, 1}, {1, 4}) - cd{0, 1}) < 1e-15);
  CHECK(std::abs(gm::e_tilde({0, 1}, {-7, 4}) - cd{0, 1}) < 1e-15);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<i64> num(-1'000'000'000, 1'000'000'000);
  std::uniform_int_distribution<i64> den(1, 100'000);
  for (int k = 0; k < 10'000; ++k) {
    gm::Rational const a{num(rng), den(rng)};
    gm::Rational const b{num(rng), den(rng)};
    gm::Rational const sum{a.num * b.den + b.num * a.den, a.den * b.den};
    cd const ea = gm::e_tilde({0, 1}, a);
    cd const eb = gm::e_tilde({0, 1}, b);
    REQUIRE(std::abs(std::abs(ea) - 1) < 1e-14);
    REQUIRE(std::abs(gm::e_tilde({0, 1}, sum) - ea * eb) < 1e-12);
  }
}

TEST_CASE("gauss_sum_direct small values")
{
  CHECK(std::abs(gm::gauss_sum_direct(GaussianInt{1}) - cd{1, 0}) < 1e-15);
  CHECK(std::abs(gm::gauss_sum_direct(GaussianInt{3, 2}) - cd{-std::sqrt(13.0), 0}) < 1e-9);
  CHECK(std::abs(gm::gauss_sum_direct(GaussianInt{17}) - cd{17, 0}) < 1e-9);
  CHECK_THROWS_AS(gm::gauss_sum_direct(GaussianInt{2, 3}), gm::DomainError);
  CHECK_THROWS_AS(gm::gauss_sum_direct(GaussianInt{1001, 1000}), gm::ResourceError);
}

TEST_CASE("gauss_sum_direct matches the naive definition")
{
  for (auto const &c : {GaussianInt{3, 2}, GaussianInt{-3}, GaussianInt{17}, GaussianInt{5}, GaussianInt{-15},
                        GaussianInt{7, 2}, GaussianInt{1, 4}, GaussianInt{-1, 2}, GaussianInt{9}, GaussianInt{5, 12}}) {
    CHECK(std::abs(gm::gauss_sum_direct(c) - reference_gauss_sum(c)) < 1e-9);
  }
}

TEST_CASE("closed form")
{
  CHECK(std::abs(gm::gauss_sum_closed(GaussianInt{3, 2}) - cd{-std::sqrt(13.0), 0}) < 1e-12);
  CHECK(std::abs(gm::gauss_sum_closed(GaussianInt{17}) - cd{17, 0}) < 1e-12);
  CHECK_THROWS_AS(gm::gauss_sum_closed(GaussianInt{5, 12}), gm::DomainError);

  // direct vs closed on every squarefree primary element of norm <= 1e4
  int compared = 0;
  for (i64 a = -100; a <= 100; ++a) {
    for (i64 b = -100; b <= 100; ++b) {
      GaussianInt const n{a, b};
      if (a * a + b * b > 10'000 || !gm::is_primary(n) || !gm::is_squarefree(n)) { continue; }
      cd const direct = gm::gauss_sum_direct(n);
      cd const closed = gm::gauss_sum_closed(n);
      double const scale = std::sqrt(static_cast<double>(gm::norm(n)));
      REQUIRE(std::abs(direct - closed) < 1e-6 * scale);
      REQUIRE(std::abs(std::abs(direct) - scale) < 1e-6 * scale);
      ++compared;
    }
  }
  CHECK(compared > 1000);
}

TEST_CASE("multiplicativity for coprime squarefree primary moduli")
{
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<i64> d(-40, 40);
  int tested = 0;
  while (tested < 200) {
    GaussianInt const m{d(rng), d(rng)};
    GaussianInt const n{d(rng), d(rng)};
    if (!gm::is_primary(m) || !gm::is_primary(n) || gm::norm(m) * gm::norm(n) > 200'000) { continue; }
    if (!gm::is_squarefree(m * n)) { continue; }
    cd const lhs = gm::gauss_sum_direct(m * n);
    cd const rhs = gm::gauss_sum_direct(m) * gm::gauss_sum_direct(n);
    REQUIRE(std::abs(lhs - rhs) < 1e-6 * std::abs(lhs));
    ++tested;
  }
}

TEST_CASE("root number")
{
  CHECK(std::abs(gm::root_number(GaussianInt{17}) - cd{1, 0}) < 1e-15);
  CHECK(std::abs(gm::root_number(GaussianInt{1}) - cd{1, 0}) < 1e-15);
  for (auto const &c : gm::enumerate_family(20'000)) { REQUIRE(gm::root_number(c) == cd{1, 0}); }
  CHECK_THROWS_AS(gm::root_number(GaussianInt{3, 2}), gm::DomainError);
  CHECK_THROWS_AS(gm::root_number(GaussianInt{17 * 17}), gm::DomainError);
}
