#include "gm/selftest.hpp"

#include <cmath>
#include <cstring>
#include <exception>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "gm/factor.hpp"
#include "gm/gauss_sum.hpp"
#include "gm/lfunc.hpp"
#include "gm/moments.hpp"
#include "gm/symbols.hpp"

namespace gm {

namespace {

SelfCheck check(std::string name, std::function<std::string()> const &body)
{
  // body returns an empty string on success, a description otherwise
  try {
    std::string const failure = body();
    return {std::move(name), failure.empty(), failure};
  } catch (std::exception const &e) {
    return {std::move(name), false, std::string("exception: ") + e.what()};
  }
}

std::string symbol_oracle()
{
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<i64> coord(-1000, 1000);
  int tested = 0;
  while (tested < 2000) {
    GaussianInt const pi{coord(rng), coord(rng)};
    if (!is_primary(pi) || !is_gaussian_prime(pi)) { continue; }
    GaussianInt const a{coord(rng), coord(rng)};
    if (quartic_symbol(a, pi) != quartic_symbol_prime(a, pi)) {
      return "mismatch at a = " + to_string(a) + ", pi = " + to_string(pi);
    }
    ++tested;
  }
  return {};
}

std::string supplements()
{
  for (i64 a = -111; a <= 113; a += 16) {
    for (i64 b = -96; b <= 96; b += 16) {
      GaussianInt const c{a, b};
      if (quartic_symbol(GaussianInt{0, 1}, c) != QuarticValue::power_of_i(0) ||
          quartic_symbol(GaussianInt{1, 1}, c) != QuarticValue::power_of_i(0)) {
        return "supplement is not 1 at c = " + to_string(c);
      }
    }
  }
  return {};
}

std::string gauss_sums()
{
  for (i64 a = -45; a <= 45; ++a) {
    for (i64 b = -45; b <= 45; ++b) {
      GaussianInt const n{a, b};
      if (a * a + b * b > 2000 || !is_primary(n) || !is_squarefree(n)) { continue; }
      double const scale = std::sqrt(static_cast<double>(norm(n)));
      if (std::abs(gauss_sum_direct(n) - gauss_sum_closed(n)) > 1e-6 * scale) {
        return "closed form fails at " + to_string(n);
      }
    }
  }
  return {};
}

std::string weight_identity()
{
  for (double xi : {1e-3, 0.05, 1.0, 7.0, 20.0}) {
    double const diff = std::abs(v_weight_oracle(xi).real() - v_weight(xi));
    if (diff > 1e-8) {
      std::ostringstream os;
      os << "xi = " << xi << ": |erfc - oracle| = " << diff;
      return os.str();
    }
  }
  return {};
}

std::string constants()
{
  double const diff = std::abs(dedekind_zeta_2_ideal_sum(10'000'000) - dedekind_zeta_2());
  if (diff > 1e-10) { return "zeta paths differ by " + std::to_string(diff); }
  if (!(main_term_coefficient() > 0.0)) { return "K is not positive"; }
  return {};
}

std::string lattice_count()
{
  double const ratio = static_cast<double>(count_residue_class(1'000'000)) / 1e6;
  double const target = std::numbers::pi / 8.0;
  if (std::abs(ratio - target) > 0.01 * target) { return "count ratio " + std::to_string(ratio); }
  return {};
}

std::string determinism(int threads)
{
  SweepOptions one;
  SweepOptions many;
  many.threads = std::max(threads, 2);
  auto const a = sweep_family(20'000.0, one);
  auto const b = sweep_family(20'000.0, many);
  if (std::memcmp(&a.S1, &b.S1, sizeof(double)) != 0 || std::memcmp(&a.S2, &b.S2, sizeof(double)) != 0) {
    return "sweep differs between 1 and " + std::to_string(many.threads) + " threads";
  }
  return {};
}

} // namespace

std::vector<SelfCheck> run_selftest(int threads)
{
  return {
      check("symbol-oracle", symbol_oracle),
      check("supplements", supplements),
      check("gauss-sum-closed-form", gauss_sums),
      check("weight-identity", weight_identity),
      check("constants", constants),
      check("lattice-count", lattice_count),
      check("sweep-determinism", [threads] { return determinism(threads); }),
  };
}

} // namespace gm
