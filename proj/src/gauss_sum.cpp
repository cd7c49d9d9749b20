#include "gm/gauss_sum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gm/factor.hpp"
#include "gm/summation.hpp"
#include "gm/symbols.hpp"

namespace gm {

namespace {

std::complex<double> unit_circle(i64 k, i64 n)
{
  double const angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

void require_primary(GaussianInt const &n, char const *who)
{
  if (n != GaussianInt{1} && !is_primary(n)) {
    throw DomainError(std::string(who) + ": " + to_string(n) + " is not primary");
  }
}

} // namespace

std::complex<double> e_tilde(Rational const &, Rational const &im)
{
  if (im.den <= 0) { throw DomainError("e_tilde: denominator must be positive"); }
  return unit_circle(floor_mod(im.num, im.den), im.den);
}

std::complex<double> gauss_sum_direct(GaussianInt const &n)
{
  require_primary(n, "gauss_sum_direct");
  if (n == GaussianInt{1}) { return {1.0, 0.0}; }
  i64 const N = norm(n);
  if (N > kDirectGaussSumMaxNorm) {
    throw ResourceError("gauss_sum_direct: norm " + std::to_string(N) + " above " +
                        std::to_string(kDirectGaussSumMaxNorm));
  }
  i64 const p = n.re();
  i64 const q = n.im();
  // corners of {alpha n + beta i n}: 0, n, i n, n + i n
  i64 const re_lo = std::min({i64{0}, p, -q, p - q});
  i64 const re_hi = std::max({i64{0}, p, -q, p - q});
  i64 const im_lo = std::min({i64{0}, q, p, p + q});
  i64 const im_hi = std::max({i64{0}, q, p, p + q});

  QuadraticCharacter const chi(n);
  CompensatedSum<std::complex<double>> sum;
  i64 cells = 0;
  for (i64 u = re_lo; u <= re_hi; ++u) {
    for (i64 v = im_lo; v <= im_hi; ++v) {
      // x conj(n) = (up + vq) + (vp - uq) i; keep 0 <= both < N
      i64 const s = u * p + v * q;
      i64 const t = v * p - u * q;
      if (s < 0 || s >= N || t < 0 || t >= N) { continue; }
      ++cells;
      int const c = chi(u, v);
      if (c == 0) { continue; }
      // Im(x/n) = t/N, already reduced to [0, 1)
      std::complex<double> const e = unit_circle(t, N);
      sum.add(c > 0 ? e : -e);
    }
  }
  if (cells != N) { throw ConsistencyError("gauss_sum_direct: residue system has wrong size"); }
  return sum.value();
}

namespace {

// product over the prime factors pi of (-1/pi)_4, exact
QuarticValue closed_form_sign(GaussianInt const &n, char const *who)
{
  require_primary(n, who);
  QuarticValue acc = QuarticValue::power_of_i(0);
  if (n == GaussianInt{1}) { return acc; }
  for (auto const &pp : factor(n).factors) {
    if (pp.exponent > 1) { throw DomainError(std::string(who) + ": " + to_string(n) + " is not squarefree"); }
    acc = acc * quartic_symbol(GaussianInt{-1}, pp.prime);
  }
  return acc;
}

} // namespace

std::complex<double> gauss_sum_closed(GaussianInt const &n)
{
  QuarticValue const sign = closed_form_sign(n, "gauss_sum_closed");
  return sign.as_complex() * std::sqrt(static_cast<double>(norm(n)));
}

std::complex<double> root_number(GaussianInt const &c)
{
  if (!is_one_mod_16(c)) { throw DomainError("root_number: " + to_string(c) + " is not 1 mod 16"); }
  if (c == GaussianInt{1}) { return {1.0, 0.0}; }
  if (!is_squarefree(c)) { throw DomainError("root_number: " + to_string(c) + " is not squarefree"); }
  return closed_form_sign(c, "root_number").as_complex();
}

} // namespace gm
