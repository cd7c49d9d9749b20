#include "gm/special.hpp"

#include <cmath>
#include <numbers>

#include "gm/errors.hpp"

namespace gm {

std::complex<double> log_gamma(std::complex<double> z)
{
  if (!(z.real() > 0.0)) { throw DomainError("log_gamma: needs Re z > 0"); }
  // B_{2k} / (2k (2k-1)), k = 1..7
  static constexpr double kStirling[7] = {1.0 / 12.0,        -1.0 / 360.0,  1.0 / 1260.0,       -1.0 / 1680.0,
                                          1.0 / 1188.0,      -691.0 / 360360.0, 1.0 / 156.0};
  std::complex<double> shift{0.0, 0.0};
  while (std::abs(z) < 10.0) {
    shift += std::log(z);
    z += 1.0;
  }
  std::complex<double> const inv = 1.0 / z;
  std::complex<double> const inv2 = inv * inv;
  std::complex<double> series{0.0, 0.0};
  for (int k = 6; k >= 0; --k) { series = series * inv2 + kStirling[k]; }
  series *= inv;
  double const half_log_2pi = 0.5 * std::log(2.0 * std::numbers::pi);
  return (z - 0.5) * std::log(z) - z + half_log_2pi + series - shift;
}

std::complex<double> gamma_ratio(std::complex<double> a, std::complex<double> b)
{
  return std::exp(log_gamma(a) - log_gamma(b));
}

double riemann_zeta_2() { return std::numbers::pi * std::numbers::pi / 6.0; }

double dirichlet_beta_2()
{
  // Cohen, Rodriguez Villegas, Zagier: sum (-1)^k a_k with a_k = (2k+1)^-2
  int const n = 40;
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0;
  double c = -d;
  double s = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    double const a = 1.0 / ((2.0 * k + 1.0) * (2.0 * k + 1.0));
    s += c * a;
    b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0));
  }
  return s / d;
}

} // namespace gm
