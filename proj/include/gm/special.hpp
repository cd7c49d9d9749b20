#pragma once

#include <complex>

namespace gm {

/// Principal branch of log Gamma(z) for Re z > 0: upward recurrence to
/// |z| >= 10, then the Stirling series through B_14.
std::complex<double> log_gamma(std::complex<double> z);

/// Gamma(a) / Gamma(b) via log_gamma; Re a, Re b > 0.
std::complex<double> gamma_ratio(std::complex<double> a, std::complex<double> b);

/// Riemann zeta(2) and the Dirichlet beta value at 2 (Catalan's constant),
/// the latter summed with an alternating-series acceleration.
double riemann_zeta_2();
double dirichlet_beta_2();

} // namespace gm
