#pragma once

#include <complex>

#include "gm/gaussian_int.hpp"

namespace gm {

/// Exact rational num/den, den > 0.
struct Rational
{
  i64 num = 0;
  i64 den = 1;
};

/// e~(z) = exp(2 pi i (z - conj z) / 2i) = exp(2 pi i Im z) for
/// z = re + im*i. Im z is reduced mod 1 exactly before exponentiating.
std::complex<double> e_tilde(Rational const &re, Rational const &im);

/// Largest norm accepted by gauss_sum_direct (cost is linear in the norm).
inline constexpr i64 kDirectGaussSumMaxNorm = 1'000'000;

/// g(n) = sum over x mod n of (x/n) e~(x/n), summed over the lattice points of
/// the half-open square spanned by n and i*n. n primary (or 1).
std::complex<double> gauss_sum_direct(GaussianInt const &n);

/// Product over the prime factors pi of a squarefree primary n of
/// (-1/pi)_4 N(pi)^{1/2}.
std::complex<double> gauss_sum_closed(GaussianInt const &n);

/// W(chi_c) / N(c)^{1/2} for c squarefree, c == 1 mod 16.
std::complex<double> root_number(GaussianInt const &c);

} // namespace gm
