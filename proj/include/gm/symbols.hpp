#pragma once

#include <complex>
#include <string>

#include "gm/arith.hpp"
#include "gm/factor.hpp"
#include "gm/gaussian_int.hpp"

namespace gm {

/// A value in {1, i, -1, -i, 0}. Nonzero values are stored as the exponent k
/// of i^k; zero absorbs under multiplication.
class QuarticValue
{
public:
  constexpr QuarticValue() = default;

  static constexpr QuarticValue zero() { return QuarticValue{-1}; }
  static constexpr QuarticValue power_of_i(i64 k) { return QuarticValue{static_cast<int>(floor_mod(k, 4))}; }

  constexpr bool is_zero() const { return code_ < 0; }
  // Exponent k in [0, 4) of a nonzero value.
  constexpr int exponent() const { return code_; }

  constexpr QuarticValue squared() const { return is_zero() ? zero() : power_of_i(2 * code_); }

  friend constexpr QuarticValue operator*(QuarticValue a, QuarticValue b)
  {
    return (a.is_zero() || b.is_zero()) ? zero() : power_of_i(a.code_ + b.code_);
  }
  friend constexpr bool operator==(QuarticValue, QuarticValue) = default;

  GaussianInt as_gaussian() const { return is_zero() ? GaussianInt{0} : unit_power(code_); }
  std::complex<double> as_complex() const;

private:
  constexpr explicit QuarticValue(int code) : code_(code) {}
  int code_ = 0;
};

std::string to_string(QuarticValue v);

/// True for pi prime in Z[i].
bool is_gaussian_prime(GaussianInt const &pi);

/// (a/pi)_4 from the definition a^{(N(pi)-1)/4} mod pi. pi must be a prime
/// of odd norm (not necessarily primary). Used as the reference evaluator.
QuarticValue quartic_symbol_prime(GaussianInt const &a, GaussianInt const &pi);

/// (a/n)_4 for primary n, by reduction, the two supplementary laws and quartic
/// reciprocity. n = 1 gives 1.
QuarticValue quartic_symbol(GaussianInt a, GaussianInt n);

/// (a/n) = (a/n)_4^2 in {-1, 0, 1}.
int quadratic_symbol(GaussianInt const &a, GaussianInt const &n);

/// chi_c on the ideal generated by gen. c must be == 1 mod 16 (and squarefree
/// for chi_c to be primitive).
int chi_c_on_ideal(GaussianInt const &c, IdealRep const &ideal);

/// x -> (x/n) for a fixed odd-norm modulus n, evaluated through rational
/// Jacobi symbols.
///
/// Writing n = g * n' with g = gcd(re n, im n) and n' primitive,
/// Z[i]/(n') is cyclic and i maps to r = -re(n')/im(n') mod N(n'); a prime
/// above a rational p dividing g contributes the Legendre symbol of the norm.
/// So (x/n) = J(N(x), g) * J(re x + r im x, N(n')).
class QuadraticCharacter
{
public:
  explicit QuadraticCharacter(GaussianInt const &n);

  int operator()(i64 re, i64 im) const;
  int operator()(GaussianInt const &x) const { return (*this)(x.re(), x.im()); }

  GaussianInt const &modulus() const { return modulus_; }

private:
  GaussianInt modulus_;
  u64 rational_part_ = 1;  // g
  u64 primitive_norm_ = 1; // N(n')
  u64 root_ = 0;           // image of i modulo N(n')
};

} // namespace gm
