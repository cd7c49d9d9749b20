#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "gm/errors.hpp"

namespace gm {

using i64 = std::int64_t;
using i128 = __int128;

// Largest accepted norm. Keeps every product of two residues mod a modulus
// representable in 128 bits and every component in 32 bits.
inline constexpr i64 kMaxNorm = i64{1} << 62;

/// An element re + im*i of Z[i] with 64-bit components.
///
/// Ring operations are overflow-checked: any result whose norm exceeds
/// kMaxNorm throws OverflowError.
class GaussianInt
{
public:
  constexpr GaussianInt() = default;
  constexpr GaussianInt(i64 re, i64 im = 0) : re_(re), im_(im) {}

  constexpr i64 re() const { return re_; }
  constexpr i64 im() const { return im_; }

  constexpr bool is_zero() const { return re_ == 0 && im_ == 0; }
  constexpr bool is_unit() const
  {
    return (im_ == 0 && (re_ == 1 || re_ == -1)) || (re_ == 0 && (im_ == 1 || im_ == -1));
  }

  constexpr GaussianInt conj() const { return {re_, -im_}; }
  // Multiplication by i.
  constexpr GaussianInt times_i() const { return {-im_, re_}; }

  friend constexpr bool operator==(GaussianInt const &, GaussianInt const &) = default;

  GaussianInt operator-() const;
  friend GaussianInt operator+(GaussianInt const &a, GaussianInt const &b);
  friend GaussianInt operator-(GaussianInt const &a, GaussianInt const &b);
  friend GaussianInt operator*(GaussianInt const &a, GaussianInt const &b);

  GaussianInt &operator+=(GaussianInt const &b) { return *this = *this + b; }
  GaussianInt &operator-=(GaussianInt const &b) { return *this = *this - b; }
  GaussianInt &operator*=(GaussianInt const &b) { return *this = *this * b; }

private:
  i64 re_ = 0;
  i64 im_ = 0;
};

/// re^2 + im^2. Throws OverflowError above kMaxNorm.
i64 norm(GaussianInt const &z);

struct DivMod
{
  GaussianInt q;
  GaussianInt r;
};

/// Euclidean division: a = q*b + r with norm(r) <= norm(b)/2.
/// Each coordinate of a/b is rounded to the nearest integer, ties toward
/// negative infinity, so quotient sequences are reproducible.
DivMod divmod(GaussianInt const &a, GaussianInt const &b);

inline GaussianInt mod(GaussianInt const &a, GaussianInt const &b) { return divmod(a, b).r; }

/// True iff b divides a exactly (b != 0).
bool divides(GaussianInt const &b, GaussianInt const &a);

/// a / b when b | a; throws DomainError otherwise.
GaussianInt exact_div(GaussianInt const &a, GaussianInt const &b);

/// i^k for any integer k.
GaussianInt unit_power(int k);

/// z^e by repeated squaring (no reduction).
GaussianInt pow(GaussianInt z, unsigned e);

/// Canonical associate of a nonzero z: the primary one when norm(z) is odd,
/// otherwise the one with re > 0, im >= 0.
GaussianInt canonical_associate(GaussianInt const &z);

/// Greatest common divisor in canonical form (see canonical_associate).
GaussianInt gcd(GaussianInt a, GaussianInt b);

/// n == 1 mod (1+i)^3, i.e. (re, im) = (1, 0) or (3, 2) mod 4.
bool is_primary(GaussianInt const &n);

struct PrimaryNormalization
{
  int unit_exponent = 0; // s in [0, 4)
  GaussianInt primary{1};
};

/// Write an odd-norm n as i^s * primary. Units give primary = 1.
PrimaryNormalization primary_normalize(GaussianInt const &n);

struct PrimaryDecomposition
{
  int unit_exponent = 0;       // s in [0, 4)
  int two_exponent = 0;        // t: power of (1+i)
  GaussianInt primary{1};      // primary part, or 1
};

/// n = i^s (1+i)^t primary, n != 0.
PrimaryDecomposition decompose(GaussianInt n);

/// 16 | (c - 1).
bool is_one_mod_16(GaussianInt const &c);

/// Parses "a+bi", "a-bi", "a", "bi", "-i", "3 + 2i" ... Throws DomainError.
GaussianInt parse_gaussian(std::string_view text);

std::string to_string(GaussianInt const &z);
std::ostream &operator<<(std::ostream &os, GaussianInt const &z);

/// Floor modulus into [0, m).
constexpr i64 floor_mod(i64 a, i64 m)
{
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

} // namespace gm
