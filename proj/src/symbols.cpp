#include "gm/symbols.hpp"

#include <numeric>

namespace gm {

std::complex<double> QuarticValue::as_complex() const
{
  if (is_zero()) { return {0.0, 0.0}; }
  static constexpr std::complex<double> units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return units[code_];
}

std::string to_string(QuarticValue v)
{
  if (v.is_zero()) { return "0"; }
  static char const *names[4] = {"1", "i", "-1", "-i"};
  return names[v.exponent()];
}

bool is_gaussian_prime(GaussianInt const &pi)
{
  if (pi.is_zero()) { return false; }
  i64 const n = norm(pi);
  if (is_prime(static_cast<u64>(n))) { return true; }
  // inert primes: associates of a rational q == 3 mod 4
  if (pi.re() != 0 && pi.im() != 0) { return false; }
  i64 const q = pi.re() != 0 ? (pi.re() < 0 ? -pi.re() : pi.re()) : (pi.im() < 0 ? -pi.im() : pi.im());
  return q % 4 == 3 && is_prime(static_cast<u64>(q));
}

QuarticValue quartic_symbol_prime(GaussianInt const &a, GaussianInt const &pi)
{
  if (!is_gaussian_prime(pi)) { throw DomainError("quartic_symbol_prime: " + to_string(pi) + " is not prime"); }
  i64 const n = norm(pi);
  if (n % 2 == 0) { throw DomainError("quartic_symbol_prime: modulus above 2"); }

  GaussianInt base = mod(a, pi);
  if (base.is_zero()) { return QuarticValue::zero(); }
  GaussianInt acc{1};
  for (i64 e = (n - 1) / 4; e > 0; e >>= 1) {
    if (e & 1) { acc = mod(acc * base, pi); }
    base = mod(base * base, pi);
  }
  for (int k = 0; k < 4; ++k) {
    if (divides(pi, acc - unit_power(k))) { return QuarticValue::power_of_i(k); }
  }
  throw ConsistencyError("quartic_symbol_prime: power is not congruent to a unit");
}

namespace {

// (i/n)_4 = i^{(1-a)/2} for primary n = a+bi
int unit_supplement_exponent(GaussianInt const &n)
{
  i64 const a = floor_mod(n.re(), 8);
  return static_cast<int>(floor_mod((1 - a) / 2, 4));
}

// ((1+i)/n)_4 = i^{(a-b-1-b^2)/4} for primary n = a+bi
int ramified_supplement_exponent(GaussianInt const &n)
{
  i64 const a = floor_mod(n.re(), 16);
  i64 const b = floor_mod(n.im(), 16);
  i64 const num = floor_mod(a - b - 1 - b * b, 16);
  if (num % 4 != 0) { throw ConsistencyError("(1+i) supplement exponent is not integral for " + to_string(n)); }
  return static_cast<int>(num / 4);
}

bool quarter_is_odd(i64 norm_value) { return (((norm_value - 1) / 4) & 1) != 0; }

} // namespace

QuarticValue quartic_symbol(GaussianInt a, GaussianInt n)
{
  if (n != GaussianInt{1} && !is_primary(n)) {
    throw DomainError("quartic_symbol: modulus " + to_string(n) + " is not primary");
  }
  i64 k = 0;
  for (;;) {
    if (n == GaussianInt{1}) { return QuarticValue::power_of_i(k); }
    a = mod(a, n);
    if (a.is_zero()) { return QuarticValue::zero(); }
    auto const d = decompose(a);
    k += i64{d.unit_exponent} * unit_supplement_exponent(n) + i64{d.two_exponent} * ramified_supplement_exponent(n);
    if (d.primary == GaussianInt{1}) { return QuarticValue::power_of_i(k); }
    if (quarter_is_odd(norm(n)) && quarter_is_odd(norm(d.primary))) { k += 2; }
    a = n;
    n = d.primary;
  }
}

int quadratic_symbol(GaussianInt const &a, GaussianInt const &n)
{
  QuarticValue const v = quartic_symbol(a, n).squared();
  if (v.is_zero()) { return 0; }
  return v.exponent() == 0 ? 1 : -1;
}

int chi_c_on_ideal(GaussianInt const &c, IdealRep const &ideal)
{
  if (!is_one_mod_16(c)) { throw DomainError("chi_c: " + to_string(c) + " is not 1 mod 16"); }
  return quadratic_symbol(ideal.gen, c);
}

QuadraticCharacter::QuadraticCharacter(GaussianInt const &n) : modulus_(n)
{
  if (n.is_zero() || floor_mod(n.re() + n.im(), 2) == 0) {
    throw DomainError("QuadraticCharacter: modulus must have odd norm");
  }
  i64 const g = std::gcd(n.re(), n.im());
  rational_part_ = static_cast<u64>(g);
  GaussianInt const prim{n.re() / g, n.im() / g};
  primitive_norm_ = static_cast<u64>(norm(prim));
  if (primitive_norm_ > 1) {
    // i == -re/im mod n'; gcd(im, N(n')) = 1 for primitive n'
    u64 const m = primitive_norm_;
    u64 const im = static_cast<u64>(floor_mod(prim.im(), static_cast<i64>(m)));
    u64 const re = static_cast<u64>(floor_mod(prim.re(), static_cast<i64>(m)));
    // modular inverse by extended Euclid on signed 128-bit values
    i128 old_r = im, r = m, old_s = 1, s = 0;
    while (r != 0) {
      i128 const q = old_r / r;
      i128 tmp = old_r - q * r;
      old_r = r;
      r = tmp;
      tmp = old_s - q * s;
      old_s = s;
      s = tmp;
    }
    if (old_r != 1) { throw ConsistencyError("QuadraticCharacter: im part not invertible"); }
    i128 inv = old_s % static_cast<i128>(m);
    if (inv < 0) { inv += m; }
    root_ = static_cast<u64>((m - re) % m * static_cast<u128>(inv) % m);
  }
}

int QuadraticCharacter::operator()(i64 re, i64 im) const
{
  int v = 1;
  if (rational_part_ > 1) {
    u128 const nx = static_cast<u128>(static_cast<i128>(re) * re + static_cast<i128>(im) * im);
    v = jacobi(static_cast<u64>(nx % rational_part_), rational_part_);
    if (v == 0) { return 0; }
  }
  if (primitive_norm_ > 1) {
    u64 const m = primitive_norm_;
    u64 const a = static_cast<u64>(floor_mod(re, static_cast<i64>(m)));
    u64 const b = static_cast<u64>(floor_mod(im, static_cast<i64>(m)));
    u64 const t = (a + mulmod(b, root_, m)) % m;
    v *= jacobi(t, m);
  }
  return v;
}

} // namespace gm
