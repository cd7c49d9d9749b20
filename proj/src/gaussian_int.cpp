#include "gm/gaussian_int.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <ostream>

namespace gm {

namespace {

GaussianInt checked(i128 re, i128 im)
{
  constexpr i128 lim = std::numeric_limits<i64>::max();
  if (re > lim || re < -lim || im > lim || im < -lim || re * re + im * im > i128{kMaxNorm}) {
    throw OverflowError("Gaussian integer result exceeds the 2^62 norm limit");
  }
  return {static_cast<i64>(re), static_cast<i64>(im)};
}

// floor(x / d) for d > 0
i128 floor_div(i128 x, i128 d)
{
  i128 q = x / d;
  if ((x % d) != 0 && x < 0) { --q; }
  return q;
}

// nearest integer to x/d, ties toward negative infinity: ceil((2x - d) / 2d)
i128 round_half_down(i128 x, i128 d) { return -floor_div(-(2 * x - d), 2 * d); }

} // namespace

GaussianInt GaussianInt::operator-() const { return checked(-i128{re_}, -i128{im_}); }

GaussianInt operator+(GaussianInt const &a, GaussianInt const &b)
{
  return checked(i128{a.re_} + b.re_, i128{a.im_} + b.im_);
}

GaussianInt operator-(GaussianInt const &a, GaussianInt const &b)
{
  return checked(i128{a.re_} - b.re_, i128{a.im_} - b.im_);
}

GaussianInt operator*(GaussianInt const &a, GaussianInt const &b)
{
  return checked(i128{a.re_} * b.re_ - i128{a.im_} * b.im_, i128{a.re_} * b.im_ + i128{a.im_} * b.re_);
}

i64 norm(GaussianInt const &z)
{
  i128 const n = i128{z.re()} * z.re() + i128{z.im()} * z.im();
  if (n > i128{kMaxNorm}) { throw OverflowError("norm exceeds 2^62: " + to_string(z)); }
  return static_cast<i64>(n);
}

DivMod divmod(GaussianInt const &a, GaussianInt const &b)
{
  if (b.is_zero()) { throw DomainError("divmod: division by zero"); }
  i128 const nb = norm(b);
  // a * conj(b)
  i128 const xr = i128{a.re()} * b.re() + i128{a.im()} * b.im();
  i128 const xi = i128{a.im()} * b.re() - i128{a.re()} * b.im();
  GaussianInt const q = checked(round_half_down(xr, nb), round_half_down(xi, nb));
  GaussianInt const r = a - q * b;
  return {q, r};
}

bool divides(GaussianInt const &b, GaussianInt const &a) { return divmod(a, b).r.is_zero(); }

GaussianInt exact_div(GaussianInt const &a, GaussianInt const &b)
{
  auto const [q, r] = divmod(a, b);
  if (!r.is_zero()) { throw DomainError(to_string(b) + " does not divide " + to_string(a)); }
  return q;
}

GaussianInt unit_power(int k)
{
  switch (floor_mod(k, 4)) {
  case 0: return {1, 0};
  case 1: return {0, 1};
  case 2: return {-1, 0};
  default: return {0, -1};
  }
}

GaussianInt pow(GaussianInt z, unsigned e)
{
  GaussianInt acc{1};
  while (e) {
    if (e & 1u) { acc *= z; }
    e >>= 1u;
    if (e) { z *= z; }
  }
  return acc;
}

bool is_primary(GaussianInt const &n)
{
  i64 const a = floor_mod(n.re(), 4);
  i64 const b = floor_mod(n.im(), 4);
  return (a == 1 && b == 0) || (a == 3 && b == 2);
}

PrimaryNormalization primary_normalize(GaussianInt const &n)
{
  if ((floor_mod(n.re(), 2) + floor_mod(n.im(), 2)) % 2 == 0) {
    throw DomainError("primary_normalize: even norm for " + to_string(n));
  }
  if (n.is_unit()) {
    for (int s = 0; s < 4; ++s) {
      if (unit_power(s) == n) { return {s, GaussianInt{1}}; }
    }
  }
  // n = i^s p  <=>  p = i^{-s} n; multiplying by -i rotates one step back.
  GaussianInt p = n;
  for (int s = 0; s < 4; ++s) {
    if (is_primary(p)) { return {s, p}; }
    p = GaussianInt{p.im(), -p.re()};
  }
  throw ConsistencyError("no primary associate for odd-norm " + to_string(n));
}

PrimaryDecomposition decompose(GaussianInt n)
{
  if (n.is_zero()) { throw DomainError("decompose: zero has no decomposition"); }
  int t = 0;
  // (a+bi)/(1+i) = ((a+b) + (b-a)i)/2, exact while a+b is even
  while (floor_mod(n.re() + n.im(), 2) == 0) {
    i128 const a = n.re();
    i128 const b = n.im();
    n = GaussianInt{static_cast<i64>((a + b) / 2), static_cast<i64>((b - a) / 2)};
    ++t;
  }
  auto const [s, p] = primary_normalize(n);
  return {s, t, p};
}

GaussianInt canonical_associate(GaussianInt const &z)
{
  if (z.is_zero()) { throw DomainError("canonical_associate: zero"); }
  if (floor_mod(z.re() + z.im(), 2) == 1) { return primary_normalize(z).primary; }
  GaussianInt w = z;
  while (!(w.re() > 0 && w.im() >= 0)) { w = w.times_i(); }
  return w;
}

GaussianInt gcd(GaussianInt a, GaussianInt b)
{
  if (a.is_zero() && b.is_zero()) { throw DomainError("gcd(0, 0) is undefined"); }
  while (!b.is_zero()) {
    GaussianInt r = divmod(a, b).r;
    a = b;
    b = r;
  }
  return canonical_associate(a);
}

bool is_one_mod_16(GaussianInt const &c) { return floor_mod(c.re(), 16) == 1 && floor_mod(c.im(), 16) == 0; }

namespace {

i64 parse_int(std::string_view s, std::string_view whole)
{
  i64 v = 0;
  auto const [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw DomainError("cannot parse Gaussian integer '" + std::string(whole) + "'");
  }
  return v;
}

// "[+-]digits" or "[+-]" (coefficient of i), sign already split off
i64 parse_term(std::string_view digits, bool negative, bool imaginary, std::string_view whole)
{
  i64 v = (imaginary && digits.empty()) ? 1 : parse_int(digits, whole);
  return negative ? -v : v;
}

} // namespace

GaussianInt parse_gaussian(std::string_view text)
{
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) { s.push_back(ch); }
  }
  if (s.empty()) { throw DomainError("cannot parse empty Gaussian integer"); }

  i64 re = 0;
  i64 im = 0;
  bool seen_re = false;
  bool seen_im = false;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw DomainError("cannot parse Gaussian integer '" + std::string(text) + "'");
    }
    std::size_t end = pos;
    while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) { ++end; }
    bool const imaginary = end < s.size() && s[end] == 'i';
    std::string_view const digits(s.data() + pos, end - pos);
    if (imaginary) {
      if (seen_im) { throw DomainError("duplicate imaginary part in '" + std::string(text) + "'"); }
      im = parse_term(digits, negative, true, text);
      seen_im = true;
      pos = end + 1;
    } else {
      if (seen_re || seen_im) { throw DomainError("malformed Gaussian integer '" + std::string(text) + "'"); }
      re = parse_term(digits, negative, false, text);
      seen_re = true;
      pos = end;
    }
  }
  GaussianInt const z{re, im};
  (void)norm(z);
  return z;
}

std::string to_string(GaussianInt const &z)
{
  if (z.im() == 0) { return std::to_string(z.re()); }
  std::string imag;
  if (z.im() == 1) {
    imag = "i";
  } else if (z.im() == -1) {
    imag = "-i";
  } else {
    imag = std::to_string(z.im()) + "i";
  }
  if (z.re() == 0) { return imag; }
  return std::to_string(z.re()) + (z.im() > 0 ? "+" : "") + imag;
}

std::ostream &operator<<(std::ostream &os, GaussianInt const &z) { return os << to_string(z); }

} // namespace gm
