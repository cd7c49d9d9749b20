#include "gm/arith.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "gm/errors.hpp"

namespace gm {

u64 powmod(u64 base, u64 exp, u64 m)
{
  u64 acc = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1u) { acc = mulmod(acc, base, m); }
    base = mulmod(base, base, m);
    exp >>= 1u;
  }
  return acc;
}

u64 isqrt(u64 n)
{
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && u128{r} * r > n) { --r; }
  while (u128{r + 1} * (r + 1) <= n) { ++r; }
  return r;
}

bool is_prime(u64 n)
{
  if (n < 2) { return false; }
  for (u64 p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % p == 0) { return n == p; }
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1u) == 0) {
    d >>= 1u;
    ++s;
  }
  for (u64 a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) { continue; }
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) { return false; }
  }
  return true;
}

namespace {

// Brent's cycle finding with batched gcds. Returns a nontrivial factor of the
// odd composite n.
u64 pollard_brent(u64 n)
{
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
    u64 y = 2, x = 2, ys = 2, q = 1, g = 1;
    u64 const m = 128;
    u64 r = 1;
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) { y = f(y); }
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1u;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) { return g; }
  }
}

void split(u64 n, std::vector<u64> &out)
{
  if (n == 1) { return; }
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 const d = pollard_brent(n);
  split(d, out);
  split(n / d, out);
}

} // namespace

std::vector<std::pair<u64, int>> factor_integer(u64 n)
{
  if (n == 0) { throw DomainError("factor_integer: zero"); }
  std::vector<u64> primes;
  for (u64 p = 2; p < 1000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  split(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<u64, int>> out;
  for (u64 p : primes) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1);
    }
  }
  return out;
}

u64 sqrt_mod(u64 a, u64 p)
{
  a %= p;
  if (a == 0) { return 0; }
  if (p == 2) { return a; }
  if (powmod(a, (p - 1) / 2, p) != 1) { throw DomainError("sqrt_mod: not a quadratic residue"); }
  // p - 1 = q 2^s with q odd
  u64 q = p - 1;
  int s = 0;
  while ((q & 1u) == 0) {
    q >>= 1u;
    ++s;
  }
  u64 z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) { ++z; }
  u64 m = static_cast<u64>(s);
  u64 c = powmod(z, q, p);
  u64 t = powmod(a, q, p);
  u64 r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0;
    u64 t2 = t;
    while (t2 != 1) {
      t2 = mulmod(t2, t2, p);
      ++i;
    }
    u64 b = c;
    for (u64 j = 0; j + i + 1 < m; ++j) { b = mulmod(b, b, p); }
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

int jacobi(u64 a, u64 n)
{
  a %= n;
  int t = 1;
  while (a != 0) {
    int const z = std::countr_zero(a);
    a >>= z;
    // (2/n) = -1 iff n = 3, 5 mod 8
    if ((z & 1) && ((n & 7u) == 3 || (n & 7u) == 5)) { t = -t; }
    if ((a & 3u) == 3 && (n & 3u) == 3) { t = -t; }
    std::swap(a, n);
    a %= n;
  }
  return n == 1 ? t : 0;
}

std::vector<u64> primes_up_to(u64 limit)
{
  std::vector<u64> out;
  if (limit < 2) { return out; }
  std::vector<bool> composite(limit + 1, false);
  for (u64 p = 2; p <= limit; ++p) {
    if (composite[p]) { continue; }
    out.push_back(p);
    for (u64 k = p * p; k <= limit; k += p) { composite[k] = true; }
  }
  return out;
}

} // namespace gm
