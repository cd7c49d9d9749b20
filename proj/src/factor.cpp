#include "gm/factor.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>

#include "gm/arith.hpp"

namespace gm {

namespace {

bool by_norm_then_coords(GaussianInt const &a, GaussianInt const &b)
{
  i64 const na = norm(a);
  i64 const nb = norm(b);
  if (na != nb) { return na < nb; }
  if (a.re() != b.re()) { return a.re() < b.re(); }
  return a.im() < b.im();
}

// Primary prime above a rational prime p == 1 mod 4. Cornacchia: run Euclid
// on (p, sqrt(-1) mod p) until the remainder drops below sqrt(p); then
// x^2 + y^2 = p. Integer-only, so p may go up to 2^62.
GaussianInt split_prime(u64 p)
{
  u64 a = p;
  u64 b = sqrt_mod(p - 1, p);
  if (b < p - b) { b = p - b; }
  u64 const limit = isqrt(p);
  while (b > limit) {
    u64 const t = a % b;
    a = b;
    b = t;
  }
  u64 const y2 = p - b * b;
  u64 const y = isqrt(y2);
  if (y * y != y2) { throw ConsistencyError("Cornacchia failed for p = " + std::to_string(p)); }
  return primary_normalize(GaussianInt{static_cast<i64>(b), static_cast<i64>(y)}).primary;
}

} // namespace

GaussianFactorization factor(GaussianInt const &n)
{
  if (n.is_zero()) { throw DomainError("factor: zero"); }
  GaussianFactorization out;
  GaussianInt rest = n;
  auto strip = [&rest](GaussianInt const &pi) {
    int e = 0;
    for (;;) {
      auto const [q, r] = divmod(rest, pi);
      if (!r.is_zero()) { break; }
      rest = q;
      ++e;
    }
    return e;
  };

  for (auto const &[p, e] : factor_integer(static_cast<u64>(norm(n)))) {
    if (p == 2) {
      out.factors.push_back({GaussianInt{1, 1}, strip(GaussianInt{1, 1})});
    } else if (p % 4 == 3) {
      GaussianInt const q{-static_cast<i64>(p)};
      out.factors.push_back({q, strip(q)});
    } else {
      GaussianInt const pi = split_prime(p);
      for (GaussianInt const &g : {pi, pi.conj()}) {
        if (int const k = strip(g); k > 0) { out.factors.push_back({g, k}); }
      }
    }
  }
  if (!rest.is_unit()) { throw ConsistencyError("factor: cofactor " + to_string(rest) + " is not a unit"); }
  out.unit_exponent = primary_normalize(rest).unit_exponent;
  std::sort(out.factors.begin(), out.factors.end(),
            [](PrimePower const &a, PrimePower const &b) { return by_norm_then_coords(a.prime, b.prime); });
  return out;
}

GaussianInt expand(GaussianFactorization const &f)
{
  GaussianInt acc = unit_power(f.unit_exponent);
  for (auto const &[prime, e] : f.factors) { acc *= pow(prime, static_cast<unsigned>(e)); }
  return acc;
}

int moebius(GaussianInt const &n)
{
  if (n.is_zero() || floor_mod(n.re() + n.im(), 2) == 0) { throw DomainError("moebius: needs odd norm"); }
  int mu = 1;
  for (auto const &pp : factor(n).factors) {
    if (pp.exponent > 1) { return 0; }
    mu = -mu;
  }
  return mu;
}

bool is_squarefree(GaussianInt const &n)
{
  auto const f = factor(n);
  return std::all_of(f.factors.begin(), f.factors.end(), [](PrimePower const &pp) { return pp.exponent == 1; });
}

std::vector<PrimeEntry> primes_by_norm(i64 max_norm)
{
  std::vector<PrimeEntry> out;
  if (max_norm < 2) { return out; }
  for (u64 p : primes_up_to(static_cast<u64>(max_norm))) {
    if (p % 4 == 1) {
      GaussianInt const pi = split_prime(p);
      out.push_back({pi, static_cast<i64>(p)});
      out.push_back({pi.conj(), static_cast<i64>(p)});
    } else if (p % 4 == 3 && u128{p} * p <= static_cast<u64>(max_norm)) {
      out.push_back({GaussianInt{-static_cast<i64>(p)}, static_cast<i64>(p * p)});
    }
  }
  std::sort(out.begin(), out.end(),
            [](PrimeEntry const &a, PrimeEntry const &b) { return by_norm_then_coords(a.prime, b.prime); });
  return out;
}

std::vector<IdealRep> enumerate_ideals(i64 max_norm)
{
  std::vector<IdealRep> out;
  if (max_norm < 1) { return out; }
  i64 const r = static_cast<i64>(isqrt(static_cast<u64>(max_norm)));
  out.reserve(static_cast<std::size_t>(0.8 * static_cast<double>(max_norm)) + 4 * static_cast<std::size_t>(r) + 8);
  for (i64 b = 0; b <= r; ++b) {
    i64 const amax = static_cast<i64>(isqrt(static_cast<u64>(max_norm - b * b)));
    for (i64 a = 1; a <= amax; ++a) { out.push_back({GaussianInt{a, b}, a * a + b * b}); }
  }
  std::sort(out.begin(), out.end(), [](IdealRep const &x, IdealRep const &y) {
    return x.norm != y.norm ? x.norm < y.norm : x.gen.im() < y.gen.im();
  });
  return out;
}

i64 count_ideals(i64 max_norm)
{
  if (max_norm < 1) { return 0; }
  i64 const r = static_cast<i64>(isqrt(static_cast<u64>(max_norm)));
  i64 total = 0;
  for (i64 b = 0; b <= r; ++b) { total += static_cast<i64>(isqrt(static_cast<u64>(max_norm - b * b))); }
  return total;
}

namespace {

// #{a in [-m, m] : a == r mod 4}
i64 count_in_class(i64 m, i64 r)
{
  // shift to [0, 2m]: a + m == r + m mod 4
  i64 const target = floor_mod(r + m, 4);
  i64 const len = 2 * m + 1;
  return len / 4 + (floor_mod(len, 4) > target ? 1 : 0);
}

} // namespace

i64 count_residue_class(i64 x)
{
  if (x < 1) { throw DomainError("count_residue_class: x must be >= 1"); }
  i64 const r = static_cast<i64>(isqrt(static_cast<u64>(x)));
  i64 total = 0;
  for (i64 b = -r; b <= r; ++b) {
    i64 const m = static_cast<i64>(isqrt(static_cast<u64>(x - b * b)));
    i64 const bm = floor_mod(b, 4);
    if (bm == 0) {
      total += count_in_class(m, 1);
    } else if (bm == 2) {
      total += count_in_class(m, 3);
    }
  }
  return total;
}

std::vector<GaussianInt> enumerate_family_window(double lo, double hi)
{
  if (!(lo >= 1.0) || !(hi > lo)) { throw DomainError("enumerate_family_window: need 1 <= lo < hi"); }
  if (hi > static_cast<double>(kMaxNorm)) { throw OverflowError("enumerate_family_window: hi beyond 2^62"); }
  std::vector<GaussianInt> out;
  i64 const r = static_cast<i64>(std::floor(std::sqrt(hi))) + 1;
  for (i64 im = -(r / 16) * 16; im <= r; im += 16) {
    // re = 1 + 16k
    for (i64 re = 1 - ((r + 1) / 16 + 1) * 16; re <= r; re += 16) {
      double const n = static_cast<double>(re * re + im * im);
      if (n <= lo || n > hi) { continue; }
      GaussianInt const c{re, im};
      if (is_squarefree(c)) { out.push_back(c); }
    }
  }
  std::sort(out.begin(), out.end(), by_norm_then_coords);
  return out;
}

std::vector<GaussianInt> enumerate_family(double y)
{
  if (!(y >= 16.0)) { throw DomainError("enumerate_family: y must be >= 16"); }
  return enumerate_family_window(y, 2.0 * y);
}

namespace {

constexpr char kMagic[8] = {'G', 'M', 'P', 'R', 'I', 'M', 'E', 'S'};

bool read_prime_cache(std::filesystem::path const &file, i64 max_norm, std::vector<PrimeEntry> &out)
{
  std::ifstream in(file, std::ios::binary);
  if (!in) { return false; }
  char magic[8];
  std::uint32_t version = 0, reserved = 0;
  i64 stored_max = 0;
  std::uint64_t count = 0;
  in.read(magic, 8);
  in.read(reinterpret_cast<char *>(&version), sizeof version);
  in.read(reinterpret_cast<char *>(&reserved), sizeof reserved);
  in.read(reinterpret_cast<char *>(&stored_max), sizeof stored_max);
  in.read(reinterpret_cast<char *>(&count), sizeof count);
  if (!in || std::memcmp(magic, kMagic, 8) != 0 || version != kPrimeCacheVersion || stored_max < max_norm) {
    return false;
  }
  out.clear();
  for (std::uint64_t k = 0; k < count; ++k) {
    i64 rec[3];
    in.read(reinterpret_cast<char *>(rec), sizeof rec);
    if (!in) { return false; }
    if (rec[2] > max_norm) { break; }
    out.push_back({GaussianInt{rec[0], rec[1]}, rec[2]});
  }
  return true;
}

} // namespace

std::filesystem::path prime_cache_path(std::filesystem::path const &cache_dir)
{
  return cache_dir / ("primes-v" + std::to_string(kPrimeCacheVersion) + ".bin");
}

void write_prime_cache(std::filesystem::path const &file, i64 max_norm, std::vector<PrimeEntry> const &primes)
{
  std::filesystem::create_directories(file.parent_path());
  auto const tmp = std::filesystem::path(file).concat(".tmp");
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) { throw ResourceError("cannot write prime cache " + tmp.string()); }
    std::uint32_t const version = kPrimeCacheVersion, reserved = 0;
    std::uint64_t const count = primes.size();
    os.write(kMagic, 8);
    os.write(reinterpret_cast<char const *>(&version), sizeof version);
    os.write(reinterpret_cast<char const *>(&reserved), sizeof reserved);
    os.write(reinterpret_cast<char const *>(&max_norm), sizeof max_norm);
    os.write(reinterpret_cast<char const *>(&count), sizeof count);
    for (auto const &e : primes) {
      i64 const rec[3] = {e.prime.re(), e.prime.im(), e.norm};
      os.write(reinterpret_cast<char const *>(rec), sizeof rec);
    }
    if (!os) { throw ResourceError("failed writing prime cache " + tmp.string()); }
  }
  std::filesystem::rename(tmp, file);
}

std::vector<PrimeEntry> load_or_build_primes(i64 max_norm, std::filesystem::path const &cache_dir)
{
  auto const file = prime_cache_path(cache_dir);
  std::vector<PrimeEntry> primes;
  if (read_prime_cache(file, max_norm, primes)) { return primes; }
  primes = primes_by_norm(max_norm);
  write_prime_cache(file, max_norm, primes);
  return primes;
}

} // namespace gm
