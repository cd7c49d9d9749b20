#pragma once

#include <filesystem>
#include <vector>

#include "gm/gaussian_int.hpp"

namespace gm {

struct PrimePower
{
  GaussianInt prime; // primary, or 1+i
  int exponent = 0;
};

/// n = i^s * prod prime^exponent, primes pairwise non-associate, sorted by
/// (norm, re, im).
struct GaussianFactorization
{
  int unit_exponent = 0;
  std::vector<PrimePower> factors;
};

GaussianFactorization factor(GaussianInt const &n);

/// Multiplies a factorization back out.
GaussianInt expand(GaussianFactorization const &f);

/// Moebius function on odd-norm elements.
int moebius(GaussianInt const &n);

bool is_squarefree(GaussianInt const &n);

struct PrimeEntry
{
  GaussianInt prime; // primary
  i64 norm = 0;

  friend bool operator==(PrimeEntry const &, PrimeEntry const &) = default;
};

/// Odd-norm Gaussian primes with norm <= max_norm, one primary generator per
/// prime ideal, sorted by (norm, re, im).
std::vector<PrimeEntry> primes_by_norm(i64 max_norm);

/// Canonical generator of a nonzero ideal: re >= 1, im >= 0.
struct IdealRep
{
  GaussianInt gen;
  i64 norm = 0;
};

/// All ideals of norm <= max_norm, ordered by norm (ties by im).
std::vector<IdealRep> enumerate_ideals(i64 max_norm);

/// Number of ideals of norm <= max_norm.
i64 count_ideals(i64 max_norm);

/// #{a primary : norm(a) <= x}, by exact lattice scan.
i64 count_residue_class(i64 x);

/// Squarefree c == 1 mod 16 with y < norm(c) <= 2y, ordered by (norm, re, im).
std::vector<GaussianInt> enumerate_family(double y);

/// Squarefree c == 1 mod 16 with lo < norm(c) <= hi, lo >= 1 (so c = 1 never
/// appears).
std::vector<GaussianInt> enumerate_family_window(double lo, double hi);

// Prime table cache. File layout (native little-endian):
//   char[8] "GMPRIMES", u32 version, u32 reserved, i64 max_norm, u64 count,
//   then count records of (i64 re, i64 im, i64 norm), sorted by norm.
inline constexpr std::uint32_t kPrimeCacheVersion = 1;

std::filesystem::path prime_cache_path(std::filesystem::path const &cache_dir);

/// Reads the cache when it exists, has the current version and covers
/// max_norm; otherwise rebuilds it and rewrites the file.
std::vector<PrimeEntry> load_or_build_primes(i64 max_norm, std::filesystem::path const &cache_dir);

void write_prime_cache(std::filesystem::path const &file, i64 max_norm, std::vector<PrimeEntry> const &primes);

} // namespace gm
