#pragma once

// Rational-integer number theory used underneath the Z[i] layer.

#include <cstdint>
#include <utility>
#include <vector>

namespace gm {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128{a} * b % m); }

u64 powmod(u64 base, u64 exp, u64 m);

/// floor(sqrt(n)), exact for all 64-bit n.
u64 isqrt(u64 n);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(u64 n);

/// Prime factorization (p, e) sorted by p. n >= 1; factor(1) is empty.
/// Trial division by small primes, then Brent's variant of Pollard rho.
std::vector<std::pair<u64, int>> factor_integer(u64 n);

/// Square root of a modulo an odd prime p (a must be a quadratic residue).
/// Tonelli-Shanks; the non-residue is the least z >= 2, so results are
/// reproducible.
u64 sqrt_mod(u64 a, u64 p);

/// Jacobi symbol (a/n), n odd positive.
int jacobi(u64 a, u64 n);

/// Primes <= limit (sieve of Eratosthenes).
std::vector<u64> primes_up_to(u64 limit);

} // namespace gm
