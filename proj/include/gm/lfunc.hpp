#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "gm/factor.hpp"
#include "gm/gaussian_int.hpp"

namespace gm {

enum class Smoothing
{
  GEqualsOne, // G(s) = 1
  GGaussian,  // G(s) = exp(s^2)
};

struct WeightSpec
{
  Smoothing smoothing = Smoothing::GEqualsOne;
  double t = 0.0;
};

/// V(xi) = Gamma(1/2, xi) / Gamma(1/2) = erfc(sqrt(xi)), xi > 0.
double v_weight(double xi);

/// Half-height of the truncated contour Re s = 2 used by v_weight_oracle.
inline constexpr double kOracleHeight = 200.0;

/// V_t(xi) = (1/2 pi i) int_{(2)} Gamma(s+1/2+it)/Gamma(1/2+it) G(s) xi^-s ds/s
/// by adaptive Gauss-Kronrod on |Im s| <= 200, cross-checked against a
/// trapezoid rule on the same segment. Throws NumericalError when either
/// rule fails or the two disagree.
std::complex<double> v_weight_oracle(double xi, WeightSpec const &spec = {});

struct LCentralValue
{
  GaussianInt c;
  double value = 0.0;
  i64 cutoff = 0;          // largest ideal norm summed
  double tail_bound = 0.0; // bound on the omitted terms
};

/// Ideals of norm <= max_norm in norm order, each composite ideal linked to
/// one prime factor and the cofactor, so a completely multiplicative
/// character extends from primes with one product per ideal.
class IdealTable
{
public:
  explicit IdealTable(i64 max_norm);

  i64 max_norm() const { return max_norm_; }
  std::vector<IdealRep> const &ideals() const { return ideals_; }

  /// Number of ideals of norm <= x (x <= max_norm).
  std::size_t count_up_to(i64 x) const;

  bool is_prime(std::size_t k) const { return prime_of_[k] == k; }
  std::uint32_t prime_of(std::size_t k) const { return prime_of_[k]; }
  std::uint32_t cofactor_of(std::size_t k) const { return cofactor_[k]; }

  /// Distinct norms in increasing order; ideals with norm group_norm(g) are
  /// ideals()[group_begin(g), group_begin(g + 1)).
  std::size_t group_count() const { return group_norm_.size(); }
  std::size_t group_begin(std::size_t g) const { return group_begin_[g]; }
  i64 group_norm(std::size_t g) const { return group_norm_[g]; }
  double group_inv_sqrt(std::size_t g) const { return group_inv_sqrt_[g]; }

private:
  i64 max_norm_;
  std::vector<IdealRep> ideals_;
  std::vector<std::uint32_t> prime_of_;
  std::vector<std::uint32_t> cofactor_;
  std::vector<std::size_t> group_begin_;
  std::vector<i64> group_norm_;
  std::vector<double> group_inv_sqrt_;
};

/// X(c) = ceil(N(c)^{1/2} (ln N(c) + 30) / pi).
i64 central_cutoff(i64 norm_c);

/// Bound on 2 sum_{N(A) > X} N(A)^{-1/2} V(pi N(A) / N(c)^{1/2}), given the
/// exact number of ideals of norm <= X.
double central_tail_bound(i64 norm_c, i64 cutoff, std::size_t ideals_up_to_cutoff);

/// L(1/2, chi_c) = 2 sum_A chi_c(A) N(A)^{-1/2} V(pi N(A) / N(c)^{1/2}) for
/// squarefree c == 1 mod 16, c != 1. Throws ResourceError when the tail
/// bound at the standard cutoff exceeds tol.
LCentralValue central_value(GaussianInt const &c, double tol = 1e-8);

/// Same, reusing a prebuilt table (which must reach the cutoff).
LCentralValue central_value(GaussianInt const &c, double tol, IdealTable const &table);

/// The truncated sum at an explicit cutoff, no tolerance check.
LCentralValue central_value_at_cutoff(GaussianInt const &c, i64 cutoff, IdealTable const &table);

/// zeta_{Q(i)}(2) = zeta(2) * beta(2).
double dedekind_zeta_2();

/// zeta_{Q(i)}(2) from the ideal sum up to max_norm plus the first-order
/// tail correction pi/(4X) - E(X)/X^2, E(X) the lattice-count error.
double dedekind_zeta_2_ideal_sum(i64 max_norm);

struct EulerProduct
{
  double value = 0.0;
  double tail_bound = 0.0; // A_partial - A <= tail_bound
};

/// A_partial(X) = prod over odd primes of norm <= X of 1 - 1/((N+1) N).
EulerProduct euler_product_A(i64 max_norm);
EulerProduct euler_product_A(std::vector<PrimeEntry> const &primes, i64 max_norm);

/// A_partial(10^6), as produced by euler_product_A(1'000'000).
inline constexpr double kReferenceA = 0.89967752442230164;
inline constexpr i64 kReferenceANorm = 1'000'000;

/// K = (2 + sqrt 2) pi^2 A / (3072 zeta_{Q(i)}(2)). Also assembles the same
/// constant as (2 + sqrt 2) c0 pi A / (24 h zeta) with c0 = pi/4, h = 32 and
/// throws ConsistencyError if the two differ by more than 1e-12 relative.
double main_term_coefficient(double A);
double main_term_coefficient();

} // namespace gm
