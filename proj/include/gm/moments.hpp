#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "gm/lfunc.hpp"

namespace gm {

class LValueCache;

/// Phi(x) = exp(4 - 1/((x-1)(2-x))) on (1, 2), 0 elsewhere; Phi(3/2) = 1.
double phi(double x);

/// int_1^2 Phi(x) dx.
double phi_hat_zero();

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct MomentReport
{
  double y = 0.0;
  i64 family_size = 0;
  double S1 = 0.0;
  double S2 = 0.0;
  double predicted_main = 0.0; // K Phi^(0) y log y
  double K_fit = kNaN;
  double C_fit = kNaN;
  i64 nonvanishing = 0;
  double threshold = 0.0;
};

struct SweepOptions
{
  int threads = 1;
  double tol = 1e-8;           // per-value tail tolerance
  double threshold = 1e-6;     // nonvanishing threshold reported with moments
  LValueCache *cache = nullptr; // optional read/write-through cache
};

/// Central values for a list of family members, in input order.
std::vector<LCentralValue> central_values(std::vector<GaussianInt> const &family, SweepOptions const &opts);

/// One smoothed sweep over the family y < N(c) <= 2y.
struct FamilySweep
{
  double y = 0.0;
  std::vector<LCentralValue> values; // family order (norm, re, im)
  std::vector<double> weights;       // Phi(N(c)/y)
  double S1 = 0.0;
  double S2 = 0.0;
  double weight_sum = 0.0;
  double max_tail = 0.0;
};

FamilySweep sweep_family(double y, SweepOptions const &opts = {});

/// Report for one sweep; S1 and S2 both filled, K_fit / C_fit left NaN.
MomentReport moment_report(FamilySweep const &sweep, double threshold);

/// sum* L(1/2, chi_c) Phi(N(c)/y).
MomentReport first_moment(double y, SweepOptions const &opts = {});

/// sum* L(1/2, chi_c)^2 Phi(N(c)/y).
MomentReport second_moment(double y, SweepOptions const &opts = {});

struct FitResult
{
  double K_fit = 0.0;
  double C_fit = 0.0;
  std::vector<std::pair<double, double>> residuals; // (y, S1 - fit)
  double residual_exponent = 0.0;                   // slope of log|residual| against log y
  double condition_number = 0.0;                   // of the column-scaled design
};

/// Least squares S1(y) ~ Phi^(0) (K y log y + C y). Needs >= 4 points spanning
/// at least two decades.
FitResult fit_main_term(std::vector<double> const &ys, std::vector<double> const &s1);

/// Sweeps the grid and fits; reports gets one row per grid point with the fit
/// filled in.
FitResult sweep_and_fit(std::vector<double> const &grid, SweepOptions const &opts,
                        std::vector<MomentReport> *reports = nullptr, std::vector<FamilySweep> *sweeps = nullptr);

/// n points geometrically spaced from lo to hi inclusive.
std::vector<double> geometric_grid(double lo, double hi, int n);

struct CensusWindow
{
  double lo = 0.0;
  double hi = 0.0;
  i64 members = 0;
  i64 nonvanishing = 0;
  double max_tail = 0.0;
};

/// Counts squarefree c == 1 mod 16 with lo < N(c) <= hi and |L(1/2, chi_c)|
/// above threshold. Throws DomainError when threshold < 10 * max tail bound.
CensusWindow census_window(double lo, double hi, double threshold, SweepOptions const &opts = {});

/// Census over 1 < N(c) <= y, summed over the dyadic windows (y/2, y],
/// (y/4, y/2], ... down to lo = 1. family_size counts the members,
/// nonvanishing those above threshold; S1, S2, predicted_main are NaN.
MomentReport nonvanishing_census(double y, double threshold, SweepOptions const &opts = {},
                                 std::vector<CensusWindow> *windows = nullptr);

/// Sets for the large-sieve check: primary squarefree m with N(m) <= M
/// (1 included) and squarefree ideal generators n with N(n) <= N.
std::vector<GaussianInt> sieve_moduli(i64 M);
std::vector<GaussianInt> sieve_arguments(i64 N);

/// sum_m |sum_n a_n (n/m)|^2 / ((M + N) sum |a_n|^2) for one coefficient
/// vector (0 when all a_n vanish).
double large_sieve_form(i64 M, i64 N, std::vector<std::complex<double>> const &a);

/// Maximum of large_sieve_form over `trials` random coefficient vectors with
/// real and imaginary parts uniform on [-1, 1). Trial k draws from mt19937_64
/// seeded with seed_seq{seed low, seed high, k}.
double large_sieve_ratio(i64 M, i64 N, int trials, std::uint64_t seed, int threads = 1);

} // namespace gm
