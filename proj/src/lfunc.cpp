#include "gm/lfunc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gm/arith.hpp"
#include "gm/errors.hpp"
#include "gm/quadrature.hpp"
#include "gm/special.hpp"
#include "gm/summation.hpp"
#include "gm/symbols.hpp"

namespace gm {

double v_weight(double xi)
{
  if (!(xi > 0.0)) { throw DomainError("v_weight: xi must be positive"); }
  return std::erfc(std::sqrt(xi));
}

std::complex<double> v_weight_oracle(double xi, WeightSpec const &spec)
{
  if (!(xi > 0.0)) { throw DomainError("v_weight_oracle: xi must be positive"); }
  using cd = std::complex<double>;
  double const sigma = 2.0;
  cd const shift{0.5, spec.t};
  cd const log_denominator = log_gamma(shift);
  double const log_xi = std::log(xi);
  // ds = i dtau, so (1/2 pi i) ds = dtau / (2 pi)
  auto integrand = [&](double tau) {
    cd const s{sigma, tau};
    cd log_term = log_gamma(s + shift) - log_denominator - s * log_xi;
    if (spec.smoothing == Smoothing::GGaussian) { log_term += s * s; }
    return std::exp(log_term) / (s * (2.0 * std::numbers::pi));
  };

  auto const adaptive = integrate<cd>(integrand, -kOracleHeight, kOracleHeight, 1e-11, 0.0, 4000);

  // trapezoid rule; the integrand is analytic in |Im tau| < 2, so the
  // discretisation error is of order exp(-4 pi / h)
  double const h = 1.0 / 16.0;
  int const steps = static_cast<int>(std::lround(2.0 * kOracleHeight / h));
  CompensatedSum<cd> trap;
  for (int k = 0; k <= steps; ++k) {
    cd const f = integrand(-kOracleHeight + k * h);
    trap.add(k == 0 || k == steps ? 0.5 * f : f);
  }
  cd const trapezoid = trap.value() * h;

  double const allowed = 1e-9 + 100.0 * 2.220446049250313e-16 * adaptive.magnitude;
  if (std::abs(adaptive.value - trapezoid) > allowed) {
    throw NumericalError("v_weight_oracle: adaptive and trapezoid rules disagree at xi = " + std::to_string(xi) +
                         " (difference " + std::to_string(std::abs(adaptive.value - trapezoid)) + ", allowed " +
                         std::to_string(allowed) + ")");
  }
  return adaptive.value;
}

namespace {

GaussianInt ideal_generator(GaussianInt x)
{
  for (int k = 0; k < 4; ++k) {
    if (x.re() > 0 && x.im() >= 0) { return x; }
    x = x.times_i();
  }
  throw ConsistencyError("ideal_generator: zero");
}

} // namespace

IdealTable::IdealTable(i64 max_norm) : max_norm_(max_norm)
{
  if (max_norm < 1) { throw DomainError("IdealTable: max_norm must be >= 1"); }
  if (max_norm > (i64{1} << 31)) { throw ResourceError("IdealTable: max_norm too large"); }
  ideals_ = enumerate_ideals(max_norm);
  std::size_t const n = ideals_.size();
  i64 const r = static_cast<i64>(isqrt(static_cast<u64>(max_norm)));
  auto const slot = [r](GaussianInt const &g) { return static_cast<std::size_t>(g.re() * (r + 1) + g.im()); };
  std::vector<std::uint32_t> index(static_cast<std::size_t>((r + 1) * (r + 1)), 0);
  for (std::size_t k = 0; k < n; ++k) { index[slot(ideals_[k].gen)] = static_cast<std::uint32_t>(k); }

  // smallest prime factor of each norm
  std::vector<std::uint32_t> spf(static_cast<std::size_t>(max_norm) + 1, 0);
  for (i64 p = 2; p <= max_norm; ++p) {
    if (spf[p] != 0) { continue; }
    for (i64 m = p; m <= max_norm; m += p) {
      if (spf[m] == 0) { spf[m] = static_cast<std::uint32_t>(p); }
    }
  }

  prime_of_.assign(n, 0);
  cofactor_.assign(n, 0);
  for (std::size_t k = 1; k < n; ++k) {
    GaussianInt const &a = ideals_[k].gen;
    i64 const N = ideals_[k].norm;
    i64 const p = spf[N];
    GaussianInt prime;
    if (p == 2) {
      prime = GaussianInt{1, 1};
    } else if (p % 4 == 3) {
      prime = GaussianInt{p, 0};
    } else {
      // the two ideals of norm p; at least one divides a
      auto const it = std::lower_bound(ideals_.begin(), ideals_.end(), p,
                                       [](IdealRep const &x, i64 v) { return x.norm < v; });
      prime = divides(it->gen, a) ? it->gen : std::next(it)->gen;
    }
    if (norm(prime) == N) {
      prime_of_[k] = static_cast<std::uint32_t>(k);
      continue;
    }
    prime_of_[k] = index[slot(prime)];
    cofactor_[k] = index[slot(ideal_generator(exact_div(a, prime)))];
  }

  for (std::size_t k = 0; k < n; ++k) {
    if (k == 0 || ideals_[k].norm != ideals_[k - 1].norm) {
      group_begin_.push_back(k);
      group_norm_.push_back(ideals_[k].norm);
      group_inv_sqrt_.push_back(1.0 / std::sqrt(static_cast<double>(ideals_[k].norm)));
    }
  }
  group_begin_.push_back(n);
}

std::size_t IdealTable::count_up_to(i64 x) const
{
  auto const it =
      std::upper_bound(ideals_.begin(), ideals_.end(), x, [](i64 v, IdealRep const &r) { return v < r.norm; });
  return static_cast<std::size_t>(it - ideals_.begin());
}

i64 central_cutoff(i64 norm_c)
{
  double const n = static_cast<double>(norm_c);
  return static_cast<i64>(std::ceil(std::sqrt(n) * (std::log(n) + 30.0) / std::numbers::pi));
}

double central_tail_bound(i64 norm_c, i64 cutoff, std::size_t ideals_up_to_cutoff)
{
  // V(xi) <= exp(-xi); with f(u) = u^{-1/2} exp(-a u), a = pi / N(c)^{1/2},
  // and I(t) <= B(t) = pi (sqrt t + 1)^2 / 4, partial summation gives
  // sum_{N > X} f(N) <= f(X) (B(X) - I(X)) + (pi/4)(1 + X^{-1/2}) X^{-1/2} e^{-aX} / a.
  double const X = static_cast<double>(cutoff);
  double const a = std::numbers::pi / std::sqrt(static_cast<double>(norm_c));
  double const decay = std::exp(-a * X);
  double const f = decay / std::sqrt(X);
  double const B = std::numbers::pi * (std::sqrt(X) + 1.0) * (std::sqrt(X) + 1.0) / 4.0;
  double const excess = std::max(0.0, B - static_cast<double>(ideals_up_to_cutoff));
  double const integral = std::numbers::pi / 4.0 * (1.0 + 1.0 / std::sqrt(X)) * f / a;
  return 2.0 * (f * excess + integral);
}

namespace {

void require_family_member(GaussianInt const &c)
{
  if (c == GaussianInt{1}) { throw DomainError("central_value: c = 1 is excluded"); }
  if (!is_one_mod_16(c)) { throw DomainError("central_value: " + to_string(c) + " is not 1 mod 16"); }
  if (!is_squarefree(c)) { throw DomainError("central_value: " + to_string(c) + " is not squarefree"); }
}

} // namespace

LCentralValue central_value_at_cutoff(GaussianInt const &c, i64 cutoff, IdealTable const &table)
{
  if (cutoff > table.max_norm()) {
    throw ResourceError("central_value: ideal table stops at " + std::to_string(table.max_norm()) +
                        ", cutoff is " + std::to_string(cutoff));
  }
  i64 const nc = norm(c);
  QuadraticCharacter const chi(c);
  std::size_t const count = table.count_up_to(cutoff);
  auto const &ideals = table.ideals();
  std::vector<signed char> values(count);
  values[0] = 1;
  for (std::size_t k = 1; k < count; ++k) {
    values[k] = table.is_prime(k) ? static_cast<signed char>(chi(ideals[k].gen))
                                  : static_cast<signed char>(values[table.prime_of(k)] * values[table.cofactor_of(k)]);
  }
  double const a = std::numbers::pi / std::sqrt(static_cast<double>(nc));
  CompensatedSum<double> sum;
  for (std::size_t g = 0; g < table.group_count() && table.group_begin(g) < count; ++g) {
    int s = 0;
    for (std::size_t k = table.group_begin(g); k < table.group_begin(g + 1); ++k) { s += values[k]; }
    if (s == 0) { continue; }
    double const n = static_cast<double>(table.group_norm(g));
    sum.add(s * table.group_inv_sqrt(g) * std::erfc(std::sqrt(a * n)));
  }
  return {c, 2.0 * sum.value(), cutoff, central_tail_bound(nc, cutoff, count)};
}

LCentralValue central_value(GaussianInt const &c, double tol, IdealTable const &table)
{
  require_family_member(c);
  LCentralValue v = central_value_at_cutoff(c, central_cutoff(norm(c)), table);
  if (!(v.tail_bound <= tol)) {
    throw ResourceError("central_value: tail bound " + std::to_string(v.tail_bound) + " exceeds tolerance " +
                        std::to_string(tol) + " for c = " + to_string(c));
  }
  return v;
}

LCentralValue central_value(GaussianInt const &c, double tol)
{
  require_family_member(c);
  IdealTable const table(central_cutoff(norm(c)));
  return central_value(c, tol, table);
}

double dedekind_zeta_2() { return riemann_zeta_2() * dirichlet_beta_2(); }

double dedekind_zeta_2_ideal_sum(i64 max_norm)
{
  if (max_norm < 1) { throw DomainError("dedekind_zeta_2_ideal_sum: max_norm must be >= 1"); }
  // ideals a + bi, a >= 1, b >= 0; add small terms first
  i64 const r = static_cast<i64>(isqrt(static_cast<u64>(max_norm)));
  CompensatedSum<double> sum;
  i64 count = 0;
  for (i64 b = r; b >= 0; --b) {
    i64 const amax = static_cast<i64>(isqrt(static_cast<u64>(max_norm - b * b)));
    for (i64 a = amax; a >= 1; --a) {
      double const n = static_cast<double>(a * a + b * b);
      sum.add(1.0 / (n * n));
    }
    count += amax;
  }
  double const X = static_cast<double>(max_norm);
  double const excess = static_cast<double>(count) - std::numbers::pi * X / 4.0;
  sum.add(std::numbers::pi / (4.0 * X));
  sum.add(-excess / (X * X));
  return sum.value();
}

EulerProduct euler_product_A(std::vector<PrimeEntry> const &primes, i64 max_norm)
{
  if (max_norm < 5) { throw DomainError("euler_product_A: X must be >= 5"); }
  // log-sum for accuracy; primes ordered by norm
  CompensatedSum<double> log_sum;
  for (auto const &e : primes) {
    if (e.norm > max_norm) { break; }
    double const n = static_cast<double>(e.norm);
    log_sum.add(std::log1p(-1.0 / ((n + 1.0) * n)));
  }
  double const value = std::exp(log_sum.value());
  // A_partial - A <= A_partial * sum_{N > X} 1/N^2 over ideals; partial
  // summation against B(t) = pi (sqrt t + 1)^2 / 4 bounds that sum by
  // (B(X) - I(X)) / X^2 + (pi/4)(1/X + (2/3) X^{-3/2}).
  double const X = static_cast<double>(max_norm);
  double const B = std::numbers::pi * (std::sqrt(X) + 1.0) * (std::sqrt(X) + 1.0) / 4.0;
  double const I = static_cast<double>(count_ideals(max_norm));
  double const tail = std::max(0.0, B - I) / (X * X) + std::numbers::pi / 4.0 * (1.0 / X + 2.0 / (3.0 * X * std::sqrt(X)));
  return {value, value * tail};
}

EulerProduct euler_product_A(i64 max_norm) { return euler_product_A(primes_by_norm(max_norm), max_norm); }

double main_term_coefficient(double A)
{
  double const zeta = dedekind_zeta_2();
  double const root2 = std::numbers::sqrt2;
  double const pi = std::numbers::pi;
  double const K = (2.0 + root2) * pi * pi * A / (3072.0 * zeta);
  double const c0 = pi / 4.0;
  double const classes = 32.0;
  double const assembled = (2.0 + root2) * c0 * pi * A / (24.0 * classes * zeta);
  if (std::abs(K - assembled) > 1e-12 * std::abs(K)) {
    throw ConsistencyError("main_term_coefficient: assembled forms disagree");
  }
  return K;
}

double main_term_coefficient() { return main_term_coefficient(kReferenceA); }

} // namespace gm
