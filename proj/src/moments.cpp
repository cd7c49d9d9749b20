#include "gm/moments.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "gm/errors.hpp"
#include "gm/lvalue_cache.hpp"
#include "gm/parallel.hpp"
#include "gm/quadrature.hpp"
#include "gm/summation.hpp"
#include "gm/symbols.hpp"

namespace gm {

double phi(double x)
{
  if (!(x > 1.0 && x < 2.0)) { return 0.0; }
  return std::exp(4.0 - 1.0 / ((x - 1.0) * (2.0 - x)));
}

double phi_hat_zero()
{
  static double const value = integrate<double>(phi, 1.0, 2.0, 1e-15).value;
  return value;
}

std::vector<LCentralValue> central_values(std::vector<GaussianInt> const &family, SweepOptions const &opts)
{
  std::vector<LCentralValue> out(family.size());
  std::vector<std::size_t> missing;
  for (std::size_t k = 0; k < family.size(); ++k) {
    std::optional<LCentralValue> hit;
    if (opts.cache != nullptr) { hit = opts.cache->find(family[k]); }
    if (hit && hit->tail_bound <= opts.tol) {
      out[k] = *hit;
    } else {
      missing.push_back(k);
    }
  }
  if (missing.empty()) { return out; }
  i64 max_cutoff = 1;
  for (std::size_t k : missing) { max_cutoff = std::max(max_cutoff, central_cutoff(norm(family[k]))); }
  IdealTable const table(max_cutoff);
  parallel_for(missing.size(), opts.threads, [&](std::size_t j, std::size_t) {
    std::size_t const k = missing[j];
    out[k] = central_value(family[k], opts.tol, table);
  });
  if (opts.cache != nullptr) {
    for (std::size_t k : missing) { opts.cache->insert(out[k]); }
  }
  return out;
}

FamilySweep sweep_family(double y, SweepOptions const &opts)
{
  if (!(y >= 1.0)) { throw DomainError("sweep_family: y must be >= 1"); }
  FamilySweep sweep;
  sweep.y = y;
  auto const family = enumerate_family_window(y, 2.0 * y);
  sweep.values = central_values(family, opts);
  CompensatedSum<double> s1, s2, w;
  for (auto const &v : sweep.values) {
    double const weight = phi(static_cast<double>(norm(v.c)) / y);
    sweep.weights.push_back(weight);
    s1.add(v.value * weight);
    s2.add(v.value * v.value * weight);
    w.add(weight);
    sweep.max_tail = std::max(sweep.max_tail, v.tail_bound);
  }
  sweep.S1 = s1.value();
  sweep.S2 = s2.value();
  sweep.weight_sum = w.value();
  return sweep;
}

MomentReport moment_report(FamilySweep const &sweep, double threshold)
{
  if (!(threshold >= 10.0 * sweep.max_tail) || !(threshold > 0.0)) {
    throw DomainError("moment_report: threshold below 10x the certified tail bound");
  }
  MomentReport r;
  r.y = sweep.y;
  r.family_size = static_cast<i64>(sweep.values.size());
  r.S1 = sweep.S1;
  r.S2 = sweep.S2;
  r.predicted_main = main_term_coefficient() * phi_hat_zero() * sweep.y * std::log(sweep.y);
  r.threshold = threshold;
  r.nonvanishing = std::count_if(sweep.values.begin(), sweep.values.end(),
                                 [threshold](LCentralValue const &v) { return std::abs(v.value) > threshold; });
  return r;
}

MomentReport first_moment(double y, SweepOptions const &opts)
{
  return moment_report(sweep_family(y, opts), opts.threshold);
}

MomentReport second_moment(double y, SweepOptions const &opts)
{
  return moment_report(sweep_family(y, opts), opts.threshold);
}

std::vector<double> geometric_grid(double lo, double hi, int n)
{
  if (n < 1 || !(lo > 0.0) || !(hi >= lo)) { throw DomainError("geometric_grid: need n >= 1 and 0 < lo <= hi"); }
  if (n == 1) { return {lo}; }
  std::vector<double> out;
  double const step = std::log(hi / lo) / (n - 1);
  for (int k = 0; k < n; ++k) { out.push_back(k == n - 1 ? hi : lo * std::exp(step * k)); }
  return out;
}

FitResult fit_main_term(std::vector<double> const &ys, std::vector<double> const &s1)
{
  if (ys.size() != s1.size()) { throw DomainError("fit_main_term: grid and data differ in length"); }
  if (ys.size() < 4) { throw DomainError("fit_main_term: need at least 4 grid points"); }
  auto const [lo, hi] = std::minmax_element(ys.begin(), ys.end());
  if (!(*lo > 1.0) || !(*hi >= 100.0 * *lo)) { throw DomainError("fit_main_term: grid must span two decades above 1"); }

  Eigen::Index const n = static_cast<Eigen::Index>(ys.size());
  double const ph = phi_hat_zero();
  Eigen::MatrixXd design(n, 2);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    double const y = ys[static_cast<std::size_t>(k)];
    design(k, 0) = ph * y * std::log(y);
    design(k, 1) = ph * y;
    rhs(k) = s1[static_cast<std::size_t>(k)];
  }
  Eigen::Vector2d const scale = design.colwise().norm().transpose();
  Eigen::MatrixXd const scaled = design * scale.cwiseInverse().asDiagonal();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(scaled, Eigen::ComputeThinU | Eigen::ComputeThinV);
  auto const &sv = svd.singularValues();
  FitResult fit;
  fit.condition_number = sv(1) > 0.0 ? sv(0) / sv(1) : std::numeric_limits<double>::infinity();
  if (!(fit.condition_number < 1e12)) { throw DomainError("fit_main_term: singular design"); }
  Eigen::Vector2d const coef = svd.solve(rhs).cwiseQuotient(scale);
  fit.K_fit = coef(0);
  fit.C_fit = coef(1);
  Eigen::VectorXd const residual = rhs - design * coef;

  // slope of log|r| on log y over the nonzero residuals
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    double const y = ys[static_cast<std::size_t>(k)];
    fit.residuals.emplace_back(y, residual(k));
    if (residual(k) == 0.0) { continue; }
    double const lx = std::log(y);
    double const ly = std::log(std::abs(residual(k)));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++m;
  }
  fit.residual_exponent = m >= 2 ? (m * sxy - sx * sy) / (m * sxx - sx * sx) : kNaN;
  return fit;
}

FitResult sweep_and_fit(std::vector<double> const &grid, SweepOptions const &opts, std::vector<MomentReport> *reports,
                        std::vector<FamilySweep> *sweeps)
{
  std::vector<double> s1;
  std::vector<MomentReport> rows;
  for (double y : grid) {
    FamilySweep sweep = sweep_family(y, opts);
    s1.push_back(sweep.S1);
    rows.push_back(moment_report(sweep, opts.threshold));
    if (sweeps != nullptr) { sweeps->push_back(std::move(sweep)); }
  }
  FitResult fit = fit_main_term(grid, s1);
  for (auto &r : rows) {
    r.K_fit = fit.K_fit;
    r.C_fit = fit.C_fit;
  }
  if (reports != nullptr) { *reports = std::move(rows); }
  return fit;
}

CensusWindow census_window(double lo, double hi, double threshold, SweepOptions const &opts)
{
  if (!(threshold > 0.0)) { throw DomainError("census_window: threshold must be positive"); }
  CensusWindow w;
  w.lo = lo;
  w.hi = hi;
  auto const values = central_values(enumerate_family_window(lo, hi), opts);
  w.members = static_cast<i64>(values.size());
  for (auto const &v : values) {
    w.max_tail = std::max(w.max_tail, v.tail_bound);
    if (std::abs(v.value) > threshold) { ++w.nonvanishing; }
  }
  if (threshold < 10.0 * w.max_tail) {
    throw DomainError("census_window: threshold " + std::to_string(threshold) +
                      " is below 10x the certified tail bound " + std::to_string(w.max_tail));
  }
  return w;
}

MomentReport nonvanishing_census(double y, double threshold, SweepOptions const &opts,
                                 std::vector<CensusWindow> *windows)
{
  if (!(threshold > 0.0)) { throw DomainError("nonvanishing_census: threshold must be positive"); }
  MomentReport r;
  r.y = y;
  r.S1 = r.S2 = r.predicted_main = kNaN;
  r.threshold = threshold;
  for (double hi = y; hi > 1.0;) {
    double const lo = std::max(1.0, hi / 2.0);
    CensusWindow const w = census_window(lo, hi, threshold, opts);
    r.family_size += w.members;
    r.nonvanishing += w.nonvanishing;
    if (windows != nullptr) { windows->push_back(w); }
    hi = lo;
  }
  return r;
}

namespace {

bool by_norm(GaussianInt const &a, GaussianInt const &b)
{
  i64 const na = norm(a), nb = norm(b);
  if (na != nb) { return na < nb; }
  if (a.re() != b.re()) { return a.re() < b.re(); }
  return a.im() < b.im();
}

} // namespace

std::vector<GaussianInt> sieve_moduli(i64 M)
{
  std::vector<GaussianInt> out;
  i64 const r = static_cast<i64>(std::sqrt(static_cast<double>(std::max<i64>(M, 0)))) + 1;
  for (i64 a = -r; a <= r; ++a) {
    for (i64 b = -r; b <= r; ++b) {
      GaussianInt const m{a, b};
      if (a * a + b * b > M || m.is_zero() || !is_primary(m) || !is_squarefree(m)) { continue; }
      out.push_back(m);
    }
  }
  std::sort(out.begin(), out.end(), by_norm);
  return out;
}

std::vector<GaussianInt> sieve_arguments(i64 N)
{
  std::vector<GaussianInt> out;
  for (auto const &ideal : enumerate_ideals(N)) {
    if (is_squarefree(ideal.gen)) { out.push_back(ideal.gen); }
  }
  return out;
}

namespace {

Eigen::MatrixXd symbol_matrix(std::vector<GaussianInt> const &moduli, std::vector<GaussianInt> const &arguments)
{
  Eigen::MatrixXd Q(static_cast<Eigen::Index>(moduli.size()), static_cast<Eigen::Index>(arguments.size()));
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    QuadraticCharacter const chi(moduli[i]);
    for (std::size_t j = 0; j < arguments.size(); ++j) {
      Q(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = chi(arguments[j]);
    }
  }
  return Q;
}

double form_ratio(Eigen::MatrixXd const &Q, Eigen::VectorXd const &re, Eigen::VectorXd const &im, i64 M, i64 N)
{
  double const mass = re.squaredNorm() + im.squaredNorm();
  if (mass == 0.0) { return 0.0; }
  double const lhs = (Q * re).squaredNorm() + (Q * im).squaredNorm();
  return lhs / (static_cast<double>(M + N) * mass);
}

void check_sieve_sizes(i64 M, i64 N)
{
  if (M < 1 || N < 1) { throw DomainError("large_sieve: M and N must be positive"); }
  if (M > 10'000 || N > 10'000) { throw ResourceError("large_sieve: M and N are limited to 10^4"); }
}

} // namespace

double large_sieve_form(i64 M, i64 N, std::vector<std::complex<double>> const &a)
{
  check_sieve_sizes(M, N);
  auto const moduli = sieve_moduli(M);
  auto const arguments = sieve_arguments(N);
  if (a.size() != arguments.size()) {
    throw DomainError("large_sieve_form: expected " + std::to_string(arguments.size()) + " coefficients");
  }
  Eigen::VectorXd re(static_cast<Eigen::Index>(a.size())), im(static_cast<Eigen::Index>(a.size()));
  for (std::size_t k = 0; k < a.size(); ++k) {
    re(static_cast<Eigen::Index>(k)) = a[k].real();
    im(static_cast<Eigen::Index>(k)) = a[k].imag();
  }
  return form_ratio(symbol_matrix(moduli, arguments), re, im, M, N);
}

double large_sieve_ratio(i64 M, i64 N, int trials, std::uint64_t seed, int threads)
{
  check_sieve_sizes(M, N);
  if (trials < 1) { throw DomainError("large_sieve_ratio: trials must be >= 1"); }
  auto const moduli = sieve_moduli(M);
  auto const arguments = sieve_arguments(N);
  Eigen::MatrixXd const Q = symbol_matrix(moduli, arguments);
  Eigen::Index const n = static_cast<Eigen::Index>(arguments.size());
  std::vector<double> ratios(static_cast<std::size_t>(trials));
  parallel_for(ratios.size(), threads, [&](std::size_t k, std::size_t) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(k)};
    std::mt19937_64 rng(seq);
    auto uniform = [&rng]() { return 2.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53 - 1.0; };
    Eigen::VectorXd re(n), im(n);
    for (Eigen::Index j = 0; j < n; ++j) {
      re(j) = uniform();
      im(j) = uniform();
    }
    ratios[k] = form_ratio(Q, re, im, M, N);
  });
  return *std::max_element(ratios.begin(), ratios.end());
}

} // namespace gm
