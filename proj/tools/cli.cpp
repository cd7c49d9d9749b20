#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "gm/errors.hpp"
#include "gm/factor.hpp"
#include "gm/gauss_sum.hpp"
#include "gm/lfunc.hpp"
#include "gm/lvalue_cache.hpp"
#include "gm/moments.hpp"
#include "gm/report.hpp"
#include "gm/selftest.hpp"
#include "gm/symbols.hpp"

namespace gm::cli {

namespace {

// Malformed command-line values; mapped to the usage exit status.
class UsageError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

double parse_number(std::string const &s)
{
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (std::exception const &) {
    throw UsageError("not a number: '" + s + "'");
  }
  if (used != s.size() || !std::isfinite(v)) { throw UsageError("not a number: '" + s + "'"); }
  return v;
}

GaussianInt parse_element(std::string const &s)
{
  try {
    return parse_gaussian(s);
  } catch (DomainError const &e) {
    throw UsageError(e.what());
  }
}

struct Field
{
  std::string key;
  std::string value;
  bool quoted = false; // string in JSON
};

enum class Format
{
  Text,
  Csv,
  Json,
};

Format scalar_format(std::string const &name)
{
  if (name.empty() || name == "text") { return Format::Text; }
  if (name == "csv") { return Format::Csv; }
  if (name == "json") { return Format::Json; }
  throw UsageError("unknown format '" + name + "' (text, csv or json)");
}

ReportFormat table_format(std::string const &name)
{
  if (name.empty() || name == "csv") { return ReportFormat::Csv; }
  if (name == "json") { return ReportFormat::Json; }
  throw UsageError("unknown format '" + name + "' for a report (csv or json)");
}

std::string json_escape(std::string const &s)
{
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') { out.push_back('\\'); }
    out.push_back(ch);
  }
  return out;
}

std::string render(std::vector<Field> const &fields, Format format, std::string const &text)
{
  std::ostringstream os;
  switch (format) {
  case Format::Text:
    os << text << '\n';
    break;
  case Format::Csv:
    for (std::size_t k = 0; k < fields.size(); ++k) { os << (k ? "," : "") << fields[k].key; }
    os << '\n';
    for (std::size_t k = 0; k < fields.size(); ++k) { os << (k ? "," : "") << fields[k].value; }
    os << '\n';
    break;
  case Format::Json:
    os << '{';
    for (std::size_t k = 0; k < fields.size(); ++k) {
      os << (k ? ", " : "") << '"' << fields[k].key << "\": ";
      if (fields[k].quoted) {
        os << '"' << json_escape(fields[k].value) << '"';
      } else {
        os << (fields[k].value == "nan" ? "null" : fields[k].value);
      }
    }
    os << "}\n";
    break;
  }
  return os.str();
}

struct Settings
{
  std::vector<std::string> y;
  std::string grid;
  int threads = 1;
  std::uint64_t seed = 20240101;
  double tol = 1e-8;
  std::string format;
  std::string out;
  std::string cache_dir;

  // subcommand arguments
  std::string a, n, c, method = "both";
  int order = 4;
  std::string threshold = "1e-6";
  i64 M = 2000, N = 2000;
  int trials = 50;
};

class Emitter
{
public:
  Emitter(Settings const &s, std::ostream &out) : settings_(s), out_(out) {}

  void operator()(std::string const &text) const
  {
    if (settings_.out.empty()) {
      out_ << text;
    } else {
      write_text_file(settings_.out, text);
    }
  }

private:
  Settings const &settings_;
  std::ostream &out_;
};

std::vector<double> y_values(Settings const &s)
{
  if (!s.grid.empty() && !s.y.empty()) { throw UsageError("give either --y or --grid, not both"); }
  if (!s.grid.empty()) { return parse_grid(s.grid); }
  if (s.y.empty()) { throw UsageError("--y or --grid is required"); }
  std::vector<double> ys;
  for (auto const &v : s.y) { ys.push_back(parse_number(v)); }
  return ys;
}

int cmd_symbol(Settings const &s, Emitter const &emit)
{
  GaussianInt const a = parse_element(s.a);
  GaussianInt const n = parse_element(s.n);
  std::string value;
  if (s.order == 4) {
    value = to_string(quartic_symbol(a, n));
  } else if (s.order == 2) {
    if (n != GaussianInt{1} && !is_primary(n)) { throw DomainError("symbol: modulus " + to_string(n) + " is not primary"); }
    value = std::to_string(quadratic_symbol(a, n));
  } else {
    throw UsageError("--order must be 2 or 4");
  }
  emit(render({{"a", to_string(a), true}, {"n", to_string(n), true}, {"order", std::to_string(s.order)},
               {"value", value, true}},
              scalar_format(s.format), value));
  return kExitOk;
}

int cmd_gauss_sum(Settings const &s, Emitter const &emit)
{
  GaussianInt const n = parse_element(s.n);
  std::vector<Field> fields{{"n", to_string(n), true}, {"norm", std::to_string(norm(n))}};
  std::ostringstream text;
  text << "g(" << to_string(n) << ")";
  auto add = [&](std::string const &name, std::complex<double> g) {
    fields.push_back({name + "_re", format_double(g.real())});
    fields.push_back({name + "_im", format_double(g.imag())});
    text << "  " << name << " = " << format_double(g.real()) << (g.imag() < 0 ? " - " : " + ")
         << format_double(std::abs(g.imag())) << "i";
  };
  if (s.method != "direct" && s.method != "closed" && s.method != "both") {
    throw UsageError("--method must be direct, closed or both");
  }
  if (s.method != "closed") { add("direct", gauss_sum_direct(n)); }
  if (s.method != "direct") { add("closed", gauss_sum_closed(n)); }
  emit(render(fields, scalar_format(s.format), text.str()));
  return kExitOk;
}

int cmd_lvalue(Settings const &s, Emitter const &emit)
{
  GaussianInt const c = parse_element(s.c);
  LCentralValue const v = central_value(c, s.tol);
  std::vector<Field> fields{{"re", std::to_string(c.re())},       {"im", std::to_string(c.im())},
                            {"norm", std::to_string(norm(c))},    {"L", format_double(v.value)},
                            {"cutoff", std::to_string(v.cutoff)}, {"tail_bound", format_double(v.tail_bound)}};
  std::string const text = "L(1/2, chi_" + to_string(c) + ") = " + format_double(v.value) + "  cutoff " +
                           std::to_string(v.cutoff) + ", tail bound " + format_double(v.tail_bound);
  emit(render(fields, scalar_format(s.format), text));
  return kExitOk;
}

SweepOptions sweep_options(Settings const &s, LValueCache *cache)
{
  SweepOptions opts;
  opts.threads = s.threads;
  opts.tol = s.tol;
  opts.threshold = parse_number(s.threshold);
  opts.cache = cache;
  return opts;
}

std::optional<LValueCache> open_cache(Settings const &s)
{
  if (s.cache_dir.empty()) { return std::nullopt; }
  return LValueCache(LValueCache::default_path(s.cache_dir));
}

double loglog_slope(std::vector<double> const &x, std::vector<double> const &y)
{
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  double const m = static_cast<double>(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    double const lx = std::log(x[k]), ly = std::log(y[k]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

int cmd_moment(Settings const &s, Emitter const &emit, std::ostream &err, int which)
{
  std::vector<double> const ys = y_values(s);
  ReportFormat const format = table_format(s.format);
  auto cache = open_cache(s);
  SweepOptions const opts = sweep_options(s, cache ? &*cache : nullptr);

  std::vector<MomentReport> rows;
  auto const [lo, hi] = std::minmax_element(ys.begin(), ys.end());
  bool const fit = ys.size() >= 4 && *hi >= 100.0 * *lo;
  if (fit) {
    FitResult const f = sweep_and_fit(ys, opts, &rows);
    err << "fit: K_fit " << format_double(f.K_fit) << ", C_fit " << format_double(f.C_fit) << ", K "
        << format_double(main_term_coefficient()) << ", residual exponent " << format_double(f.residual_exponent)
        << ", condition number " << format_double(f.condition_number) << '\n';
  } else {
    for (double y : ys) { rows.push_back(which == 1 ? first_moment(y, opts) : second_moment(y, opts)); }
  }
  if (which == 2 && ys.size() >= 2) {
    std::vector<double> x, v;
    for (auto const &r : rows) {
      if (r.S2 > 0.0) {
        x.push_back(r.y);
        v.push_back(r.S2);
      }
    }
    if (x.size() >= 2) { err << "S2 log-log slope " << format_double(loglog_slope(x, v)) << '\n'; }
  }
  if (cache) { cache->save(); }
  emit(format_report(rows, format));
  return kExitOk;
}

int cmd_census(Settings const &s, Emitter const &emit, std::ostream &err)
{
  std::vector<double> const ys = y_values(s);
  ReportFormat const format = table_format(s.format);
  auto cache = open_cache(s);
  SweepOptions const opts = sweep_options(s, cache ? &*cache : nullptr);
  std::vector<MomentReport> rows;
  for (double y : ys) {
    rows.push_back(nonvanishing_census(y, opts.threshold, opts));
    auto const &r = rows.back();
    if (r.family_size > 0) {
      err << "census y " << format_double(y) << ": proportion "
          << format_double(static_cast<double>(r.nonvanishing) / static_cast<double>(r.family_size)) << '\n';
    }
  }
  if (cache) { cache->save(); }
  emit(format_report(rows, format));
  return kExitOk;
}

int cmd_constants(Settings const &s, Emitter const &emit)
{
  std::vector<PrimeEntry> const primes = s.cache_dir.empty() ? primes_by_norm(kReferenceANorm)
                                                             : load_or_build_primes(kReferenceANorm, s.cache_dir);
  EulerProduct const A = euler_product_A(primes, kReferenceANorm);
  double const zeta = dedekind_zeta_2();
  double const zeta_ideal = dedekind_zeta_2_ideal_sum(10'000'000);
  double const ph = phi_hat_zero();
  double const K = main_term_coefficient(A.value);

  std::string const X = std::to_string(kReferenceANorm);
  std::vector<std::pair<Field, std::string>> rows{
      {{"A_partial", format_double(A.value)},
       "Euler product over the " + std::to_string(primes.size()) + " odd prime ideals of norm <= " + X},
      {{"A_tail_bound", format_double(A.tail_bound)}, "A_partial - A, ideal-count majorant beyond norm " + X},
      {{"zeta_2", format_double(zeta)}, "zeta(2) * beta(2), beta by accelerated alternating series"},
      {{"zeta_2_ideal_sum", format_double(zeta_ideal)}, "ideal sum to norm 10^7 with lattice tail correction"},
      {{"phi_hat_0", format_double(ph)}, "int_1^2 exp(4 - 1/((x-1)(2-x))) dx, adaptive Gauss-Kronrod"},
      {{"K", format_double(K)},
       "(2+sqrt2) pi^2 A / (3072 zeta); equals (2+sqrt2)(pi/4) pi A / (24 * 32 * zeta) to 1e-12"},
  };
  std::vector<Field> fields;
  std::ostringstream text;
  for (auto const &[field, provenance] : rows) {
    fields.push_back(field);
    text << field.key << " = " << field.value << "  # " << provenance << '\n';
  }
  std::string body = text.str();
  body.pop_back();
  emit(render(fields, scalar_format(s.format), body));
  return kExitOk;
}

int cmd_sieve(Settings const &s, Emitter const &emit)
{
  double const ratio = large_sieve_ratio(s.M, s.N, s.trials, s.seed, s.threads);
  double const bound = 10.0 * std::pow(static_cast<double>(s.M) * static_cast<double>(s.N), 0.05);
  std::vector<Field> fields{{"M", std::to_string(s.M)},         {"N", std::to_string(s.N)},
                            {"trials", std::to_string(s.trials)}, {"seed", std::to_string(s.seed)},
                            {"ratio", format_double(ratio)},      {"bound", format_double(bound)}};
  std::string const text = "large sieve ratio " + format_double(ratio) + " (M = " + std::to_string(s.M) +
                           ", N = " + std::to_string(s.N) + ", " + std::to_string(s.trials) +
                           " trials), reference 10 (MN)^0.05 = " + format_double(bound);
  emit(render(fields, scalar_format(s.format), text));
  return kExitOk;
}

int cmd_selftest(Settings const &s, std::ostream &out)
{
  bool ok = true;
  for (auto const &c : run_selftest(s.threads)) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
    ok = ok && c.passed;
  }
  return ok ? kExitOk : kExitOther;
}

} // namespace

std::vector<double> parse_grid(std::string const &spec)
{
  std::vector<double> out;
  if (spec.rfind("geom:", 0) == 0) {
    std::vector<std::string> parts;
    std::istringstream in(spec.substr(5));
    for (std::string part; std::getline(in, part, ':');) { parts.push_back(part); }
    if (parts.size() != 3) { throw UsageError("grid '" + spec + "': expected geom:lo:hi:n"); }
    double const lo = parse_number(parts[0]);
    double const hi = parse_number(parts[1]);
    double const n = parse_number(parts[2]);
    if (n < 1 || n != std::floor(n) || !(lo > 0) || !(hi >= lo)) {
      throw UsageError("grid '" + spec + "': need 0 < lo <= hi and integer n >= 1");
    }
    return geometric_grid(lo, hi, static_cast<int>(n));
  }
  std::istringstream in(spec);
  for (std::string part; std::getline(in, part, ',');) { out.push_back(parse_number(part)); }
  if (out.empty()) { throw UsageError("grid '" + spec + "' is empty"); }
  return out;
}

int run(int argc, char const *const *argv, std::ostream &out, std::ostream &err)
{
  Settings s;
  unsigned const hw = std::thread::hardware_concurrency();
  s.threads = hw == 0 ? 1 : static_cast<int>(hw);

  CLI::App app{"Quadratic characters over Z[i]: residue symbols, Gauss sums, central L-values and family moments",
               "gm"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--y", s.y, "family scale y (the family is y < N(c) <= 2y; census: N(c) <= y)")
      ->envname("GM_Y")
      ->delimiter(',');
  app.add_option("--grid", s.grid, "list of y: 'a,b,c' or 'geom:lo:hi:n'")->envname("GM_GRID");
  app.add_option("--threads", s.threads, "worker threads")->envname("GM_THREADS")->check(CLI::PositiveNumber);
  app.add_option("--seed", s.seed, "master seed for randomized checks")->envname("GM_SEED");
  app.add_option("--tol", s.tol, "tail tolerance per central value")->envname("GM_TOL")->check(CLI::PositiveNumber);
  app.add_option("--format", s.format, "text, csv or json")->envname("GM_FORMAT");
  app.add_option("--out", s.out, "write the result here instead of stdout")->envname("GM_OUT");
  app.add_option("--cache-dir", s.cache_dir, "directory for primes-v1.bin and lvalues-v1.csv")
      ->envname("GM_CACHE_DIR");

  auto *symbol = app.add_subcommand("symbol", "quartic (order 4) or quadratic (order 2) residue symbol (a/n)");
  symbol->add_option("--a", s.a, "numerator, e.g. 2 or 1-3i")->required();
  symbol->add_option("--n", s.n, "primary modulus, e.g. 3+2i")->required();
  symbol->add_option("--order", s.order, "2 or 4");

  auto *gauss = app.add_subcommand("gauss-sum", "quadratic Gauss sum g(n) for primary n");
  gauss->add_option("--n", s.n, "primary modulus")->required();
  gauss->add_option("--method", s.method, "direct, closed or both");

  auto *lvalue = app.add_subcommand("lvalue", "L(1/2, chi_c) for squarefree c == 1 mod 16");
  lvalue->add_option("--c", s.c, "family member, e.g. 17 or 1+16i")->required();

  auto *moment1 = app.add_subcommand("moment1", "smoothed first moment; fits K, C on grids of >= 4 points");
  moment1->add_option("--threshold", s.threshold, "nonvanishing threshold for the report");
  auto *moment2 = app.add_subcommand("moment2", "smoothed second moment");
  moment2->add_option("--threshold", s.threshold, "nonvanishing threshold for the report");

  auto *census = app.add_subcommand("census", "count of c with N(c) <= y and |L(1/2, chi_c)| > threshold");
  census->add_option("--threshold", s.threshold, "must be >= 10x the certified tail bound");

  auto *constants = app.add_subcommand("constants", "A, zeta_{Q(i)}(2), Phi^(0) and K");

  auto *sieve = app.add_subcommand("sieve-check", "empirical large-sieve ratio");
  sieve->add_option("--M", s.M, "bound on N(m)")->check(CLI::PositiveNumber);
  sieve->add_option("--N", s.N, "bound on N(n)")->check(CLI::PositiveNumber);
  sieve->add_option("--trials", s.trials, "random coefficient vectors")->check(CLI::PositiveNumber);

  auto *selftest = app.add_subcommand("selftest", "quick invariant checks");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const &e) {
    return app.exit(e, out, err);
  } catch (CLI::CallForAllHelp const &e) {
    return app.exit(e, out, err);
  } catch (CLI::ParseError const &e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  Emitter const emit(s, out);
  try {
    if (symbol->parsed()) { return cmd_symbol(s, emit); }
    if (gauss->parsed()) { return cmd_gauss_sum(s, emit); }
    if (lvalue->parsed()) { return cmd_lvalue(s, emit); }
    if (moment1->parsed()) { return cmd_moment(s, emit, err, 1); }
    if (moment2->parsed()) { return cmd_moment(s, emit, err, 2); }
    if (census->parsed()) { return cmd_census(s, emit, err); }
    if (constants->parsed()) { return cmd_constants(s, emit); }
    if (sieve->parsed()) { return cmd_sieve(s, emit); }
    if (selftest->parsed()) { return cmd_selftest(s, out); }
  } catch (UsageError const &e) {
    err << "gm: " << e.what() << '\n' << "Run with --help for more information.\n";
    return kExitUsage;
  } catch (DomainError const &e) {
    err << "gm: domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (OverflowError const &e) {
    err << "gm: overflow: " << e.what() << '\n';
    return kExitDomain;
  } catch (ResourceError const &e) {
    err << "gm: resource error: " << e.what() << '\n';
    return kExitResource;
  } catch (NumericalError const &e) {
    err << "gm: numerical error: " << e.what() << '\n';
    return kExitResource;
  } catch (std::filesystem::filesystem_error const &e) {
    err << "gm: I/O error: " << e.what() << '\n';
    return kExitResource;
  } catch (std::exception const &e) {
    err << "gm: internal error: " << e.what() << '\n';
    return kExitOther;
  }
  return kExitUsage;
}

} // namespace gm::cli
