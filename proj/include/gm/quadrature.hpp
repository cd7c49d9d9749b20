#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <queue>
#include <string>
#include <vector>

#include "gm/errors.hpp"

namespace gm {

template <typename T>
struct QuadratureResult
{
  T value{};
  double error = 0.0;     // estimated absolute error
  double magnitude = 0.0; // integral of |f|, for judging cancellation
  int intervals = 0;
  long evaluations = 0;
};

namespace detail {

// 7-point Gauss / 15-point Kronrod nodes on [-1, 1] (QUADPACK values).
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851, 0.864864423359769072789712788640926,
    0.741531185599394439863864773280788, 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204, 0.104790010322250183839876322541518,
    0.140653259715525918745189590510238, 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                  0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename T>
struct Panel
{
  double a, b;
  T value;
  double error;
  double magnitude;
  bool operator<(Panel const &o) const { return error < o.error; }
};

template <typename T, typename F>
Panel<T> gk15(F &f, double a, double b)
{
  double const c = 0.5 * (a + b);
  double const h = 0.5 * (b - a);
  T const fc = f(c);
  T kronrod = fc * kWgk[7];
  T gauss = fc * kWg[3];
  double magnitude = std::abs(fc) * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    double const dx = h * kXgk[j];
    T const f1 = f(c - dx);
    T const f2 = f(c + dx);
    kronrod += (f1 + f2) * kWgk[j];
    magnitude += (std::abs(f1) + std::abs(f2)) * kWgk[j];
    if (j % 2 == 1) { gauss += (f1 + f2) * kWg[j / 2]; }
  }
  return {a, b, kronrod * h, std::abs((kronrod - gauss) * h), magnitude * std::abs(h)};
}

} // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) on [a, b]. T is double or
/// std::complex<double>. Stops once the summed error estimate is below
/// max(abs_tol, rel_tol * |I|) or, when cancellation makes that impossible,
/// below a roundoff floor of 50 eps * integral of |f|. Throws NumericalError
/// when max_intervals is exhausted first.
template <typename T, typename F>
QuadratureResult<T> integrate(F f, double a, double b, double abs_tol, double rel_tol = 0.0,
                              int max_intervals = 2000)
{
  std::priority_queue<detail::Panel<T>> heap;
  auto first = detail::gk15<T>(f, a, b);
  heap.push(first);
  long evaluations = 15;
  auto totals = [&heap]() {
    // heap holds disjoint panels; sum in a fixed order for reproducibility
    std::vector<detail::Panel<T>> panels;
    auto copy = heap;
    while (!copy.empty()) {
      panels.push_back(copy.top());
      copy.pop();
    }
    std::sort(panels.begin(), panels.end(), [](auto const &x, auto const &y) { return x.a < y.a; });
    QuadratureResult<T> r;
    for (auto const &p : panels) {
      r.value += p.value;
      r.error += p.error;
      r.magnitude += p.magnitude;
    }
    r.intervals = static_cast<int>(panels.size());
    return r;
  };
  T value = first.value;
  double error = first.error;
  double magnitude = first.magnitude;
  double constexpr eps = 2.220446049250313e-16;
  for (;;) {
    double const target = std::max({abs_tol, rel_tol * std::abs(value), 50.0 * eps * magnitude});
    if (error <= target) { break; }
    if (static_cast<int>(heap.size()) >= max_intervals) {
      throw NumericalError("integrate: no convergence on [" + std::to_string(a) + ", " + std::to_string(b) +
                           "] after " + std::to_string(heap.size()) + " panels, error estimate " +
                           std::to_string(error) + " vs target " + std::to_string(target));
    }
    auto const worst = heap.top();
    heap.pop();
    double const mid = 0.5 * (worst.a + worst.b);
    auto const left = detail::gk15<T>(f, worst.a, mid);
    auto const right = detail::gk15<T>(f, mid, worst.b);
    evaluations += 30;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    magnitude += left.magnitude + right.magnitude - worst.magnitude;
    heap.push(left);
    heap.push(right);
  }
  auto r = totals();
  r.evaluations = evaluations;
  return r;
}

} // namespace gm
