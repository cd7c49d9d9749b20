#pragma once

#include <cmath>
#include <complex>

namespace gm {

/// Neumaier's compensated summation. Results depend only on the order of
/// add() calls, which callers keep fixed.
template <typename Scalar>
class CompensatedSum
{
public:
  void add(Scalar x)
  {
    Scalar const t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  CompensatedSum &operator+=(Scalar x)
  {
    add(x);
    return *this;
  }

  Scalar value() const { return sum_ + comp_; }

private:
  Scalar sum_{};
  Scalar comp_{};
};

template <typename Scalar>
class CompensatedSum<std::complex<Scalar>>
{
public:
  void add(std::complex<Scalar> z)
  {
    re_.add(z.real());
    im_.add(z.imag());
  }

  CompensatedSum &operator+=(std::complex<Scalar> z)
  {
    add(z);
    return *this;
  }

  std::complex<Scalar> value() const { return {re_.value(), im_.value()}; }

private:
  CompensatedSum<Scalar> re_;
  CompensatedSum<Scalar> im_;
};

} // namespace gm
