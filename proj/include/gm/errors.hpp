#pragma once

#include <stdexcept>
#include <string>

namespace gm {

// Precondition violated by the caller (even norm where odd is required, c not
// in the family, ...).
class DomainError : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

// A value left the fixed 64-bit working range.
class OverflowError : public std::overflow_error
{
public:
  using std::overflow_error::overflow_error;
};

// Request is well-formed but too large for the configured limits, or I/O failed.
class ResourceError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Quadrature or series did not reach its target accuracy.
class NumericalError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// An internal identity that must hold did not. Always a bug.
class ConsistencyError : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

} // namespace gm
