#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace planevar {

using Rational = mpq_class;

/// Base class for every error this library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point, index or argument outside the domain an operation accepts.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive computation refused because its enumeration would not fit
/// the configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Accepts "p", "p/q", and decimal notation such as "-0.125" or "1e-3".
// Throws DomainError on anything else.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

/// Nearest double (ties to even); mpq's own conversion truncates.
double to_double(const Rational& value);

}  // namespace planevar
