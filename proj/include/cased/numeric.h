#ifndef CASED_NUMERIC_H
#define CASED_NUMERIC_H

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace cased {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or structurally invalid input (bad ids, bad syntax, ...).
class InputError : public Error {
  public:
    using Error::Error;
};

/// A drawing failed geometric validation and a solver refused it.
class ValidationFailed : public Error {
  public:
    using Error::Error;
};

/// An exact solver ran out of its node budget.
class BudgetExceeded : public Error {
  public:
    using Error::Error;
};

/// An oracle enumeration cap was exceeded.
class CapExceeded : public Error {
  public:
    using Error::Error;
};

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Floor of the integer square root of a nonnegative integer.
BigInt isqrt_floor(const BigInt& n);

/// If n is a perfect square, stores the root and returns true.
bool perfect_square(const BigInt& n, BigInt& root);

/// True if r equals the square of a rational (r must be >= 0).
bool perfect_square(const Rational& r, Rational& root);

/// Parses "12", "-0.25", "1/3" into an exact rational.
/// Throws InputError on malformed text.
Rational parse_rational(const std::string& text);

/// Exact textual form: finite decimal when the reduced denominator is
/// 2^a 5^b, otherwise "p/q".  parse_rational() round-trips both forms.
std::string format_exact(const Rational& r);

/// Fixed-point decimal approximation with the given fractional digits.
std::string format_approx(const Rational& r, int digits = 9);

/// Fixed-point decimal of a double (deterministic formatting for output files).
std::string format_approx(double v, int digits = 6);

double to_double(const Rational& r);

} // namespace cased

#endif
