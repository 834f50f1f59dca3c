#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace pathmetric {

using BigInt = boost::multiprecision::cpp_int;
/// Arbitrary-precision rational in canonical reduced form.
using Rational = boost::multiprecision::cpp_rational;

/// An exact value in [0, inf]; nullopt is infinity.
using ExactWeight = std::optional<Rational>;

/// Parses a decimal literal ("12", "0.1", "2.5e-3") exactly. Throws ParseError.
Rational rational_from_decimal(std::string_view text);

/// The rational named by the shortest decimal that round-trips to `v`. This
/// recovers decimal inputs exactly: 0.1 -> 1/10.
Rational rationalize_shortest(double v);

/// The exact binary value of `v` (0.1 -> 3602879701896397/36028797018963968).
Rational rational_exact(double v);

/// "p/q", always with an explicit denominator.
std::string to_string(const Rational& r);
/// "p/q" or "inf".
std::string to_string(const ExactWeight& w);

double to_double(const Rational& r);

}  // namespace pathmetric
