#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace densityforge {

// All density values are exact arbitrary-precision rationals. Comparisons
// throughout the library are rational comparisons; no floating point enters
// any value that a theorem depends on.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Largest integer <= r.
inline BigInt rat_floor(const Rational& r) {
  BigInt q = rat_num(r) / rat_den(r);
  if (r < 0 && q * rat_den(r) != rat_num(r)) --q;
  return q;
}

/// Smallest integer >= r.
inline BigInt rat_ceil(const Rational& r) {
  BigInt q = rat_num(r) / rat_den(r);
  if (r > 0 && q * rat_den(r) != rat_num(r)) ++q;
  return q;
}

/// Compact form: "17/52", or just "3" when the denominator is 1.
std::string rat_to_string(const Rational& r);

/// Uniform "p/q" form used in JSON output ("0/1", "1/1", ...).
std::string rat_to_fraction_string(const Rational& r);

/// Parses "p/q" or a bare integer "p". Throws std::invalid_argument on
/// malformed input or a zero denominator.
Rational rat_parse(std::string_view text);

double rat_to_double(const Rational& r);

}  // namespace densityforge
