#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "cyclab/error.hpp"

namespace cyclab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/* Parses "p/q" or "p" with optional sign; q must be nonzero. */
Rational parse_rational(const std::string& text);

/* Prints "p/q" in lowest terms, or "p" when the denominator is 1. */
std::string format_rational(const Rational& r);

/* Largest integer <= r. */
BigInt rational_floor(const Rational& r);

/* Floor division for machine integers, rounding toward minus infinity. */
inline long long div_floor(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline long long mod_floor(long long a, long long b) {
  return a - div_floor(a, b) * b;
}

}  // namespace cyclab
