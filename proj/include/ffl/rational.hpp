#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace ffl {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Floor of a rational.
inline BigInt floor_q(const Rational& r) {
  BigInt n = numerator(r), d = denominator(r);
  BigInt f = n / d;
  if (n < 0 && f * d != n) f -= 1;
  return f;
}

}  // namespace ffl
