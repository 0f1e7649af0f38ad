#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace finsler {

/// Arbitrary-precision rational. Kept normalized by the backend:
/// denominator > 0 and gcd(|num|, den) = 1.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Exact conversion of a finite binary64 value (every double is a dyadic
/// rational, so this is lossless).
Rational rational_from_double(double v);

std::string rational_str(const Rational& r);

} // namespace finsler
