#ifndef FROBKIT_NUMERIC_HPP
#define FROBKIT_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace frobkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt ipow(const BigInt& base, unsigned e) { return boost::multiprecision::pow(base, e); }

inline std::string to_decimal_string(const BigInt& v) { return v.str(); }

/// Decimal rendering of an exact rational, rounded to `digits` places.
std::string to_decimal_string(const Rational& v, int digits = 12);
double to_double(const Rational& v);

}  // namespace frobkit

#endif  // FROBKIT_NUMERIC_HPP
