#include "frobkit/numeric.hpp"

namespace frobkit {

std::string to_decimal_string(const Rational& v, int digits) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  BigInt num = numerator(v);
  const BigInt den = denominator(v);
  const bool negative = num < 0;
  if (negative) num = -num;
  const BigInt scale = ipow(10, static_cast<unsigned>(digits));
  // Round half up on the magnitude.
  const BigInt scaled = (2 * num * scale + den) / (2 * den);
  std::string whole = BigInt(scaled / scale).str();
  std::string frac = BigInt(scaled % scale).str();
  if (digits > 0) frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  std::string out = (negative && scaled != 0 ? "-" : "") + whole;
  if (digits > 0) out += "." + frac;
  return out;
}

double to_double(const Rational& v) { return v.convert_to<double>(); }

}  // namespace frobkit
