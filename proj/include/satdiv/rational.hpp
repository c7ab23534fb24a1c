#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace satdiv {

// Exact rational arithmetic. Always normalized (gcd 1, positive denominator).
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p/q", an integer, or a plain decimal such as "0.425" or ".5".
/// Throws satdiv::Error(ParseError) on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Decimal approximation with `digits` places after the point (rounded half up,
/// trailing zeros trimmed). For display only.
std::string to_decimal(const Rational& value, int digits = 6);

double to_double(const Rational& value);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

}  // namespace satdiv
