// Exact arithmetic primitives: arbitrary-precision integers and rationals.
//
// Every quantity in this library that carries game-theoretic meaning is an
// exact rational or an exact integer. There is no floating point in any
// decision path.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace perfcert {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Sign of a rational as -1, 0 or +1.
inline int sign_of(const Rational& r) { return r.sign(); }

/// Decimal digit string (arbitrary length, possibly with leading '-').
inline std::string to_decimal_string(const Int& v) { return v.str(); }

/// Canonical fraction string: "p" when the denominator is 1, else "p/q"
/// with q > 0 and gcd(p, q) = 1.
std::string to_fraction_string(const Rational& r);

/// Parses "p", "-p" or "p/q" (q > 0 after normalization). Throws ParseError
/// on anything else, including empty input, a zero denominator, or trailing
/// garbage.
Rational parse_rational(std::string_view text);

/// base^exp for exp >= 0.
Int int_pow(const Int& base, unsigned long exp);

}  // namespace perfcert
