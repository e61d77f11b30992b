#include "perfcert/rational.hpp"

#include <cctype>

#include "perfcert/errors.hpp"

namespace perfcert {

std::string to_fraction_string(const Rational& r) {
  const Int num = numerator(r);
  const Int den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  std::string_view num_part = s.substr(0, slash);
  if (!all_digits(num_part)) {
    throw ParseError("", std::string(text), 0,
                     "malformed rational '" + std::string(text) + "'");
  }
  Int num(std::string(num_part));
  Int den = 1;
  if (slash != std::string_view::npos) {
    std::string_view den_part = s.substr(slash + 1);
    if (!all_digits(den_part)) {
      throw ParseError("", std::string(text), 0,
                       "malformed rational '" + std::string(text) + "'");
    }
    den = Int(std::string(den_part));
    if (den == 0) {
      throw ParseError("", std::string(text), 0,
                       "zero denominator in '" + std::string(text) + "'");
    }
  }
  if (negative) num = -num;
  return Rational(num, den);
}

Int int_pow(const Int& base, unsigned long exp) {
  Int result = 1;
  Int b = base;
  unsigned long e = exp;
  while (e > 0) {
    if (e & 1UL) result *= b;
    b *= b;
    e >>= 1UL;
  }
  return result;
}

}  // namespace perfcert
