#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace mrba {

/// Exact rational scalar over arbitrary-precision integers. Always stored in
/// canonical form: gcd(num, den) = 1, den > 0, sign on the numerator.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Parses "p/q" or "p" (sign on the numerator). Throws std::invalid_argument
/// on malformed text or a zero denominator.
inline Rational parseRational(std::string_view text) {
  auto fail = [&text]() -> Rational {
    throw std::invalid_argument("invalid rational: '" + std::string(text) + "'");
  };
  if (text.empty()) return fail();
  std::size_t pos = 0;
  if (text[pos] == '+' || text[pos] == '-') ++pos;
  std::size_t numBegin = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == numBegin) return fail();
  BigInt num(std::string(text.substr(0, pos)));
  if (pos == text.size()) return Rational(num);
  if (text[pos] != '/') return fail();
  ++pos;
  std::size_t denBegin = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == denBegin || pos != text.size()) return fail();
  BigInt den(std::string(text.substr(denBegin)));
  if (den == 0) throw std::invalid_argument("invalid rational (zero denominator): '" + std::string(text) + "'");
  return Rational(num, den);
}

/// Canonical textual form, "p/q" with q omitted when it equals 1.
inline std::string formatRational(const Rational& r) { return r.str(); }

/// Exact integer power with rational result for negative exponents.
inline Rational rationalPow(const Rational& base, long exp) {
  if (exp >= 0) {
    Rational acc(1);
    for (long i = 0; i < exp; ++i) acc *= base;
    return acc;
  }
  if (base == 0) throw std::invalid_argument("rationalPow: zero base with negative exponent");
  Rational acc(1);
  for (long i = 0; i < -exp; ++i) acc /= base;
  return acc;
}

}  // namespace mrba
