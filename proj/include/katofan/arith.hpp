#pragma once

/**
 * @file arith.hpp
 * @brief Exact scalar types shared by every module.
 *
 * Integers are arbitrary precision (Boost.Multiprecision cpp_int) and
 * rationals are cpp_rational. Nothing in the library touches floating point.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "katofan/error.hpp"

namespace katofan {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rational>;

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int gcd_int(Int a, Int b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Int r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return abs_int(a / gcd_int(a, b) * b);
}

inline Int numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Int dot(const IntVector& a, const IntVector& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rational dot(const RatVector& a, const IntVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rational(b[i]);
  return s;
}

inline bool is_zero(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline IntVector add(const IntVector& a, const IntVector& b) {
  IntVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline IntVector sub(const IntVector& a, const IntVector& b) {
  IntVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline IntVector negate(IntVector v) {
  for (auto& x : v) x = -x;
  return v;
}

inline IntVector scale(IntVector v, const Int& k) {
  for (auto& x : v) x *= k;
  return v;
}

/// Divides out the content so the entries are coprime. Zero stays zero.
inline IntVector primitive(IntVector v) {
  Int g = 0;
  for (const auto& x : v) g = gcd_int(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

/// Clears denominators and returns the primitive integer vector on the same ray.
inline IntVector primitive(const RatVector& v) {
  Int l = 1;
  for (const auto& x : v) l = lcm_int(l, denominator_of(x));
  IntVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(numerator_of(x * Rational(l)));
  return primitive(std::move(r));
}

inline std::string to_string(const Int& x) { return x.str(); }

/// "a/b" for proper fractions, "a" for integers.
inline std::string to_string(const Rational& q) {
  if (denominator_of(q) == 1) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

inline Int parse_int(std::string_view s) {
  if (s.empty()) throw SchemaError("empty integer literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw SchemaError("malformed integer literal '" + std::string(s) + "'");
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9')
      throw SchemaError("malformed integer literal '" + std::string(s) + "'");
  return Int(std::string(s));
}

/// Parses "a", "-a" or "a/b".
inline Rational parse_rational(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s));
  Int num = parse_int(s.substr(0, slash));
  Int den = parse_int(s.substr(slash + 1));
  if (den == 0) throw SchemaError("zero denominator in '" + std::string(s) + "'");
  return Rational(num, den);
}

inline Rational rational_pow(const Rational& base, const Int& exponent) {
  if (exponent < 0) {
    if (base == 0) throw DomainError("zero raised to a negative power");
    return rational_pow(Rational(1) / base, -exponent);
  }
  Rational result = 1;
  Rational b = base;
  Int e = exponent;
  while (e > 0) {
    if ((e & 1) != 0) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

}  // namespace katofan
