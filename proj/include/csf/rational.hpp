#pragma once
// Exact arithmetic used everywhere: arbitrary-precision integers and rationals.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace csf {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 0; i < k; ++i) { r *= (n - i); r /= (i + 1); }
  return r;
}

inline Rational rat_pow(const Rational& base, int e) {
  if (e < 0) throw std::invalid_argument("rat_pow: negative exponent");
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

inline bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

inline Int to_int(const Rational& r) {
  if (!is_integer(r)) throw std::runtime_error("to_int: rational is not an integer");
  return boost::multiprecision::numerator(r);
}

// FNV-1a over a byte string; stable across platforms and runs.
inline std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) { h ^= c; h *= 1099511628211ull; }
  return h;
}

}  // namespace csf
