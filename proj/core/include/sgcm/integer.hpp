#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace sgcm {

/// Arbitrary-precision signed integer used for every exact computation.
using Integer = boost::multiprecision::cpp_int;

/// A column-free integer vector (a point of Z^n or a functional on it).
using IntVector = std::vector<Integer>;

inline Integer abs_value(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline Integer gcd(Integer a, Integer b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != 0) {
    Integer t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

/// Floor division; b must be nonzero.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Remainder with the sign convention 0 <= r < |b|.
inline Integer floor_mod(const Integer& a, const Integer& b) {
  Integer r = a % b;
  if (r < 0) r += abs_value(b);
  return r;
}

inline Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

/// gcd of all entries (0 for the zero vector).
inline Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) {
    g = gcd(g, x);
    if (g == 1) break;
  }
  return g;
}

/// Divide by the content; the zero vector is returned unchanged.
inline IntVector make_primitive(IntVector v) {
  Integer g = content(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

inline IntVector to_int_vector(const std::vector<long long>& v) {
  return IntVector(v.begin(), v.end());
}

std::string to_string(const IntVector& v);

}  // namespace sgcm
