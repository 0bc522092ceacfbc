#pragma once

#include <numeric>
#include <string>

namespace cancelkit {

// Exact nonnegative half-integer: value = twice / 2.
struct HalfInteger {
  long twice = 0;

  bool is_integer() const { return twice % 2 == 0; }
  friend bool operator==(HalfInteger a, HalfInteger b) { return a.twice == b.twice; }
  friend bool operator!=(HalfInteger a, HalfInteger b) { return a.twice != b.twice; }
  friend bool operator<(HalfInteger a, HalfInteger b) { return a.twice < b.twice; }
  friend bool operator<=(HalfInteger a, HalfInteger b) { return a.twice <= b.twice; }
  friend HalfInteger operator*(long k, HalfInteger h) { return {k * h.twice}; }

  std::string str() const {
    if (is_integer()) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
  }
};

inline HalfInteger half_from_integer(long v) { return {2 * v}; }

// Exact rational with positive denominator, always stored reduced.
struct Rational {
  long num = 0;
  long den = 1;

  static Rational make(long n, long d) {
    if (d < 0) { n = -n; d = -d; }
    long g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    return {n / g, d / g};
  }

  friend bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

// |a - h| <= 1/bound, all exact.
inline bool within_reciprocal(Rational a, HalfInteger h, long bound) {
  long lhs = 2 * bound * a.num - bound * h.twice * a.den;  // 2*bound*den*(a - h/1)... scaled
  long scale = 2 * a.den;
  if (lhs < 0) lhs = -lhs;
  return lhs <= scale;  // |a - h| <= 1/bound  <=>  |2 b num - b twice den| <= 2 den
}

}  // namespace cancelkit
