#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

#include "tubular/errors.hpp"

namespace tubular {

// Arbitrary-precision integers and rationals. Rat is always stored reduced
// with a positive denominator; equality is exact.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

inline Int num(const Rat& q) { return numerator(q); }
inline Int den(const Rat& q) { return denominator(q); }
inline bool is_integer(const Rat& q) { return den(q) == 1; }

// a mod m in [0, m) for m > 0, independent of the sign of a.
inline Int floor_mod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

// (g, s, t) with s*a + t*b == g == gcd(a, b) >= 0. Deterministic: exgcd(a, 0)
// yields (|a|, sgn(a), 0) and the iteration is the classical one.
struct ExGcd {
  Int g, s, t;
};
ExGcd exgcd(Int a, Int b);

std::string rat_string(const Rat& q);  // "p/q", or "p" when integral
std::string int_string(const Int& n);

// Accepts "p", "-p", "p/q" with optional sign on p; no whitespace.
std::optional<Rat> parse_rat(std::string_view s);
std::optional<Int> parse_int(std::string_view s);

struct Vec2 {
  Rat x, y;

  bool operator==(const Vec2&) const = default;
  bool is_zero() const { return x == 0 && y == 0; }

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator-() const { return {-x, -y}; }
};

inline Vec2 operator*(const Rat& a, const Vec2& v) { return {a * v.x, a * v.y}; }

inline Rat cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

std::string vec_string(const Vec2& v);

}  // namespace tubular
