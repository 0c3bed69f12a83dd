#pragma once

#include "tubular/lattice.hpp"

namespace tubular {

// 2x2 rational matrix acting on column vectors.
struct Mat2 {
  Rat a, b, c, d;  // rows (a b) / (c d)

  bool operator==(const Mat2&) const = default;

  static Mat2 identity() { return {1, 0, 0, 1}; }
  static Mat2 scalar(const Rat& s) { return {s, 0, 0, s}; }

  Vec2 apply(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  Rat det() const { return a * d - b * c; }

  Mat2 inverse() const {  // throws InvalidParameters when singular
    Rat D = det();
    if (D == 0) fail(Errc::InvalidParameters, "matrix is singular");
    return {d / D, -b / D, -c / D, a / D};
  }
};

inline Lattice2 apply(const Mat2& M, const Lattice2& L) {
  std::vector<Vec2> rows;
  for (const Vec2& r : L.basis()) rows.push_back(M.apply(r));
  return Lattice2::from_generators(rows);
}

// Unique M with M*x1 == y1, M*x2 == y2; requires x1, x2 independent.
Mat2 solve_map(const Vec2& x1, const Vec2& x2, const Vec2& y1, const Vec2& y2);

}  // namespace tubular
