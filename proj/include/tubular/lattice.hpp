#pragma once

#include <array>
#include <optional>
#include <vector>

#include "tubular/rational.hpp"

namespace tubular {

// Finitely generated subgroup of Q^2, held in a canonical Hermite-style basis:
//   rank 2: rows (a1, a2), (0, a3) with a1 > 0, a3 > 0, 0 <= a2 < a3
//   rank 1: one nonzero row whose first nonzero coordinate is positive
//   rank 0: no rows
// Two lattices are equal iff their canonical bases are equal componentwise.
class Lattice2 {
 public:
  Lattice2() = default;  // zero lattice

  static Lattice2 zero() { return Lattice2(); }
  static Lattice2 standard();  // Z^2
  static Lattice2 from_generators(const std::vector<Vec2>& gens);

  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vec2>& basis() const { return rows_; }

  bool operator==(const Lattice2&) const = default;

 private:
  std::vector<Vec2> rows_;
};

inline Lattice2 hnf(const std::vector<Vec2>& gens) { return Lattice2::from_generators(gens); }

// Integer coordinates of v in the canonical basis, or nullopt when v is not in
// the lattice. Rank-1 coordinates come back as (c, 0); rank-0 accepts only 0.
std::optional<std::array<Int, 2>> coords(const Lattice2& L, const Vec2& v);

bool contains(const Lattice2& L, const Vec2& v);
bool contains_lattice(const Lattice2& outer, const Lattice2& inner);

// gcd of the coordinates is 1. Throws ZeroVector on v == 0 and NotInLattice
// when v is outside L.
bool is_primitive_in(const Lattice2& L, const Vec2& v);

// Least q > 0 with q*v in L, or nullopt when no positive multiple of v lies in
// L. The set {t : t*v in L} is a subgroup qZ of Q, so the minimum exists
// whenever the intersection is nontrivial. Throws ZeroVector on v == 0.
std::optional<Rat> minimal_scale(const Lattice2& L, const Vec2& v);

// gcd of the coordinates of w in L; equals 1/minimal_scale(L, w) for w in L.
// Throws ZeroVector / NotInLattice like is_primitive_in.
Int torsion_degree(const Lattice2& L, const Vec2& w);

// r with a == r*b when a, b are parallel and nonzero; nullopt when independent.
// Throws ZeroVector if either argument is zero.
std::optional<Rat> parallel_ratio(const Vec2& a, const Vec2& b);

// |det(a b)|: the unsigned area spanned, 0 iff parallel.
Rat intersection_number(const Vec2& a, const Vec2& b);

// Invariant factors (d1, d2) of outer/inner, padded with leading 1s when
// rank(outer) < 2 and trailing 0s for free rank; d1 | d2 whenever d2 != 0.
// Throws NotSublattice when inner is not contained in outer.
std::array<Int, 2> smith_quotient(const Lattice2& outer, const Lattice2& inner);

Lattice2 scaled(const Lattice2& L, const Rat& a);  // throws ZeroScalar on a == 0

// Deterministic completion of w, primitive in a rank-2 L, to a basis (w, z):
// with coords (s, t) of w and a*s + b*t == 1 from exgcd, z gets coords (-b, a).
// Throws NotPrimitive / NotInLattice / ZeroVector / InvalidParameters (rank < 2).
Vec2 complement_in(const Lattice2& L, const Vec2& w);

// a1*a3 for rank 2, else 0. Positive for full-rank lattices.
Rat covolume(const Lattice2& L);

}  // namespace tubular
