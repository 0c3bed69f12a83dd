#include "tubular/lattice.hpp"

#include <algorithm>
#include <utility>

namespace tubular {

namespace {

using Row = std::pair<Int, Int>;

// Row Hermite form over Z. Span is preserved at every step: the pivot fold
// replaces two rows by a unimodular combination (det -1), never by a single
// combined row.
std::vector<Row> hnf_int(std::vector<Row> rows) {
  rows.erase(std::remove_if(rows.begin(), rows.end(),
                            [](const Row& r) { return r.first == 0 && r.second == 0; }),
             rows.end());
  if (rows.empty()) return {};

  size_t pivot = rows.size();
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].first != 0) {
      pivot = i;
      break;
    }
  }
  if (pivot == rows.size()) {
    Int g = 0;
    for (const Row& r : rows) g = gcd(g, r.second);
    return {{Int(0), abs(g)}};
  }
  std::swap(rows[0], rows[pivot]);
  for (size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].first == 0) continue;
    const Row r0 = rows[0], ri = rows[i];
    const ExGcd e = exgcd(r0.first, ri.first);
    rows[0] = {e.g, e.s * r0.second + e.t * ri.second};
    rows[i] = {Int(0), (ri.first / e.g) * r0.second - (r0.first / e.g) * ri.second};
  }
  if (rows[0].first < 0) {
    rows[0].first = -rows[0].first;
    rows[0].second = -rows[0].second;
  }
  Int g2 = 0;
  for (size_t i = 1; i < rows.size(); ++i) g2 = gcd(g2, rows[i].second);
  if (g2 == 0) return {rows[0]};
  return {{rows[0].first, floor_mod(rows[0].second, g2)}, {Int(0), g2}};
}

}  // namespace

Lattice2 Lattice2::standard() {
  Lattice2 L;
  L.rows_ = {Vec2{1, 0}, Vec2{0, 1}};
  return L;
}

Lattice2 Lattice2::from_generators(const std::vector<Vec2>& gens) {
  Int scale = 1;
  for (const Vec2& g : gens) {
    scale = lcm(scale, den(g.x));
    scale = lcm(scale, den(g.y));
  }
  std::vector<Row> rows;
  rows.reserve(gens.size());
  for (const Vec2& g : gens) {
    Rat x = Rat(scale) * g.x, y = Rat(scale) * g.y;
    rows.push_back({num(x), num(y)});
  }
  std::vector<Row> h = hnf_int(std::move(rows));
  Lattice2 L;
  const Rat inv = Rat(1, scale);
  for (const Row& r : h) L.rows_.push_back(Vec2{inv * Rat(r.first), inv * Rat(r.second)});
  return L;
}

std::optional<std::array<Int, 2>> coords(const Lattice2& L, const Vec2& v) {
  const auto& B = L.basis();
  if (L.rank() == 0) {
    if (v.is_zero()) return std::array<Int, 2>{0, 0};
    return std::nullopt;
  }
  if (L.rank() == 1) {
    const Vec2& b = B[0];
    Rat c;
    if (b.x != 0) {
      c = v.x / b.x;
      if (c * b.y != v.y) return std::nullopt;
    } else {
      if (v.x != 0) return std::nullopt;
      c = v.y / b.y;
    }
    if (!is_integer(c)) return std::nullopt;
    return std::array<Int, 2>{num(c), 0};
  }
  // triangular: B[0] = (a1, a2), B[1] = (0, a3)
  Rat c1 = v.x / B[0].x;
  if (!is_integer(c1)) return std::nullopt;
  Rat c2 = (v.y - c1 * B[0].y) / B[1].y;
  if (!is_integer(c2)) return std::nullopt;
  return std::array<Int, 2>{num(c1), num(c2)};
}

bool contains(const Lattice2& L, const Vec2& v) { return coords(L, v).has_value(); }

bool contains_lattice(const Lattice2& outer, const Lattice2& inner) {
  for (const Vec2& r : inner.basis()) {
    if (!contains(outer, r)) return false;
  }
  return true;
}

bool is_primitive_in(const Lattice2& L, const Vec2& v) {
  if (v.is_zero()) fail(Errc::ZeroVector, "primitivity is undefined for the zero vector");
  auto c = coords(L, v);
  if (!c) fail(Errc::NotInLattice, vec_string(v) + " is not in the lattice");
  return gcd((*c)[0], (*c)[1]) == 1;
}

std::optional<Rat> minimal_scale(const Lattice2& L, const Vec2& v) {
  if (v.is_zero()) fail(Errc::ZeroVector, "minimal scale is undefined for the zero vector");
  const auto& B = L.basis();
  // Rational coordinates of v in the basis, when v lies in the Q-span.
  Rat q1, q2;
  if (L.rank() == 0) return std::nullopt;
  if (L.rank() == 1) {
    auto r = parallel_ratio(v, B[0]);
    if (!r) return std::nullopt;
    q1 = *r;
    q2 = 0;
  } else {
    q1 = v.x / B[0].x;
    q2 = (v.y - q1 * B[0].y) / B[1].y;
  }
  // {t : t*v in L} = {t : t*q1, t*q2 in Z} = (lcm(d1,d2)/gcd(n1,n2)) Z
  Int n = gcd(num(q1), num(q2));
  Int d = lcm(den(q1), den(q2));
  return Rat(d, n);  // n > 0 since v != 0
}

Int torsion_degree(const Lattice2& L, const Vec2& w) {
  if (w.is_zero()) fail(Errc::ZeroVector, "torsion degree is undefined for the zero vector");
  auto c = coords(L, w);
  if (!c) fail(Errc::NotInLattice, vec_string(w) + " is not in the lattice");
  return gcd((*c)[0], (*c)[1]);
}

std::optional<Rat> parallel_ratio(const Vec2& a, const Vec2& b) {
  if (a.is_zero() || b.is_zero()) fail(Errc::ZeroVector, "parallel ratio needs nonzero vectors");
  if (cross(a, b) != 0) return std::nullopt;
  return b.x != 0 ? a.x / b.x : a.y / b.y;
}

Rat intersection_number(const Vec2& a, const Vec2& b) {
  Rat c = cross(a, b);
  return c < 0 ? -c : c;
}

std::array<Int, 2> smith_quotient(const Lattice2& outer, const Lattice2& inner) {
  if (inner.rank() > outer.rank()) {
    fail(Errc::NotSublattice, "inner lattice has larger rank than outer");
  }
  std::vector<std::array<Int, 2>> rows;
  for (const Vec2& r : inner.basis()) {
    auto c = coords(outer, r);
    if (!c) fail(Errc::NotSublattice, vec_string(r) + " is not in the outer lattice");
    rows.push_back(*c);
  }
  std::vector<Int> factors;
  if (!rows.empty()) {
    Int d1 = 0;
    for (const auto& r : rows) d1 = gcd(gcd(d1, r[0]), r[1]);
    factors.push_back(d1);
    if (rows.size() == 2 && outer.rank() == 2) {
      Int det = abs(rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]);
      factors.push_back(det / d1);
    }
  }
  // Free rank of the quotient contributes zeros; missing outer rank pads with 1s
  // in front so the result always has shape (d1, d2) with d1 | d2 or d2 == 0.
  for (int i = inner.rank(); i < outer.rank(); ++i) factors.push_back(0);
  std::array<Int, 2> out{1, 1};
  if (factors.size() == 1) {
    out[1] = factors[0];
  } else if (factors.size() == 2) {
    out[0] = factors[0];
    out[1] = factors[1];
  }
  return out;
}

Lattice2 scaled(const Lattice2& L, const Rat& a) {
  if (a == 0) fail(Errc::ZeroScalar, "cannot scale a lattice by zero");
  std::vector<Vec2> rows;
  for (const Vec2& r : L.basis()) rows.push_back(a * r);
  return Lattice2::from_generators(rows);
}

Vec2 complement_in(const Lattice2& L, const Vec2& w) {
  if (L.rank() < 2) fail(Errc::InvalidParameters, "basis completion needs a rank-2 lattice");
  if (!is_primitive_in(L, w)) {
    fail(Errc::NotPrimitive, vec_string(w) + " is not primitive, cannot complete to a basis");
  }
  auto c = coords(L, w);
  const ExGcd e = exgcd((*c)[0], (*c)[1]);  // e.g == 1
  const Vec2& b0 = L.basis()[0];
  const Vec2& b1 = L.basis()[1];
  return Rat(-e.t) * b0 + Rat(e.s) * b1;
}

Rat covolume(const Lattice2& L) {
  if (L.rank() < 2) return 0;
  return L.basis()[0].x * L.basis()[1].y;
}

}  // namespace tubular
