#pragma once

// Shared fixture groups, named by how they behave under the decision
// procedure. All are single-vertex with vertex id "v" unless stated.

#include <string>
#include <vector>

#include "tubular/group.hpp"

namespace tubular::fixtures {

inline Vec2 vec(int x, int y) { return {Rat(x), Rat(y)}; }

inline TubularGroup single_vertex(std::vector<Edge> edges) {
  return TubularGroup({{"v", Lattice2::standard()}}, std::move(edges));
}

// One nontrivial expansion reaches a primitive presentation.
inline TubularGroup expanding_terminates() {
  return single_vertex({{"s", "v", "v", vec(1, 0), vec(2, 2)},
                        {"t", "v", "v", vec(0, 1), vec(1, 1)}});
}

// The expanded term reached from expanding_terminates().
inline TubularGroup expanding_terminates_target() {
  Lattice2 half = Lattice2::from_generators({{Rat(1, 2), Rat(0)}, {Rat(0), Rat(1)}});
  return TubularGroup({{"v", half}},
                      {{"s", "v", "v", {Rat(1, 2), Rat(0)}, vec(1, 1)},
                       {"t", "v", "v", vec(0, 1), vec(1, 1)}});
}

// Expansion recurs at distance one: term 2 is term 1 scaled by 1/2.
inline TubularGroup expanding_recurrent() {
  return single_vertex({{"s", "v", "v", vec(1, 0), vec(2, 4)},
                        {"t", "v", "v", vec(0, 1), vec(1, 2)}});
}

// The full sequence never recurs (an intersection-number ratio doubles each
// step) but the edge subset {s} alone is recurrent.
inline TubularGroup subgroup_recurrent() {
  return single_vertex({{"s", "v", "v", vec(1, 0), vec(2, 0)},
                        {"t", "v", "v", vec(0, 1), vec(1, 1)}});
}

// No regulating tuple: the t-sequence multiplies to 8/3.
inline TubularGroup no_regulating_tuple() {
  return single_vertex({{"s", "v", "v", vec(2, -4), vec(-1, -2)},
                        {"t", "v", "v", vec(-6, 6), vec(2, 2)}});
}

// Diverging family: u = (1,0), v = (2, 2^n) terminates after exactly n steps.
inline TubularGroup doubling_tail(int n) {
  Int two_n = Int(1) << n;
  return single_vertex({{"t", "v", "v", vec(1, 0), {Rat(2), Rat(two_n)}}});
}

// Primitive one-edge group used throughout the word tests.
inline TubularGroup primitive_loop() {
  return single_vertex({{"t", "v", "v", vec(0, 1), vec(1, 1)}});
}

// Primitive single-vertex groups for witness sampling.
inline std::vector<TubularGroup> primitive_pool() {
  return {
      primitive_loop(),
      single_vertex({{"t", "v", "v", vec(1, 0), vec(3, 2)}}),
      single_vertex({{"s", "v", "v", vec(0, 1), vec(1, 1)},
                     {"t", "v", "v", vec(1, 0), vec(1, 2)}}),
      single_vertex({{"s", "v", "v", vec(1, 2), vec(2, 1)},
                     {"t", "v", "v", vec(2, 3), vec(1, 1)}}),
      single_vertex({{"a", "v", "v", vec(1, 0), vec(0, 1)},
                     {"b", "v", "v", vec(1, 1), vec(1, -1)},
                     {"c", "v", "v", vec(2, 1), vec(3, 1)}}),
  };
}

// Two vertices joined by two edges; images primitive on both sides.
inline TubularGroup two_vertex_primitive() {
  return TubularGroup({{"p", Lattice2::standard()}, {"q", Lattice2::standard()}},
                      {{"a", "p", "q", vec(1, 0), vec(0, 1)},
                       {"b", "q", "p", vec(1, 1), vec(1, 2)}});
}

}  // namespace tubular::fixtures
