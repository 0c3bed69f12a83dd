#pragma once

#include <string>
#include <vector>

#include "tubular/lattice.hpp"

namespace tubular {

struct Vertex {
  std::string id;
  Lattice2 lattice;  // rank 2 for valid groups

  bool operator==(const Vertex&) const = default;
};

// One stable letter t with t * u * t^-1 = v, where u lives at the `minus`
// vertex and v at the `plus` vertex. (u, v) and (-u, -v) present the same
// relation; the constructor normalizes so u's first nonzero coordinate is
// positive, which makes serialization and equality canonical.
struct Edge {
  std::string id;
  std::string minus, plus;
  Vec2 u, v;

  bool operator==(const Edge&) const = default;
};

// Finite graph of groups with Z^2 vertex groups and Z edge groups, presented
// by lattices in Q^2 and edge-image vectors. Document order of vertices and
// edges is meaningful (it fixes iteration order everywhere) and is preserved
// by every operation.
class TubularGroup {
 public:
  TubularGroup() = default;
  TubularGroup(std::vector<Vertex> vertices, std::vector<Edge> edges);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_vertex(const std::string& id) const;
  const Vertex& vertex(const std::string& id) const;       // throws SemanticError
  const Lattice2& lattice(const std::string& id) const { return vertex(id).lattice; }
  const Edge& edge(const std::string& id) const;           // throws SemanticError
  bool single_vertex() const { return vertices_.size() == 1; }

  bool operator==(const TubularGroup&) const = default;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

// Violation messages, empty iff the group is a valid tubular group: unique and
// well-formed ids, rank-2 vertex lattices, nonzero edge images contained in
// their endpoint lattices, nonempty connected underlying graph.
std::vector<std::string> validate(const TubularGroup& G);

// Throws SemanticError listing all violations when G is invalid.
void ensure_valid(const TubularGroup& G);

// Every edge image primitive in its endpoint lattice. Pre: G valid.
bool is_primitive(const TubularGroup& G);

// One vertex Z^2 and two stable letters: s * (q,0) * s^-1 = (p,1) and
// t * (q,0) * t^-1 = (p,-1). Requires p >= q >= 1.
TubularGroup snowflake(const Int& p, const Int& q);

// Scales every lattice and every edge image by a != 0. The result presents an
// isomorphic group (conjugation by the scaling of the plane).
TubularGroup scale(const TubularGroup& G, const Rat& a);

// Keeps exactly the edges in `edge_ids` and the vertices they touch, with
// lattices unchanged. Throws EmptySelection / DisconnectedSubgraph /
// InvalidParameters (unknown edge id).
TubularGroup subtubular(const TubularGroup& G, const std::vector<std::string>& edge_ids);

}  // namespace tubular
