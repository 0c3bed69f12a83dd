#include "tubular/group.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tubular {

namespace {

// True when v's first nonzero coordinate is negative.
bool leading_negative(const Vec2& v) {
  if (v.x != 0) return v.x < 0;
  return v.y < 0;
}

}  // namespace

TubularGroup::TubularGroup(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (Edge& e : edges_) {
    if (!e.u.is_zero() && leading_negative(e.u)) {
      e.u = -e.u;
      e.v = -e.v;
    }
  }
}

bool TubularGroup::has_vertex(const std::string& id) const {
  for (const Vertex& v : vertices_) {
    if (v.id == id) return true;
  }
  return false;
}

const Vertex& TubularGroup::vertex(const std::string& id) const {
  for (const Vertex& v : vertices_) {
    if (v.id == id) return v;
  }
  fail(Errc::SemanticError, "unknown vertex id '" + id + "'");
}

const Edge& TubularGroup::edge(const std::string& id) const {
  for (const Edge& e : edges_) {
    if (e.id == id) return e;
  }
  fail(Errc::SemanticError, "unknown edge id '" + id + "'");
}

std::vector<std::string> validate(const TubularGroup& G) {
  std::vector<std::string> out;
  if (G.vertices().empty()) {
    out.push_back("group has no vertices");
    return out;
  }
  std::set<std::string> vids, eids;
  for (const Vertex& v : G.vertices()) {
    if (v.id.empty()) out.push_back("empty vertex id");
    if (!vids.insert(v.id).second) out.push_back("duplicate vertex id '" + v.id + "'");
    if (v.lattice.rank() != 2) {
      out.push_back("vertex '" + v.id + "' lattice has rank " +
                    std::to_string(v.lattice.rank()) + ", expected 2");
    }
  }
  for (const Edge& e : G.edges()) {
    if (e.id.empty()) out.push_back("empty edge id");
    if (!eids.insert(e.id).second) out.push_back("duplicate edge id '" + e.id + "'");
    bool ends_ok = true;
    for (const std::string* end : {&e.minus, &e.plus}) {
      if (!vids.count(*end)) {
        out.push_back("edge '" + e.id + "' references unknown vertex '" + *end + "'");
        ends_ok = false;
      }
    }
    for (auto [vec, end, side] : {std::tuple<const Vec2*, const std::string*, const char*>{
                                      &e.u, &e.minus, "u"},
                                  {&e.v, &e.plus, "v"}}) {
      if (vec->is_zero()) {
        out.push_back("edge '" + e.id + "' has zero image " + side);
      } else if (ends_ok && G.vertex(*end).lattice.rank() == 2 &&
                 !contains(G.vertex(*end).lattice, *vec)) {
        out.push_back("edge '" + e.id + "' image " + side + " = " + vec_string(*vec) +
                      " is not in the lattice at '" + *end + "'");
      }
    }
  }
  // Connectivity of the underlying graph, only meaningful once ids resolve.
  if (out.empty()) {
    std::set<std::string> seen{G.vertices().front().id};
    bool grew = true;
    while (grew) {
      grew = false;
      for (const Edge& e : G.edges()) {
        bool m = seen.count(e.minus) > 0, p = seen.count(e.plus) > 0;
        if (m != p) {
          seen.insert(m ? e.plus : e.minus);
          grew = true;
        }
      }
    }
    if (seen.size() != G.vertices().size()) out.push_back("underlying graph is not connected");
  }
  return out;
}

void ensure_valid(const TubularGroup& G) {
  std::vector<std::string> v = validate(G);
  if (v.empty()) return;
  std::string msg;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) msg += "; ";
    msg += v[i];
  }
  fail(Errc::SemanticError, msg);
}

bool is_primitive(const TubularGroup& G) {
  for (const Edge& e : G.edges()) {
    if (!is_primitive_in(G.lattice(e.minus), e.u)) return false;
    if (!is_primitive_in(G.lattice(e.plus), e.v)) return false;
  }
  return true;
}

TubularGroup snowflake(const Int& p, const Int& q) {
  if (p < 1 || q < 1 || q > p) {
    fail(Errc::InvalidParameters,
         "snowflake requires p >= q >= 1, got p=" + int_string(p) + ", q=" + int_string(q));
  }
  Vertex v{"v", Lattice2::standard()};
  Edge s{"s", "v", "v", Vec2{Rat(q), 0}, Vec2{Rat(p), 1}};
  Edge t{"t", "v", "v", Vec2{Rat(q), 0}, Vec2{Rat(p), -1}};
  return TubularGroup({v}, {s, t});
}

TubularGroup scale(const TubularGroup& G, const Rat& a) {
  if (a == 0) fail(Errc::ZeroScalar, "cannot scale a group by zero");
  std::vector<Vertex> vs;
  for (const Vertex& v : G.vertices()) vs.push_back({v.id, scaled(v.lattice, a)});
  std::vector<Edge> es;
  for (const Edge& e : G.edges()) es.push_back({e.id, e.minus, e.plus, a * e.u, a * e.v});
  return TubularGroup(std::move(vs), std::move(es));
}

TubularGroup subtubular(const TubularGroup& G, const std::vector<std::string>& edge_ids) {
  if (edge_ids.empty()) fail(Errc::EmptySelection, "subtubular selection is empty");
  std::set<std::string> want(edge_ids.begin(), edge_ids.end());
  for (const std::string& id : want) {
    bool known = std::any_of(G.edges().begin(), G.edges().end(),
                             [&](const Edge& e) { return e.id == id; });
    if (!known) fail(Errc::InvalidParameters, "unknown edge id '" + id + "' in selection");
  }
  std::vector<Edge> es;
  std::set<std::string> touched;
  for (const Edge& e : G.edges()) {
    if (!want.count(e.id)) continue;
    es.push_back(e);
    touched.insert(e.minus);
    touched.insert(e.plus);
  }
  std::vector<Vertex> vs;
  for (const Vertex& v : G.vertices()) {
    if (touched.count(v.id)) vs.push_back(v);
  }
  // The selected subgraph must be connected on its own vertices.
  std::set<std::string> seen{vs.front().id};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Edge& e : es) {
      bool m = seen.count(e.minus) > 0, p = seen.count(e.plus) > 0;
      if (m != p) {
        seen.insert(m ? e.plus : e.minus);
        grew = true;
      }
    }
  }
  if (seen.size() != vs.size()) {
    fail(Errc::DisconnectedSubgraph, "selected edges span a disconnected subgraph");
  }
  return TubularGroup(std::move(vs), std::move(es));
}

}  // namespace tubular
