#include "tubular/json_io.hpp"

namespace tubular {

json rat_to_json(const Rat& q) { return rat_string(q); }

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) {
    auto q = parse_rat(j.get<std::string>());
    if (q) return *q;
  }
  fail(Errc::SyntaxError, "expected a rational string, got " + j.dump());
}

json int_to_json(const Int& n) { return int_string(n); }

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    auto n = parse_int(j.get<std::string>());
    if (n) return *n;
  }
  fail(Errc::SyntaxError, "expected an integer string, got " + j.dump());
}

json vec_to_json(const Vec2& v) { return json::array({rat_to_json(v.x), rat_to_json(v.y)}); }

Vec2 vec_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    fail(Errc::SyntaxError, "expected a 2-element vector, got " + j.dump());
  }
  return Vec2{rat_from_json(j[0]), rat_from_json(j[1])};
}

json lattice_to_json(const Lattice2& L) {
  json rows = json::array();
  for (const Vec2& r : L.basis()) rows.push_back(vec_to_json(r));
  return rows;
}

Lattice2 lattice_from_json(const json& j) {
  if (!j.is_array()) fail(Errc::SyntaxError, "expected an array of lattice rows");
  std::vector<Vec2> rows;
  for (const auto& r : j) rows.push_back(vec_from_json(r));
  return Lattice2::from_generators(rows);
}

json mat_to_json(const Mat2& M) {
  return json::array({json::array({rat_to_json(M.a), rat_to_json(M.b)}),
                      json::array({rat_to_json(M.c), rat_to_json(M.d)})});
}

Mat2 mat_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
      !j[1].is_array() || j[1].size() != 2) {
    fail(Errc::SyntaxError, "expected a 2x2 matrix, got " + j.dump());
  }
  return Mat2{rat_from_json(j[0][0]), rat_from_json(j[0][1]), rat_from_json(j[1][0]),
              rat_from_json(j[1][1])};
}

json group_to_json(const TubularGroup& G) {
  json doc;
  doc["vertices"] = json::array();
  for (const Vertex& v : G.vertices()) {
    doc["vertices"].push_back({{"id", v.id}, {"basis", lattice_to_json(v.lattice)}});
  }
  doc["edges"] = json::array();
  for (const Edge& e : G.edges()) {
    doc["edges"].push_back({{"id", e.id},
                            {"minus", e.minus},
                            {"plus", e.plus},
                            {"u", vec_to_json(e.u)},
                            {"v", vec_to_json(e.v)}});
  }
  return doc;
}

namespace {

const json& need(const json& j, const char* key, const char* what) {
  auto it = j.find(key);
  if (it == j.end()) {
    fail(Errc::SyntaxError, std::string(what) + " is missing required key '" + key + "'");
  }
  return *it;
}

std::string need_string(const json& j, const char* key, const char* what) {
  const json& v = need(j, key, what);
  if (!v.is_string()) fail(Errc::SyntaxError, std::string(what) + " key '" + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

TubularGroup group_from_json(const json& j) {
  if (!j.is_object()) fail(Errc::SyntaxError, "group document must be a JSON object");
  std::vector<Vertex> vs;
  for (const auto& vj : need(j, "vertices", "group")) {
    Vertex v;
    v.id = need_string(vj, "id", "vertex");
    v.lattice = vj.contains("basis") ? lattice_from_json(vj["basis"]) : Lattice2::standard();
    vs.push_back(std::move(v));
  }
  std::vector<Edge> es;
  for (const auto& ej : need(j, "edges", "group")) {
    Edge e;
    e.id = need_string(ej, "id", "edge");
    e.minus = need_string(ej, "minus", "edge");
    e.plus = need_string(ej, "plus", "edge");
    e.u = vec_from_json(need(ej, "u", "edge"));
    e.v = vec_from_json(need(ej, "v", "edge"));
    es.push_back(std::move(e));
  }
  TubularGroup G(std::move(vs), std::move(es));
  for (const Edge& e : G.edges()) {
    for (const std::string* end : {&e.minus, &e.plus}) {
      if (!G.has_vertex(*end)) {
        fail(Errc::SemanticError, "edge '" + e.id + "' references unknown vertex '" + *end + "'");
      }
    }
  }
  return G;
}

TubularGroup parse_group(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::SyntaxError, "input is not valid JSON");
  return group_from_json(j);
}

std::string serialize_group(const TubularGroup& G) { return group_to_json(G).dump(2); }

}  // namespace tubular
