#include "tubular/expansion.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tubular {

std::vector<EdgeDegrees> edge_degrees(const TubularGroup& G) {
  ensure_valid(G);
  std::vector<EdgeDegrees> out;
  for (const Edge& e : G.edges()) {
    Int dm = torsion_degree(G.lattice(e.minus), e.u);
    Int dp = torsion_degree(G.lattice(e.plus), e.v);
    out.push_back({e.id, dm, dp, lcm(dm, dp)});
  }
  return out;
}

std::pair<TubularGroup, bool> expand(const TubularGroup& G) {
  std::vector<EdgeDegrees> degs = edge_degrees(G);
  bool trivial = std::all_of(degs.begin(), degs.end(),
                             [](const EdgeDegrees& d) { return d.d == 1; });
  if (trivial) return {G, true};
  std::vector<Edge> es = G.edges();
  std::map<std::string, std::vector<Vec2>> extra;
  for (size_t i = 0; i < es.size(); ++i) {
    const Rat inv(1, degs[i].d);
    es[i].u = inv * es[i].u;
    es[i].v = inv * es[i].v;
    extra[es[i].minus].push_back(es[i].u);
    extra[es[i].plus].push_back(es[i].v);
  }
  std::vector<Vertex> vs;
  for (const Vertex& v : G.vertices()) {
    std::vector<Vec2> gens = v.lattice.basis();
    const auto& add = extra[v.id];
    gens.insert(gens.end(), add.begin(), add.end());
    vs.push_back({v.id, Lattice2::from_generators(gens)});
  }
  return {TubularGroup(std::move(vs), std::move(es)), false};
}

bool verify_rigid_iso(const TubularGroup& A, const TubularGroup& B, const RigidIso& iso) {
  // Vertex bijection with a matrix per source vertex.
  if (iso.vertex_map.size() != A.vertices().size() ||
      A.vertices().size() != B.vertices().size()) {
    return false;
  }
  std::set<std::string> hit;
  for (const Vertex& a : A.vertices()) {
    auto it = iso.vertex_map.find(a.id);
    if (it == iso.vertex_map.end() || !B.has_vertex(it->second)) return false;
    if (!hit.insert(it->second).second) return false;
    auto mt = iso.matrices.find(a.id);
    if (mt == iso.matrices.end() || mt->second.det() == 0) return false;
    if (apply(mt->second, a.lattice) != B.lattice(it->second)) return false;
  }
  // Edge bijection respecting incidence, reversal, sign.
  if (iso.edge_map.size() != A.edges().size() || A.edges().size() != B.edges().size()) {
    return false;
  }
  std::set<std::string> ehit;
  for (const Edge& e : A.edges()) {
    auto it = iso.edge_map.find(e.id);
    if (it == iso.edge_map.end()) return false;
    if (!ehit.insert(it->second).second) return false;
    const Edge* f = nullptr;
    for (const Edge& cand : B.edges()) {
      if (cand.id == it->second) f = &cand;
    }
    if (!f) return false;
    auto rt = iso.reversed.find(e.id);
    auto st = iso.signs.find(e.id);
    if (rt == iso.reversed.end() || st == iso.signs.end()) return false;
    if (st->second != 1 && st->second != -1) return false;
    bool rev = rt->second;
    const Rat eps(st->second);
    const std::string& fm = rev ? f->plus : f->minus;
    const std::string& fp = rev ? f->minus : f->plus;
    if (iso.vertex_map.at(e.minus) != fm || iso.vertex_map.at(e.plus) != fp) return false;
    const Vec2& fu = rev ? f->v : f->u;
    const Vec2& fv = rev ? f->u : f->v;
    if (iso.matrices.at(e.minus).apply(e.u) != eps * fu) return false;
    if (iso.matrices.at(e.plus).apply(e.v) != eps * fv) return false;
  }
  return true;
}

namespace {

std::map<std::string, std::vector<Vec2>> images_by_vertex(const TubularGroup& G) {
  std::map<std::string, std::vector<Vec2>> m;
  for (const Vertex& v : G.vertices()) m[v.id];
  for (const Edge& e : G.edges()) {
    m[e.minus].push_back(e.u);
    m[e.plus].push_back(e.v);
  }
  return m;
}

// Rigid isomorphisms scale all intersection numbers at a vertex by |det M| and
// the covolume by the same factor, so these multisets are invariants.
struct VertexInvariant {
  size_t n_images;
  std::vector<Rat> pairwise;  // sorted |cross(x_i, x_j)| / covolume

  bool operator==(const VertexInvariant& o) const {
    return n_images == o.n_images && pairwise == o.pairwise;
  }
  bool operator<(const VertexInvariant& o) const {
    if (n_images != o.n_images) return n_images < o.n_images;
    return std::lexicographical_compare(pairwise.begin(), pairwise.end(), o.pairwise.begin(),
                                        o.pairwise.end());
  }
};

std::vector<VertexInvariant> group_invariant(const TubularGroup& G) {
  std::vector<VertexInvariant> out;
  auto imgs = images_by_vertex(G);
  for (const Vertex& v : G.vertices()) {
    const auto& xs = imgs[v.id];
    VertexInvariant inv;
    inv.n_images = xs.size();
    const Rat vol = covolume(v.lattice);
    for (size_t i = 0; i < xs.size(); ++i) {
      for (size_t j = i + 1; j < xs.size(); ++j) {
        inv.pairwise.push_back(intersection_number(xs[i], xs[j]) / vol);
      }
    }
    std::sort(inv.pairwise.begin(), inv.pairwise.end());
    out.push_back(std::move(inv));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string invariant_string(const std::vector<VertexInvariant>& inv) {
  std::string s = "{";
  for (size_t i = 0; i < inv.size(); ++i) {
    if (i) s += "; ";
    s += "[deg=" + std::to_string(inv[i].n_images) + ":";
    for (size_t j = 0; j < inv[i].pairwise.size(); ++j) {
      s += (j ? "," : " ") + rat_string(inv[i].pairwise[j]);
    }
    s += "]";
  }
  return s + "}";
}

// Completes a vertex assignment (bijection + per-vertex matrix) to a full
// rigid isomorphism by matching edges, or reports that none exists for this
// assignment. Deterministic: edges are tried in document order, candidates in
// document order, plain before reversed.
class EdgeMatcher {
 public:
  EdgeMatcher(const TubularGroup& A, const TubularGroup& B,
              const std::map<std::string, std::string>& vmap,
              const std::map<std::string, Mat2>& mats)
      : A_(A), B_(B), vmap_(vmap), mats_(mats), used_(B.edges().size(), false) {}

  std::optional<RigidIso> run() {
    for (const Vertex& a : A_.vertices()) {
      if (apply(mats_.at(a.id), a.lattice) != B_.lattice(vmap_.at(a.id))) return std::nullopt;
    }
    if (!match(0)) return std::nullopt;
    RigidIso iso;
    iso.vertex_map = vmap_;
    iso.matrices = mats_;
    for (const auto& [eid, rec] : chosen_) {
      iso.edge_map[eid] = std::get<0>(rec);
      iso.reversed[eid] = std::get<1>(rec);
      iso.signs[eid] = std::get<2>(rec);
    }
    return iso;
  }

 private:
  bool match(size_t idx) {
    if (idx == A_.edges().size()) return true;
    const Edge& e = A_.edges()[idx];
    const Vec2 Mu = mats_.at(e.minus).apply(e.u);
    const Vec2 Mv = mats_.at(e.plus).apply(e.v);
    for (size_t bi = 0; bi < B_.edges().size(); ++bi) {
      if (used_[bi]) continue;
      const Edge& f = B_.edges()[bi];
      for (bool rev : {false, true}) {
        const std::string& fm = rev ? f.plus : f.minus;
        const std::string& fp = rev ? f.minus : f.plus;
        if (vmap_.at(e.minus) != fm || vmap_.at(e.plus) != fp) continue;
        const Vec2& fu = rev ? f.v : f.u;
        const Vec2& fv = rev ? f.u : f.v;
        int sign = 0;
        if (Mu == fu && Mv == fv) {
          sign = 1;
        } else if (Mu == -fu && Mv == -fv) {
          sign = -1;
        } else {
          continue;
        }
        used_[bi] = true;
        chosen_[e.id] = {f.id, rev, sign};
        if (match(idx + 1)) return true;
        used_[bi] = false;
        chosen_.erase(e.id);
      }
    }
    return false;
  }

  const TubularGroup& A_;
  const TubularGroup& B_;
  const std::map<std::string, std::string>& vmap_;
  const std::map<std::string, Mat2>& mats_;
  std::vector<bool> used_;
  std::map<std::string, std::tuple<std::string, bool, int>> chosen_;
};

std::optional<RigidIso> try_assemble(const TubularGroup& A, const TubularGroup& B,
                                     const std::map<std::string, std::string>& vmap,
                                     const std::map<std::string, Mat2>& mats) {
  return EdgeMatcher(A, B, vmap, mats).run();
}

// Primitive generator of L intersected with the line through d (d in L).
Vec2 line_generator(const Lattice2& L, const Vec2& d) {
  Rat q = *minimal_scale(L, d);
  Vec2 w = q * d;
  if (w.x < 0 || (w.x == 0 && w.y < 0)) w = -w;
  return w;
}

IsoSearchResult single_vertex_search(const TubularGroup& A, const TubularGroup& B) {
  const std::string& va = A.vertices()[0].id;
  const std::string& vb = B.vertices()[0].id;
  const Lattice2& LA = A.vertices()[0].lattice;
  const Lattice2& LB = B.vertices()[0].lattice;
  std::map<std::string, std::string> vmap{{va, vb}};

  std::vector<Vec2> imgsA, imgsB;
  for (const Edge& e : A.edges()) {
    imgsA.push_back(e.u);
    imgsA.push_back(e.v);
  }
  for (const Edge& e : B.edges()) {
    imgsB.push_back(e.u);
    imgsB.push_back(e.v);
  }

  auto found = [&](const Mat2& M) -> std::optional<RigidIso> {
    return try_assemble(A, B, vmap, {{va, M}});
  };

  if (imgsA.empty()) {
    // No edge constraints: map canonical basis to canonical basis.
    Mat2 M = solve_map(LA.basis()[0], LA.basis()[1], LB.basis()[0], LB.basis()[1]);
    if (auto iso = found(M)) return {IsoSearchResult::Kind::Found, iso, ""};
    return {IsoSearchResult::Kind::NotFound, std::nullopt, ""};
  }

  const Vec2 x1 = imgsA[0];
  const Vec2* x2 = nullptr;
  for (const Vec2& x : imgsA) {
    if (cross(x1, x) != 0) {
      x2 = &x;
      break;
    }
  }

  if (!x2) {
    // All images of A lie on one line (and by the invariant prefilter the same
    // holds for B). Any rigid iso must take the primitive lattice generator of
    // that line to +-(the one in B), and edge conditions only see the line, so
    // testing the canonical complement with shear 0 is exhaustive.
    const Vec2 wA = line_generator(LA, x1);
    const Vec2 zA = complement_in(LA, wA);
    const Vec2 wB = line_generator(LB, imgsB[0]);
    const Vec2 zB = complement_in(LB, wB);
    for (int delta : {1, -1}) {
      for (int beta : {1, -1}) {
        Mat2 M = solve_map(wA, zA, Rat(delta) * wB, Rat(beta) * zB);
        if (auto iso = found(M)) return {IsoSearchResult::Kind::Found, iso, ""};
      }
    }
    return {IsoSearchResult::Kind::NotFound, std::nullopt, ""};
  }

  // Two independent images pin the matrix up to the choice of their targets,
  // which must again be images up to sign. Exhaustive over those choices.
  for (const Vec2& y1 : imgsB) {
    for (int s1 : {1, -1}) {
      for (const Vec2& y2 : imgsB) {
        for (int s2 : {1, -1}) {
          if (cross(y1, y2) == 0) continue;
          Mat2 M = solve_map(x1, *x2, Rat(s1) * y1, Rat(s2) * y2);
          if (auto iso = found(M)) return {IsoSearchResult::Kind::Found, iso, ""};
        }
      }
    }
  }
  return {IsoSearchResult::Kind::NotFound, std::nullopt, ""};
}

std::optional<Rat> rational_sqrt(const Rat& q) {
  if (q < 0) return std::nullopt;
  Int n = sqrt(num(q)), d = sqrt(den(q));
  if (n * n != num(q) || d * d != den(q)) return std::nullopt;
  return Rat(n, d);
}

IsoSearchResult multi_vertex_search(const TubularGroup& A, const TubularGroup& B) {
  // Heuristic: per-vertex scalar matrices only. A miss here is inconclusive.
  const size_t n = A.vertices().size();
  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::map<std::string, std::string> vmap;
    std::map<std::string, Mat2> mats;
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i) {
      const Vertex& a = A.vertices()[i];
      const Vertex& b = B.vertices()[perm[i]];
      auto alpha = rational_sqrt(covolume(b.lattice) / covolume(a.lattice));
      if (!alpha) {
        ok = false;
        break;
      }
      vmap[a.id] = b.id;
      mats[a.id] = Mat2::scalar(*alpha);
    }
    if (!ok) continue;
    if (auto iso = try_assemble(A, B, vmap, mats)) {
      return {IsoSearchResult::Kind::Found, iso, ""};
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {IsoSearchResult::Kind::NotFound, std::nullopt, ""};
}

}  // namespace

IsoSearchResult detect_rigid_iso(const TubularGroup& A, const TubularGroup& B) {
  if (A.vertices().size() != B.vertices().size() || A.edges().size() != B.edges().size()) {
    return {IsoSearchResult::Kind::RuledOut, std::nullopt,
            "graph sizes differ: " + std::to_string(A.vertices().size()) + " vertices / " +
                std::to_string(A.edges().size()) + " edges vs " +
                std::to_string(B.vertices().size()) + " / " + std::to_string(B.edges().size())};
  }
  auto invA = group_invariant(A);
  auto invB = group_invariant(B);
  if (invA != invB) {
    return {IsoSearchResult::Kind::RuledOut, std::nullopt,
            "covolume-normalized intersection invariants differ: " + invariant_string(invA) +
                " vs " + invariant_string(invB)};
  }
  if (A.vertices().size() == 1) return single_vertex_search(A, B);
  return multi_vertex_search(A, B);
}

ExpansionOutcome run_sequence(const TubularGroup& G, int budget) {
  if (budget < 0) fail(Errc::InvalidParameters, "budget must be nonnegative");
  ensure_valid(G);
  ExpansionOutcome out;
  out.budget = budget;
  out.history.push_back(G);
  int steps = 0;
  for (;;) {
    auto [next, trivial] = expand(out.history.back());
    if (trivial) {
      out.status = ExpansionOutcome::Status::Terminated;
      out.terminated_index = static_cast<int>(out.history.size()) - 1;
      return out;
    }
    if (steps == budget) {
      out.status = ExpansionOutcome::Status::Exhausted;
      return out;
    }
    out.history.push_back(std::move(next));
    ++steps;
    const int j = static_cast<int>(out.history.size()) - 1;
    for (int i = 0; i < j; ++i) {
      IsoSearchResult r = detect_rigid_iso(out.history[j], out.history[i]);
      if (r.kind == IsoSearchResult::Kind::Found) {
        out.status = ExpansionOutcome::Status::Recurrent;
        out.earlier = i;
        out.later = j;
        out.witness = std::move(r.iso);
        return out;
      }
    }
  }
}

Int length_bound(const ExpansionOutcome& out) {
  const TubularGroup& first = out.history.front();
  const TubularGroup& last = out.history.back();
  Int total = 0;
  for (const Edge& e : first.edges()) {
    Rat r = *parallel_ratio(e.u, last.edge(e.id).u);  // product of the step degrees
    total += abs(num(r));
  }
  return total;
}

json iso_to_json(const RigidIso& iso) {
  json j;
  j["vertex_map"] = iso.vertex_map;
  j["matrices"] = json::object();
  j["inverse_matrices"] = json::object();
  for (const auto& [v, M] : iso.matrices) {
    j["matrices"][v] = mat_to_json(M);
    j["inverse_matrices"][v] = mat_to_json(M.inverse());
  }
  j["edge_map"] = iso.edge_map;
  j["reversed"] = iso.reversed;
  j["signs"] = json::object();
  for (const auto& [e, s] : iso.signs) j["signs"][e] = int_to_json(s);
  return j;
}

RigidIso iso_from_json(const json& j) {
  RigidIso iso;
  for (const auto& [k, v] : j.at("vertex_map").items()) iso.vertex_map[k] = v.get<std::string>();
  for (const auto& [k, v] : j.at("matrices").items()) iso.matrices[k] = mat_from_json(v);
  for (const auto& [k, v] : j.at("edge_map").items()) iso.edge_map[k] = v.get<std::string>();
  for (const auto& [k, v] : j.at("reversed").items()) iso.reversed[k] = v.get<bool>();
  for (const auto& [k, v] : j.at("signs").items()) {
    iso.signs[k] = static_cast<int>(int_from_json(v));
  }
  return iso;
}

json outcome_to_json(const ExpansionOutcome& out) {
  json j;
  switch (out.status) {
    case ExpansionOutcome::Status::Terminated: j["status"] = "terminated"; break;
    case ExpansionOutcome::Status::Recurrent: j["status"] = "recurrent"; break;
    case ExpansionOutcome::Status::Exhausted: j["status"] = "exhausted"; break;
  }
  j["budget"] = out.budget;
  j["nontrivial_steps"] = out.history.size() - 1;
  if (out.status == ExpansionOutcome::Status::Terminated) {
    j["terminated_index"] = out.terminated_index;
    j["length_bound"] = int_string(length_bound(out));
  }
  if (out.status == ExpansionOutcome::Status::Recurrent) {
    j["earlier"] = out.earlier;
    j["later"] = out.later;
    j["witness"] = iso_to_json(*out.witness);
  }
  j["history"] = json::array();
  for (const TubularGroup& g : out.history) j["history"].push_back(group_to_json(g));
  return j;
}

ExpansionOutcome outcome_from_json(const json& j) {
  ExpansionOutcome out;
  const std::string status = j.at("status").get<std::string>();
  if (status == "terminated") {
    out.status = ExpansionOutcome::Status::Terminated;
  } else if (status == "recurrent") {
    out.status = ExpansionOutcome::Status::Recurrent;
  } else if (status == "exhausted") {
    out.status = ExpansionOutcome::Status::Exhausted;
  } else {
    fail(Errc::SyntaxError, "unknown outcome status '" + status + "'");
  }
  out.budget = j.value("budget", 0);
  if (j.contains("terminated_index")) out.terminated_index = j["terminated_index"].get<int>();
  if (j.contains("earlier")) out.earlier = j["earlier"].get<int>();
  if (j.contains("later")) out.later = j["later"].get<int>();
  if (j.contains("witness")) out.witness = iso_from_json(j["witness"]);
  for (const auto& g : j.at("history")) out.history.push_back(group_from_json(g));
  return out;
}

}  // namespace tubular
