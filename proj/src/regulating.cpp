#include "tubular/regulating.hpp"

#include <algorithm>

namespace tubular {

EdgeTuple EdgeTuple::normalized() const {
  Int g = 0;
  for (const auto& [id, v] : k) g = gcd(g, v);
  if (g <= 1) return *this;
  EdgeTuple out;
  for (const auto& [id, v] : k) out.k[id] = v / g;
  return out;
}

json tuple_to_json(const EdgeTuple& k) {
  json j = json::object();
  for (const auto& [id, v] : k.k) j[id] = int_to_json(v);
  return j;
}

EdgeTuple tuple_from_json(const json& j) {
  if (!j.is_object()) fail(Errc::SyntaxError, "edge tuple must be a JSON object");
  EdgeTuple k;
  for (const auto& [id, v] : j.items()) k.k[id] = int_from_json(v);
  return k;
}

std::map<std::string, Lattice2> vertex_sublattices(const TubularGroup& G, const EdgeTuple& k) {
  ensure_valid(G);
  for (const auto& [id, v] : k.k) {
    bool known = std::any_of(G.edges().begin(), G.edges().end(),
                             [&](const Edge& e) { return e.id == id; });
    if (!known) fail(Errc::InvalidParameters, "tuple entry for unknown edge '" + id + "'");
    if (v < 1) fail(Errc::InvalidParameters, "tuple entry for '" + id + "' must be >= 1");
  }
  std::map<std::string, std::vector<Vec2>> gens;
  for (const Vertex& v : G.vertices()) gens[v.id];
  for (const Edge& e : G.edges()) {
    auto it = k.k.find(e.id);
    if (it == k.k.end()) fail(Errc::MissingEdgeEntry, "no tuple entry for edge '" + e.id + "'");
    const Rat s(it->second);
    gens[e.minus].push_back(s * e.u);
    gens[e.plus].push_back(s * e.v);
  }
  std::map<std::string, Lattice2> out;
  for (const auto& [id, g] : gens) out[id] = Lattice2::from_generators(g);
  return out;
}

std::optional<TupleCertificate> is_regulating(const TubularGroup& G, const EdgeTuple& k) {
  TupleCertificate cert;
  cert.tuple = k;
  cert.sublattices = vertex_sublattices(G, k);
  for (const Edge& e : G.edges()) {
    const Rat s(k.k.at(e.id));
    for (auto [side, vid, vec] : {std::tuple<const char*, const std::string*, Vec2>{
                                      "minus", &e.minus, s * e.u},
                                  {"plus", &e.plus, s * e.v}}) {
      auto c = coords(cert.sublattices.at(*vid), vec);
      // The scaled image is a generator of that sublattice, so it is in it.
      if (gcd((*c)[0], (*c)[1]) != 1) return std::nullopt;
      cert.witnesses.push_back({e.id, side, *c});
    }
  }
  return cert;
}

TSequence t_sequence(const TubularGroup& G) {
  if (!G.single_vertex()) fail(Errc::NotSingleVertex, "t-sequence needs a single-vertex group");
  const auto& es = G.edges();
  if (es.size() < 2) fail(Errc::TooFewEdges, "t-sequence needs at least two edges");
  std::vector<Lattice2> spans;
  for (const Edge& e : es) {
    Lattice2 S = hnf({e.u, e.v});
    if (S.rank() != 2) {
      fail(Errc::RankDeficientEdge, "edge '" + e.id + "' has parallel images");
    }
    spans.push_back(std::move(S));
  }
  TSequence out;
  out.product = 1;
  for (size_t i = 0; i < es.size(); ++i) {
    out.order.push_back(es[i].id);
    Rat ti = *minimal_scale(spans[(i + 1) % es.size()], es[i].u);
    out.product *= ti;
    out.t.push_back(std::move(ti));
  }
  return out;
}

namespace {

// All n-tuples of positive integers with the given product, in lexicographic
// order (divisors ascending at each position).
void ordered_factorizations(const Int& T, int n, std::vector<Int>& cur,
                            std::vector<std::vector<Int>>& out) {
  if (n == 1) {
    cur.push_back(T);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (Int d = 1; d <= T; ++d) {
    if (T % d != 0) continue;
    cur.push_back(d);
    ordered_factorizations(T / d, n - 1, cur, out);
    cur.pop_back();
  }
}

json tseq_to_json(const TSequence& ts) {
  json j;
  j["edge_order"] = ts.order;
  j["t_values"] = json::array();
  for (const Rat& t : ts.t) j["t_values"].push_back(rat_to_json(t));
  j["product"] = rat_to_json(ts.product);
  return j;
}

}  // namespace

RegulatingDecision single_vertex_decide(const TubularGroup& G) {
  ensure_valid(G);
  if (!G.single_vertex()) {
    fail(Errc::NotSingleVertex, "the complete tuple decision needs a single-vertex group");
  }
  const Vertex& vtx = G.vertices()[0];

  // An edge whose images are parallel with ratio other than +-1 blocks every
  // tuple: both scaled images generate commensurable but distinct subgroups of
  // any vertex sublattice, so they cannot both be primitive in it.
  for (const Edge& e : G.edges()) {
    auto r = parallel_ratio(e.u, e.v);
    if (r && *r != 1 && *r != -1) {
      RegulatingDecision d;
      d.reason = NoTupleReason{NoTupleReason::Kind::CommensurableDistinct, e.id, *r, {}, 0};
      return d;
    }
  }

  std::vector<Edge> survivors, discarded;
  for (const Edge& e : G.edges()) {
    (cross(e.u, e.v) != 0 ? survivors : discarded).push_back(e);
  }

  EdgeTuple base;
  std::optional<TSequence> tseq;
  if (survivors.size() == 1) {
    base.k[survivors[0].id] = 1;
  } else if (survivors.size() >= 2) {
    TubularGroup S({vtx}, survivors);
    tseq = t_sequence(S);
    if (!is_integer(tseq->product)) {
      RegulatingDecision d;
      d.reason = NoTupleReason{NoTupleReason::Kind::NonIntegerProduct, "", 0, tseq, 0};
      return d;
    }
    // Regulating tuples for the survivors are exactly k_i = m * w_i with
    // w_1 = 1, w_{i+1} = w_i * z_i / t_i for an ordered factorization z of the
    // t-product; the valid m for fixed z form a subgroup of Z, so only the
    // minimal one needs testing.
    const Int T = num(tseq->product);
    std::vector<std::vector<Int>> zs;
    std::vector<Int> scratch;
    ordered_factorizations(T, static_cast<int>(survivors.size()), scratch, zs);
    Int tried = 0;
    bool ok = false;
    for (const auto& z : zs) {
      std::vector<Rat> w{Rat(1)};
      for (size_t i = 0; i + 1 < survivors.size(); ++i) {
        w.push_back(w.back() * Rat(z[i]) / tseq->t[i]);
      }
      Int m = 1;
      for (const Rat& wi : w) m = lcm(m, den(wi));
      EdgeTuple cand;
      for (size_t i = 0; i < survivors.size(); ++i) {
        cand.k[survivors[i].id] = num(Rat(m) * w[i]);
      }
      ++tried;
      if (is_regulating(S, cand)) {
        base = cand;
        ok = true;
        break;
      }
    }
    if (!ok) {
      RegulatingDecision d;
      d.reason = NoTupleReason{NoTupleReason::Kind::SearchExhausted, "", 0, tseq, tried};
      return d;
    }
  }

  // Splice the equal-span edges back, most recently discarded first. When the
  // line of u_e already meets the current sublattice, k_e*u_e must generate
  // that intersection: with q = minimal_scale the pair (m, k_e) = (den q, num q)
  // rescales the current tuple and lands k_e*u_e exactly on the primitive
  // generator of the line. A disjoint line joins freely with k_e = 1.
  EdgeTuple cur = base;
  std::vector<const Edge*> have;
  for (const Edge& e : survivors) have.push_back(&e);
  for (auto it = discarded.rbegin(); it != discarded.rend(); ++it) {
    std::vector<Vec2> gens;
    for (const Edge* f : have) {
      const Rat s(cur.k.at(f->id));
      gens.push_back(s * f->u);
      gens.push_back(s * f->v);
    }
    Lattice2 L = Lattice2::from_generators(gens);
    std::optional<Rat> q = L.rank() == 0 ? std::nullopt : minimal_scale(L, it->u);
    if (q) {
      for (auto& [id, v] : cur.k) v *= den(*q);
      cur.k[it->id] = num(*q);
    } else {
      cur.k[it->id] = 1;
    }
    have.push_back(&*it);
  }
  cur = cur.normalized();

  RegulatingDecision d;
  d.regulating = true;
  d.cert = is_regulating(G, cur);
  if (!d.cert) {
    throw std::logic_error("reassembled tuple failed the regulating check");
  }
  return d;
}

json regulating_decision_to_json(const RegulatingDecision& d) {
  json j;
  j["regulating"] = d.regulating;
  if (d.cert) j["certificate"] = tuple_certificate_to_json(*d.cert);
  if (d.reason) {
    json r;
    switch (d.reason->kind) {
      case NoTupleReason::Kind::CommensurableDistinct:
        r["kind"] = "commensurable_distinct";
        r["edge"] = d.reason->edge;
        r["ratio"] = rat_to_json(d.reason->ratio);
        break;
      case NoTupleReason::Kind::NonIntegerProduct:
        r["kind"] = "non_integer_product";
        break;
      case NoTupleReason::Kind::SearchExhausted:
        r["kind"] = "search_exhausted";
        r["candidates_tried"] = int_to_json(d.reason->candidates_tried);
        break;
    }
    if (d.reason->tseq) r["t_sequence"] = tseq_to_json(*d.reason->tseq);
    j["reason"] = r;
  }
  return j;
}

json tuple_certificate_to_json(const TupleCertificate& c) {
  json j;
  j["tuple"] = tuple_to_json(c.tuple);
  j["sublattices"] = json::object();
  for (const auto& [id, L] : c.sublattices) j["sublattices"][id] = lattice_to_json(L);
  j["witnesses"] = json::array();
  for (const auto& w : c.witnesses) {
    j["witnesses"].push_back({{"edge", w.edge},
                              {"side", w.side},
                              {"coords", json::array({int_to_json(w.coords[0]),
                                                      int_to_json(w.coords[1])})}});
  }
  return j;
}

TupleCertificate tuple_certificate_from_json(const json& j) {
  TupleCertificate c;
  c.tuple = tuple_from_json(j.at("tuple"));
  for (const auto& [id, L] : j.at("sublattices").items()) {
    c.sublattices[id] = lattice_from_json(L);
  }
  for (const auto& wj : j.at("witnesses")) {
    TupleCertificate::Witness w;
    w.edge = wj.at("edge").get<std::string>();
    w.side = wj.at("side").get<std::string>();
    w.coords = {int_from_json(wj.at("coords")[0]), int_from_json(wj.at("coords")[1])};
    c.witnesses.push_back(std::move(w));
  }
  return c;
}

TubularGroup primitive_domain(const TubularGroup& G, const TupleCertificate& cert) {
  ensure_valid(G);
  std::optional<TupleCertificate> check;
  try {
    check = is_regulating(G, cert.tuple);
  } catch (const Error& e) {
    fail(Errc::InvalidCertificate, std::string("tuple does not fit the group: ") + e.what());
  }
  if (!check) fail(Errc::InvalidCertificate, "tuple is not regulating for this group");
  if (!(*check == cert)) {
    fail(Errc::InvalidCertificate, "certificate does not match the recomputed one");
  }
  std::vector<Vertex> vs;
  for (const Vertex& v : G.vertices()) {
    const Lattice2& L = cert.sublattices.at(v.id);
    if (L.rank() == 2) {
      vs.push_back({v.id, L});
    } else if (L.rank() == 1) {
      // Extend by the first canonical basis vector of G_v independent of the line.
      const Vec2& w = L.basis()[0];
      const Vec2& ext = cross(v.lattice.basis()[0], w) != 0 ? v.lattice.basis()[0]
                                                            : v.lattice.basis()[1];
      vs.push_back({v.id, hnf({w, ext})});
    } else {
      vs.push_back(v);  // no incident edges
    }
  }
  std::vector<Edge> es;
  for (const Edge& e : G.edges()) {
    const Rat s(cert.tuple.k.at(e.id));
    es.push_back({e.id, e.minus, e.plus, s * e.u, s * e.v});
  }
  return TubularGroup(std::move(vs), std::move(es));
}

}  // namespace tubular
