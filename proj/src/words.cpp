#include "tubular/words.hpp"

#include <algorithm>

namespace tubular {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

}  // namespace

Word normalize_word(const TubularGroup& G, Word w) {
  if (!G.single_vertex()) fail(Errc::NotSingleVertex, "words live in single-vertex groups");
  const Vertex& vtx = G.vertices()[0];
  Word out;
  for (Letter& l : w) {
    if (l.kind == Letter::Kind::Stable) {
      if (l.exp != 1 && l.exp != -1) {
        fail(Errc::MalformedWord, "stable letter exponent must be +-1");
      }
      bool known = std::any_of(G.edges().begin(), G.edges().end(),
                               [&](const Edge& e) { return e.id == l.id; });
      if (!known) fail(Errc::MalformedWord, "unknown edge id '" + l.id + "' in word");
      out.push_back(std::move(l));
      continue;
    }
    if (!contains(vtx.lattice, l.vec)) {
      fail(Errc::MalformedWord, vec_string(l.vec) + " is not in the vertex lattice");
    }
    l.id = vtx.id;
    if (!out.empty() && out.back().kind == Letter::Kind::VertexElement) {
      out.back().vec = out.back().vec + l.vec;
      if (out.back().vec.is_zero()) out.pop_back();
    } else if (!l.vec.is_zero()) {
      out.push_back(std::move(l));
    }
  }
  return out;
}

Word parse_word(const TubularGroup& G, const std::string& text) {
  if (!G.single_vertex()) fail(Errc::NotSingleVertex, "words live in single-vertex groups");
  Word w;
  size_t start = 0;
  std::vector<std::string> tokens;
  while (start <= text.size()) {
    size_t sep = text.find(';', start);
    if (sep == std::string::npos) sep = text.size();
    std::string tok = trim(text.substr(start, sep - start));
    if (!tok.empty()) tokens.push_back(tok);
    start = sep + 1;
  }
  for (const std::string& tok : tokens) {
    if (tok.front() == '(') {
      if (tok.back() != ')') fail(Errc::MalformedWord, "unterminated vector '" + tok + "'");
      std::string inner = tok.substr(1, tok.size() - 2);
      size_t comma = inner.find(',');
      if (comma == std::string::npos) {
        fail(Errc::MalformedWord, "vector needs two coordinates: '" + tok + "'");
      }
      auto x = parse_rat(trim(inner.substr(0, comma)));
      auto y = parse_rat(trim(inner.substr(comma + 1)));
      if (!x || !y) fail(Errc::MalformedWord, "bad coordinates in '" + tok + "'");
      w.push_back({Letter::Kind::VertexElement, "", Vec2{*x, *y}, 0});
      continue;
    }
    size_t caret = tok.find('^');
    std::string id = tok.substr(0, caret == std::string::npos ? tok.size() : caret);
    Int e = 1;
    if (caret != std::string::npos) {
      auto parsed = parse_int(tok.substr(caret + 1));
      if (!parsed) fail(Errc::MalformedWord, "bad exponent in '" + tok + "'");
      e = *parsed;
    }
    if (id.empty()) fail(Errc::MalformedWord, "empty edge id in '" + tok + "'");
    const int sign = e < 0 ? -1 : 1;
    for (Int i = 0; i < abs(e); ++i) {
      w.push_back({Letter::Kind::Stable, id, Vec2{}, sign});
    }
  }
  return normalize_word(G, std::move(w));
}

std::string word_to_string(const Word& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ";";
    if (w[i].kind == Letter::Kind::VertexElement) {
      out += "(" + rat_string(w[i].vec.x) + "," + rat_string(w[i].vec.y) + ")";
    } else {
      out += w[i].id + (w[i].exp == -1 ? "^-1" : "");
    }
  }
  return out;
}

Word word_inverse(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    Letter l = *it;
    if (l.kind == Letter::Kind::VertexElement) {
      l.vec = -l.vec;
    } else {
      l.exp = -l.exp;
    }
    out.push_back(std::move(l));
  }
  return out;
}

Word word_concat(const TubularGroup& G, const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return normalize_word(G, std::move(out));
}

namespace {

// Multiple c with h == c * x, when h lies in Zx.
std::optional<Int> line_coord(const Vec2& x, const Vec2& h) {
  if (h.is_zero()) return Int(0);
  auto c = coords(Lattice2::from_generators({x}), h);
  if (!c) return std::nullopt;
  return (*c)[0];
}

struct Pinch {
  size_t pos;     // opening stable letter
  size_t width;   // 2 (no middle element) or 3
  Int c;          // middle element = c * entered image
};

std::optional<Pinch> pinch_at(const TubularGroup& G, const Word& w, size_t i) {
  if (w[i].kind != Letter::Kind::Stable) return std::nullopt;
  const Edge& e = G.edge(w[i].id);
  const int s = w[i].exp;
  const Vec2& x = s == 1 ? e.u : e.v;
  if (i + 1 < w.size() && w[i + 1].kind == Letter::Kind::Stable) {
    if (w[i + 1].id == e.id && w[i + 1].exp == -s) return Pinch{i, 2, Int(0)};
    return std::nullopt;
  }
  if (i + 2 < w.size() && w[i + 1].kind == Letter::Kind::VertexElement &&
      w[i + 2].kind == Letter::Kind::Stable && w[i + 2].id == e.id && w[i + 2].exp == -s) {
    auto c = line_coord(x, w[i + 1].vec);
    if (c) return Pinch{i, 3, *c};
  }
  return std::nullopt;
}

Word apply(const TubularGroup& G, Word w, const Pinch& p) {
  const Edge& e = G.edge(w[p.pos].id);
  const Vec2& target = w[p.pos].exp == 1 ? e.v : e.u;
  Word out(w.begin(), w.begin() + p.pos);
  out.push_back({Letter::Kind::VertexElement, G.vertices()[0].id, Rat(p.c) * target, 0});
  out.insert(out.end(), w.begin() + p.pos + p.width, w.end());
  return normalize_word(G, std::move(out));
}

}  // namespace

std::vector<size_t> pinch_positions(const TubularGroup& G, const Word& w) {
  std::vector<size_t> out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (pinch_at(G, w, i)) out.push_back(i);
  }
  return out;
}

Word apply_pinch(const TubularGroup& G, const Word& w, size_t pos) {
  auto p = pinch_at(G, w, pos);
  if (!p) fail(Errc::InvalidParameters, "no pinch at position " + std::to_string(pos));
  return apply(G, w, *p);
}

Word britton_reduce(const TubularGroup& G, const Word& w) {
  ensure_valid(G);
  Word cur = normalize_word(G, w);
  for (;;) {
    std::optional<Pinch> p;
    for (size_t i = 0; i < cur.size() && !p; ++i) p = pinch_at(G, cur, i);
    if (!p) return cur;
    cur = apply(G, cur, *p);
  }
}

bool is_trivial_word(const TubularGroup& G, const Word& w) {
  return britton_reduce(G, w).empty();
}

namespace {

// 2x2 Smith normal form with the right transform tracked: returns (d1, d2, V)
// with U*C*V = diag(d1, d2), d1 | d2, both nonnegative. Quotient classes of a
// row vector x are read off as x*V mod (d1, d2).
struct Snf2 {
  Int d1, d2;
  std::array<std::array<Int, 2>, 2> V;
};

Snf2 snf2(std::array<std::array<Int, 2>, 2> A) {
  std::array<std::array<Int, 2>, 2> V{{{1, 0}, {0, 1}}};
  auto colop = [&](const Int& s, const Int& t, const Int& a, const Int& b) {
    // (col0, col1) <- (s*col0 + t*col1, a*col0 + b*col1), applied to A and V
    for (auto* M : {&A, &V}) {
      for (int r = 0; r < 2; ++r) {
        Int c0 = (*M)[r][0], c1 = (*M)[r][1];
        (*M)[r][0] = s * c0 + t * c1;
        (*M)[r][1] = a * c0 + b * c1;
      }
    }
  };
  // Shear when the pivot already divides the target (leaves the pivot and the
  // opposite off-diagonal alone); full gcd step otherwise, which strictly
  // shrinks |pivot|. That combination terminates.
  for (;;) {
    if (A[0][0] == 0 && A[0][1] != 0) colop(0, 1, 1, 0);
    if (A[0][0] == 0 && A[1][0] != 0) std::swap(A[0], A[1]);
    if (A[0][1] == 0 && A[1][0] == 0) {
      if (A[0][0] != 0 && A[1][1] % A[0][0] != 0) {
        colop(1, 1, 0, 1);  // col0 += col1, re-enter with a nonzero A[1][0]
        continue;
      }
      break;
    }
    if (A[0][1] != 0) {
      if (A[0][1] % A[0][0] == 0) {
        colop(1, 0, -(A[0][1] / A[0][0]), 1);
      } else {
        const ExGcd e = exgcd(A[0][0], A[0][1]);
        colop(e.s, e.t, A[0][1] / e.g, -A[0][0] / e.g);
      }
    }
    if (A[1][0] != 0) {
      if (A[1][0] % A[0][0] == 0) {
        const Int q = A[1][0] / A[0][0];
        A[1][0] = 0;
        A[1][1] -= q * A[0][1];
      } else {
        const ExGcd e = exgcd(A[0][0], A[1][0]);
        const Int r00 = A[0][0], r01 = A[0][1], r10 = A[1][0], r11 = A[1][1];
        A[0][0] = e.g;
        A[0][1] = e.s * r01 + e.t * r11;
        A[1][0] = 0;
        A[1][1] = (r10 / e.g) * r01 - (r00 / e.g) * r11;
      }
    }
  }
  if (A[0][0] < 0) colop(-1, 0, 0, 1);
  if (A[1][1] < 0) colop(1, 0, 0, -1);
  return {A[0][0], A[1][1], V};
}

std::array<Int, 2> adapted_mod(const std::array<Int, 2>& x, const Snf2& s) {
  Int y0 = x[0] * s.V[0][0] + x[1] * s.V[1][0];
  Int y1 = x[0] * s.V[0][1] + x[1] * s.V[1][1];
  return {s.d1 == 0 ? y0 : floor_mod(y0, s.d1), s.d2 == 0 ? y1 : floor_mod(y1, s.d2)};
}

Int order_in(const std::array<Int, 2>& y, const Int& d1, const Int& d2) {
  Int o1 = d1 / gcd(d1, y[0]);
  Int o2 = d2 / gcd(d2, y[1]);
  return lcm(o1, o2);
}

}  // namespace

FiniteGOG local_quotient_general(const TubularGroup& G, const TubularGroup& Gsub) {
  ensure_valid(G);
  ensure_valid(Gsub);
  if (G.vertices().size() != Gsub.vertices().size() || G.edges().size() != Gsub.edges().size()) {
    fail(Errc::InvalidParameters, "quotient data must share the group's graph");
  }
  for (size_t i = 0; i < G.vertices().size(); ++i) {
    if (G.vertices()[i].id != Gsub.vertices()[i].id) {
      fail(Errc::InvalidParameters, "vertex ids differ between group and quotient data");
    }
    if (!contains_lattice(G.vertices()[i].lattice, Gsub.vertices()[i].lattice)) {
      fail(Errc::InvalidParameters, "sublattice at '" + G.vertices()[i].id +
                                        "' is not contained in the vertex lattice");
    }
  }
  FiniteGOG q;
  std::map<std::string, Snf2> adapted;
  for (const Vertex& v : G.vertices()) {
    const Lattice2& sub = Gsub.lattice(v.id);
    std::array<std::array<Int, 2>, 2> C;
    for (int r = 0; r < 2; ++r) C[r] = *coords(v.lattice, sub.basis()[r]);
    Snf2 s = snf2(C);
    adapted[v.id] = s;
    q.vertices.push_back({v.id, {s.d1, s.d2}});
  }
  for (size_t i = 0; i < G.edges().size(); ++i) {
    const Edge& e = G.edges()[i];
    const Edge& f = Gsub.edges()[i];
    if (e.id != f.id || e.minus != f.minus || e.plus != f.plus) {
      fail(Errc::InvalidParameters, "edge '" + e.id + "' differs between group and quotient data");
    }
    auto ru = parallel_ratio(f.u, e.u);
    if (!ru || !is_integer(*ru) || *ru < 1 || f.v != *ru * e.v) {
      fail(Errc::InvalidParameters,
           "edge '" + e.id + "' images are not a common positive integer multiple");
    }
    const Int c = num(*ru);
    for (auto [sub, img, what] : {std::tuple<const Lattice2*, const Vec2*, const char*>{
                                      &Gsub.lattice(e.minus), &e.u, "u"},
                                  {&Gsub.lattice(e.plus), &e.v, "v"}}) {
      Rat ms = *minimal_scale(*sub, *img);
      if (num(ms) != c) {
        fail(Errc::ConditionViolated,
             std::string("edge '") + e.id + "' image " + what + ": its line meets the sublattice in " +
                 int_string(num(ms)) + "-fold multiples, but the edge is scaled by " + int_string(c));
      }
    }
    const Snf2& sm = adapted.at(e.minus);
    const Snf2& sp = adapted.at(e.plus);
    std::array<Int, 2> ui = adapted_mod(*coords(G.lattice(e.minus), e.u), sm);
    std::array<Int, 2> vi = adapted_mod(*coords(G.lattice(e.plus), e.v), sp);
    if (order_in(ui, sm.d1, sm.d2) != c || order_in(vi, sp.d1, sp.d2) != c) {
      throw std::logic_error("attaching image order disagrees with the edge scale");
    }
    q.edges.push_back({e.id, c, ui, vi});
  }
  return q;
}

FiniteGOG local_quotient(const TubularGroup& G, const Int& n) {
  ensure_valid(G);
  if (n < 2) fail(Errc::InvalidParameters, "quotient modulus must be at least 2");
  if (!is_primitive(G)) {
    fail(Errc::NotPrimitive, "the scaling quotient family needs a primitive group");
  }
  return local_quotient_general(G, scale(G, Rat(n)));
}

WitnessRecord witness_modulus(const TubularGroup& G, const Word& w) {
  ensure_valid(G);
  if (!G.single_vertex()) fail(Errc::NotSingleVertex, "witness needs a single-vertex group");
  if (!is_primitive(G)) fail(Errc::NotPrimitive, "witness needs a primitive group");
  WitnessRecord rec;
  rec.reduced = britton_reduce(G, w);
  if (rec.reduced.empty()) fail(Errc::TrivialWord, "the word reduces to the identity");
  const Lattice2& L = G.vertices()[0].lattice;
  bool has_stable = std::any_of(rec.reduced.begin(), rec.reduced.end(), [](const Letter& l) {
    return l.kind == Letter::Kind::Stable;
  });
  if (!has_stable) {
    rec.elliptic = true;
    rec.elliptic_coords = *coords(L, rec.reduced[0].vec);
    rec.n = std::max(abs(rec.elliptic_coords[0]), abs(rec.elliptic_coords[1])) + 1;
    return rec;
  }
  // A reduced hyperbolic word dies in a quotient only if some t^s ; h ; t^-s
  // becomes pinchable mod n, i.e. the component of h across the entered line
  // vanishes. Taking n past every such component rules that out.
  Int max_across = 0;
  for (size_t i = 0; i + 2 < rec.reduced.size(); ++i) {
    const Letter& a = rec.reduced[i];
    const Letter& m = rec.reduced[i + 1];
    const Letter& b = rec.reduced[i + 2];
    if (a.kind != Letter::Kind::Stable || m.kind != Letter::Kind::VertexElement ||
        b.kind != Letter::Kind::Stable) {
      continue;
    }
    if (a.id != b.id || a.exp != -b.exp) continue;
    const Edge& e = G.edge(a.id);
    const Vec2& x = a.exp == 1 ? e.u : e.v;
    const Vec2 z = complement_in(L, x);
    const Rat D = cross(x, z);
    const Rat along = cross(m.vec, z) / D;
    const Rat across = cross(x, m.vec) / D;
    if (!is_integer(along) || !is_integer(across)) {
      throw std::logic_error("backtrack coordinates are not integral");
    }
    if (across == 0) throw std::logic_error("reduced word has a pinchable backtrack");
    rec.backtracks.push_back({i, e.id, a.exp, m.vec, num(along), num(across)});
    max_across = std::max(max_across, Int(abs(num(across))));
  }
  rec.n = std::max(Int(2), Int(max_across + 1));
  return rec;
}

json finite_gog_to_json(const FiniteGOG& q) {
  json j;
  j["vertices"] = json::array();
  for (const auto& v : q.vertices) {
    j["vertices"].push_back(
        {{"id", v.id},
         {"factors", json::array({int_to_json(v.factors[0]), int_to_json(v.factors[1])})}});
  }
  j["edges"] = json::array();
  for (const auto& e : q.edges) {
    j["edges"].push_back(
        {{"id", e.id},
         {"order", int_to_json(e.order)},
         {"u_image", json::array({int_to_json(e.u_image[0]), int_to_json(e.u_image[1])})},
         {"v_image", json::array({int_to_json(e.v_image[0]), int_to_json(e.v_image[1])})}});
  }
  return j;
}

json witness_to_json(const WitnessRecord& w) {
  json j;
  j["n"] = int_to_json(w.n);
  j["reduced"] = word_to_string(w.reduced);
  j["elliptic"] = w.elliptic;
  if (w.elliptic) {
    j["coords"] = json::array(
        {int_to_json(w.elliptic_coords[0]), int_to_json(w.elliptic_coords[1])});
  } else {
    j["backtracks"] = json::array();
    for (const auto& b : w.backtracks) {
      j["backtracks"].push_back({{"position", b.position},
                                 {"edge", b.edge},
                                 {"exponent", b.exp},
                                 {"vector", vec_to_json(b.h)},
                                 {"along", int_to_json(b.along)},
                                 {"across", int_to_json(b.across)}});
    }
  }
  return j;
}

}  // namespace tubular
