#pragma once

#include <array>
#include <string>
#include <vector>

#include "tubular/group.hpp"
#include "tubular/json_io.hpp"

namespace tubular {

struct Letter {
  enum class Kind { VertexElement, Stable } kind;
  std::string id;  // vertex id / edge id
  Vec2 vec;        // VertexElement: element of the vertex lattice
  int exp = 0;     // Stable: +1 or -1

  bool operator==(const Letter&) const = default;
};

// Word in a single-vertex tubular group, as a letter sequence. A normalized
// word has no zero vertex elements and no two adjacent vertex elements.
using Word = std::vector<Letter>;

// Compact syntax, tokens separated by ';': "(x,y)" is a vertex element with
// rational coordinates, anything else an edge id with an optional integer
// exponent ("t", "t^-1", "s^2"; exponents expand to repeated letters).
// The empty string is the empty word. Parsed words come back normalized.
// Throws NotSingleVertex / MalformedWord.
Word parse_word(const TubularGroup& G, const std::string& text);
std::string word_to_string(const Word& w);

// Merges adjacent vertex elements, drops zeros, and validates letters: edge
// ids must exist, exponents be +-1, vectors lie in the vertex lattice.
Word normalize_word(const TubularGroup& G, Word w);

Word word_inverse(const Word& w);
Word word_concat(const TubularGroup& G, const Word& a, const Word& b);

// A pinch is t_e^s ; h ; t_e^-s with h a multiple of the image entered first
// (u_e for s = +1, v_e for s = -1; h may be absent). It rewrites to the
// conjugate multiple of the other image. britton_reduce applies leftmost
// pinches to a fixed point; a word is trivial iff it reduces to the empty
// word. Pre: G valid, single vertex.
Word britton_reduce(const TubularGroup& G, const Word& w);
bool is_trivial_word(const TubularGroup& G, const Word& w);

// The pinchable positions of a normalized word, and one pinch application.
// Exposed so reduction can be driven in arbitrary order.
std::vector<size_t> pinch_positions(const TubularGroup& G, const Word& w);
Word apply_pinch(const TubularGroup& G, const Word& w, size_t pos);

// Finite graph of groups presented by invariant factors and attaching images.
struct FiniteGOG {
  struct QVertex {
    std::string id;
    std::array<Int, 2> factors;  // (d1, d2) with d1 | d2
  };
  struct QEdge {
    std::string id;
    Int order;                   // order of the edge group image; equals the
    std::array<Int, 2> u_image;  // order of both attaching images
    std::array<Int, 2> v_image;
  };
  std::vector<QVertex> vertices;
  std::vector<QEdge> edges;
};

json finite_gog_to_json(const FiniteGOG& q);

// Quotient of a primitive G by n-scaling every vertex lattice: vertices become
// (Z/n)^2, edge groups Z/n, and primitivity keeps every attaching map
// injective. Throws NotPrimitive / InvalidParameters (n < 2).
FiniteGOG local_quotient(const TubularGroup& G, const Int& n);

// General form: Gsub shares G's graph, has finite-index vertex sublattices and
// c_e-scaled edge images. Each image's line must meet the sublattice exactly
// in the multiples of the scaled image (ConditionViolated otherwise); that is
// what makes the induced attaching maps injective. Vertex data comes out in
// Smith-adapted coordinates.
FiniteGOG local_quotient_general(const TubularGroup& G, const TubularGroup& Gsub);

// Separating modulus for a nontrivial word of a primitive single-vertex group.
// Elliptic reduced words survive mod n for n past their coordinates; otherwise
// every potential backtrack t_e^s ; h ; t_e^-s persists as long as the
// component of h across the entered line does not vanish mod n.
struct WitnessRecord {
  Int n;
  Word reduced;
  bool elliptic = false;
  std::array<Int, 2> elliptic_coords{0, 0};
  struct Backtrack {
    size_t position;  // index of the opening stable letter in `reduced`
    std::string edge;
    int exp;
    Vec2 h;
    Int along;   // h = along * x + across * z for the entered image x and its
    Int across;  // canonical complement z; across != 0 in a reduced word
  };
  std::vector<Backtrack> backtracks;
};

// Throws TrivialWord when w reduces to the identity, NotPrimitive when the
// quotient family is unavailable. Pre: G valid, single vertex.
WitnessRecord witness_modulus(const TubularGroup& G, const Word& w);

json witness_to_json(const WitnessRecord& w);

}  // namespace tubular
