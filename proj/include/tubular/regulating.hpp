#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tubular/group.hpp"
#include "tubular/json_io.hpp"

namespace tubular {

// Positive integer scale per edge, keyed by edge id. Entries are used exactly
// as given; normalized() divides out the gcd (k and n*k regulate the same
// groups, so certificates carry the normalized form).
struct EdgeTuple {
  std::map<std::string, Int> k;

  EdgeTuple normalized() const;

  bool operator==(const EdgeTuple&) const = default;
};

json tuple_to_json(const EdgeTuple& k);
EdgeTuple tuple_from_json(const json& j);

// G_v^(k): per vertex, the sublattice generated by the k-scaled images of the
// incident edge ends. Throws MissingEdgeEntry (edge without an entry) and
// InvalidParameters (entry < 1 or unknown edge id). Pre: G valid.
std::map<std::string, Lattice2> vertex_sublattices(const TubularGroup& G, const EdgeTuple& k);

struct TupleCertificate {
  struct Witness {
    std::string edge;
    std::string side;           // "minus" or "plus"
    std::array<Int, 2> coords;  // of k_e * image in the sublattice on that side

    bool operator==(const Witness&) const = default;
  };

  EdgeTuple tuple;
  std::map<std::string, Lattice2> sublattices;
  std::vector<Witness> witnesses;  // gcd of every coordinate pair is 1

  bool operator==(const TupleCertificate&) const = default;
};

json tuple_certificate_to_json(const TupleCertificate& c);
TupleCertificate tuple_certificate_from_json(const json& j);

// k is regulating when every k_e-scaled image is primitive in the vertex
// sublattice it lands in. Returns the checkable certificate, or nullopt.
std::optional<TupleCertificate> is_regulating(const TubularGroup& G, const EdgeTuple& k);

struct TSequence {
  std::vector<std::string> order;  // edge ids in document order
  std::vector<Rat> t;              // t_i = minimal_scale(span(u_{i+1}, v_{i+1}), u_i), cyclic
  Rat product;
};

// Pre: single vertex, >= 2 edges, every edge span of rank 2. Throws
// NotSingleVertex / TooFewEdges / RankDeficientEdge.
TSequence t_sequence(const TubularGroup& G);

struct NoTupleReason {
  enum class Kind { CommensurableDistinct, NonIntegerProduct, SearchExhausted } kind;
  // CommensurableDistinct: one edge has parallel images with ratio != +-1,
  // which already kills every tuple.
  std::string edge;
  Rat ratio;
  // The other kinds carry the t-sequence of the surviving edges.
  std::optional<TSequence> tseq;
  Int candidates_tried = 0;  // SearchExhausted: ordered factorizations tested
};

struct RegulatingDecision {
  bool regulating = false;
  std::optional<TupleCertificate> cert;  // when regulating
  std::optional<NoTupleReason> reason;   // otherwise
};

json regulating_decision_to_json(const RegulatingDecision& d);

// Complete decision procedure for single-vertex groups: survivors (edges with
// independent images) are decided through the t-sequence parametrization of
// candidate tuples, equal-span edges are spliced back in afterwards. Pre: G
// valid, single vertex (NotSingleVertex otherwise).
RegulatingDecision single_vertex_decide(const TubularGroup& G);

// The presentation determined by a regulating tuple: images scaled by k_e,
// vertex lattices replaced by G_v^(k), extended back to rank 2 inside G_v when
// a sublattice is degenerate. The result is primitive and its lattices are
// contained in G's. Throws InvalidCertificate when cert does not verify.
TubularGroup primitive_domain(const TubularGroup& G, const TupleCertificate& cert);

}  // namespace tubular
