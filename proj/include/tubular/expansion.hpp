#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tubular/group.hpp"
#include "tubular/json_io.hpp"
#include "tubular/matrix.hpp"

namespace tubular {

struct EdgeDegrees {
  std::string edge;
  Int d_minus, d_plus, d;  // torsion degrees of u, v and their lcm

  bool operator==(const EdgeDegrees&) const = default;
};

// Per-edge expansion degrees, in document order. Pre: G valid.
std::vector<EdgeDegrees> edge_degrees(const TubularGroup& G);

// One expansion step: each edge image is divided by its degree d_e and every
// vertex lattice is closed up to contain the new images. Returns the expanded
// group and whether the step was trivial (all degrees 1), in which case the
// output equals the input. Pre: G valid; validity is preserved.
std::pair<TubularGroup, bool> expand(const TubularGroup& G);

// Isomorphism of tubular group presentations that is linear on each vertex
// plane: vertex bijection with a matrix per source vertex, edge bijection with
// an optional orientation reversal and a sign per source edge.
struct RigidIso {
  std::map<std::string, std::string> vertex_map;
  std::map<std::string, Mat2> matrices;    // by source vertex id
  std::map<std::string, std::string> edge_map;
  std::map<std::string, bool> reversed;    // by source edge id
  std::map<std::string, int> signs;        // +1 or -1, by source edge id
};

// Checks every defining condition of `iso` as a rigid isomorphism A -> B:
// bijectivity, incidence, M_v(L_v) = L'_{sigma(v)}, and the edge image
// equations with the recorded reversal and sign.
bool verify_rigid_iso(const TubularGroup& A, const TubularGroup& B, const RigidIso& iso);

struct IsoSearchResult {
  enum class Kind { Found, RuledOut, NotFound } kind;
  std::optional<RigidIso> iso;       // when Found
  std::string obstruction;           // when RuledOut: which invariant separated A from B
};

// Searches for a rigid isomorphism A -> B. Invariant prefilters (graph shape,
// covolume-normalized pairwise intersection numbers per vertex) can rule the
// pair out with a checkable obstruction. For single-vertex groups the search
// is exact: Found or RuledOut/NotFound is a definitive answer. For
// multi-vertex groups only per-vertex scalar matrices are tried, so NotFound
// is inconclusive there.
IsoSearchResult detect_rigid_iso(const TubularGroup& A, const TubularGroup& B);

struct ExpansionOutcome {
  enum class Status { Terminated, Recurrent, Exhausted };

  std::vector<TubularGroup> history;  // history[0] is the input
  Status status;
  int budget = 0;
  // Terminated: index of the primitive term (== history.size() - 1).
  int terminated_index = -1;
  // Recurrent: witness is a rigid isomorphism history[later] -> history[earlier].
  int earlier = -1, later = -1;
  std::optional<RigidIso> witness;
};

// Runs expansion until a term is primitive (Terminated), a term is rigidly
// isomorphic to an earlier one (Recurrent), or `budget` nontrivial steps have
// produced no verdict (Exhausted). Pre: G valid.
ExpansionOutcome run_sequence(const TubularGroup& G, int budget = 64);

// Sum over edges of [<u_e scaled back to history[0]> : <u_e>], a proven upper
// bound for the number of nontrivial steps of a terminating sequence. Only
// meaningful for Terminated outcomes.
Int length_bound(const ExpansionOutcome& out);

json iso_to_json(const RigidIso& iso);
RigidIso iso_from_json(const json& j);
json outcome_to_json(const ExpansionOutcome& out);
ExpansionOutcome outcome_from_json(const json& j);

}  // namespace tubular
