#pragma once

#include "tubular/expansion.hpp"
#include "tubular/regulating.hpp"

namespace tubular {

// Residual finiteness decision with a machine-checkable certificate. Order:
// full expansion sequence; on exhaustion, expansion of every connected proper
// nonempty edge subset (ascending bitmask order, first recurrence wins); for
// single-vertex groups the complete regulating-tuple decision settles the
// rest; otherwise Unknown.
struct Verdict {
  enum class Kind { RF, NotRF, Unknown } kind;
  enum class Cert {
    PrimitiveTarget,       // RF: expansion reached a primitive presentation
    Recurrence,            // NotRF: a term rigidly isomorphic to an earlier one
    SubtubularRecurrence,  // NotRF: recurrence inside an edge-subset subgroup
    Regulating,            // RF: regulating tuple certificate
    NoTuple,               // NotRF: provably no regulating tuple
    BudgetExhausted,       // Unknown
  } cert;

  struct SubtubularTry {
    std::vector<std::string> edges;
    ExpansionOutcome::Status status;
    int history_length;
  };

  TubularGroup group;
  std::optional<ExpansionOutcome> outcome;      // expansion-based certificates
  std::vector<std::string> subtubular_edges;    // SubtubularRecurrence
  std::optional<TupleCertificate> tuple_cert;   // Regulating
  std::optional<NoTupleReason> no_tuple;        // NoTuple
  std::vector<SubtubularTry> subtubular_tried;  // BudgetExhausted
};

Verdict decide(const TubularGroup& G, int budget = 64);

json verdict_to_json(const Verdict& v);

// All connected, proper, nonempty edge subsets in ascending bitmask order over
// document edge positions.
std::vector<std::vector<std::string>> proper_connected_edge_subsets(const TubularGroup& G);

// Re-verifies a serialized verdict from its own content: reparses the group,
// replays expansion chains, verifies witnesses and tuple certificates, and
// recomputes impossibility reasons. Everything needed is inside the document.
struct RecheckReport {
  bool pass = false;
  std::string verdict;  // as recorded in the document
  std::string detail;   // first failure; empty when passing
};
RecheckReport recheck_verdict(const json& doc);

}  // namespace tubular
