#pragma once

#include <stdexcept>
#include <string>

namespace tubular {

// Every failure raised by the library carries one of these codes so callers
// (CLI, bindings, tests) can react without string matching.
enum class Errc {
  ZeroVector,
  NotInLattice,
  NotSublattice,
  ZeroScalar,
  InvalidParameters,
  EmptySelection,
  DisconnectedSubgraph,
  SyntaxError,
  SemanticError,
  MissingEdgeEntry,
  NotSingleVertex,
  TooFewEdges,
  RankDeficientEdge,
  MalformedWord,
  NotPrimitive,
  TrivialWord,
  ConditionViolated,
  InvalidCertificate,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace tubular
