#include "doctest.h"

#include <functional>

#include "support/fixtures.hpp"
#include "tubular/decide.hpp"

using namespace tubular;
using fixtures::vec;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a tubular::Error");
  return Errc::InvalidParameters;
}

// A loop needing ten expansion steps next to a bridge that needs none.
TubularGroup loop_and_bridge() {
  return TubularGroup(
      {{"p", Lattice2::standard()}, {"q", Lattice2::standard()}},
      {{"a", "p", "p", vec(1, 0), {Rat(2), Rat(Int(1) << 10)}},
       {"c", "p", "q", vec(0, 1), vec(0, 1)}});
}

TubularGroup path4() {
  return TubularGroup({{"v0", Lattice2::standard()},
                       {"v1", Lattice2::standard()},
                       {"v2", Lattice2::standard()},
                       {"v3", Lattice2::standard()}},
                      {{"e1", "v0", "v1", vec(1, 0), vec(0, 1)},
                       {"e2", "v1", "v2", vec(1, 1), vec(1, 0)},
                       {"e3", "v2", "v3", vec(0, 1), vec(1, 1)}});
}

}  // namespace

TEST_CASE("edge subset enumeration") {
  CHECK(proper_connected_edge_subsets(fixtures::subgroup_recurrent()) ==
        std::vector<std::vector<std::string>>{{"s"}, {"t"}});
  CHECK(proper_connected_edge_subsets(fixtures::two_vertex_primitive()) ==
        std::vector<std::vector<std::string>>{{"a"}, {"b"}});
  // {e1, e3} is skipped: its ends do not touch.
  CHECK(proper_connected_edge_subsets(path4()) ==
        std::vector<std::vector<std::string>>{
            {"e1"}, {"e2"}, {"e1", "e2"}, {"e3"}, {"e2", "e3"}});
  CHECK(proper_connected_edge_subsets(fixtures::primitive_loop()).empty());
}

TEST_CASE("verdict: expansion terminates") {
  Verdict v = decide(fixtures::expanding_terminates());
  CHECK(v.kind == Verdict::Kind::RF);
  CHECK(v.cert == Verdict::Cert::PrimitiveTarget);
  REQUIRE(v.outcome.has_value());
  CHECK(v.outcome->terminated_index == 1);
  CHECK(v.outcome->history[1] == fixtures::expanding_terminates_target());
  CHECK(length_bound(*v.outcome) == 3);

  v = decide(fixtures::primitive_loop());
  CHECK(v.kind == Verdict::Kind::RF);
  CHECK(v.cert == Verdict::Cert::PrimitiveTarget);
  CHECK(v.outcome->terminated_index == 0);

  v = decide(fixtures::two_vertex_primitive());
  CHECK(v.kind == Verdict::Kind::RF);
  CHECK(v.outcome->history.size() == 1);
}

TEST_CASE("verdict: expansion recurs") {
  Verdict v = decide(fixtures::expanding_recurrent());
  CHECK(v.kind == Verdict::Kind::NotRF);
  CHECK(v.cert == Verdict::Cert::Recurrence);
  REQUIRE(v.outcome.has_value());
  CHECK(v.outcome->earlier == 1);
  CHECK(v.outcome->later == 2);
  CHECK(v.outcome->witness->matrices.at("v") == Mat2::scalar(Rat(2)));

  // The eventual period here is two with contraction ratio three.
  v = decide(fixtures::no_regulating_tuple());
  CHECK(v.kind == Verdict::Kind::NotRF);
  CHECK(v.cert == Verdict::Cert::Recurrence);
  CHECK(v.outcome->earlier == 3);
  CHECK(v.outcome->later == 5);
  CHECK(v.outcome->witness->matrices.at("v") == Mat2::scalar(Rat(3)));
}

TEST_CASE("verdict: recurrence inside an edge subset") {
  Verdict v = decide(fixtures::subgroup_recurrent());
  CHECK(v.kind == Verdict::Kind::NotRF);
  CHECK(v.cert == Verdict::Cert::SubtubularRecurrence);
  CHECK(v.subtubular_edges == std::vector<std::string>{"s"});
  REQUIRE(v.outcome.has_value());
  CHECK(v.outcome->earlier == 0);
  CHECK(v.outcome->later == 1);
  CHECK(v.outcome->witness->matrices.at("v") == Mat2{2, 0, 0, 1});
  CHECK(v.outcome->history[0] == subtubular(fixtures::subgroup_recurrent(), {"s"}));
}

TEST_CASE("verdict: regulating route") {
  // Budget too small for the expansion chain; the tuple search settles it.
  Verdict v = decide(fixtures::doubling_tail(10), 3);
  CHECK(v.kind == Verdict::Kind::RF);
  CHECK(v.cert == Verdict::Cert::Regulating);
  REQUIRE(v.tuple_cert.has_value());
  CHECK(v.tuple_cert->tuple == EdgeTuple{{{"t", 1}}});

  v = decide(fixtures::no_regulating_tuple(), 2);
  CHECK(v.kind == Verdict::Kind::NotRF);
  CHECK(v.cert == Verdict::Cert::NoTuple);
  REQUIRE(v.no_tuple.has_value());
  CHECK(v.no_tuple->kind == NoTupleReason::Kind::NonIntegerProduct);
  CHECK(v.no_tuple->tseq->product == Rat(8, 3));

  v = decide(fixtures::expanding_recurrent(), 1);
  CHECK(v.kind == Verdict::Kind::NotRF);
  CHECK(v.cert == Verdict::Cert::NoTuple);
  CHECK(v.no_tuple->kind == NoTupleReason::Kind::SearchExhausted);
  CHECK(v.no_tuple->candidates_tried == 3);
}

TEST_CASE("verdict: unknown only for multi-vertex groups") {
  Verdict v = decide(loop_and_bridge(), 5);
  CHECK(v.kind == Verdict::Kind::Unknown);
  CHECK(v.cert == Verdict::Cert::BudgetExhausted);
  REQUIRE(v.outcome.has_value());
  CHECK(v.outcome->status == ExpansionOutcome::Status::Exhausted);
  REQUIRE(v.subtubular_tried.size() == 2);
  CHECK(v.subtubular_tried[0].edges == std::vector<std::string>{"a"});
  CHECK(v.subtubular_tried[0].status == ExpansionOutcome::Status::Exhausted);
  CHECK(v.subtubular_tried[0].history_length == 6);
  CHECK(v.subtubular_tried[1].edges == std::vector<std::string>{"c"});
  CHECK(v.subtubular_tried[1].status == ExpansionOutcome::Status::Terminated);
  CHECK(v.subtubular_tried[1].history_length == 1);

  // With enough budget the same group resolves.
  v = decide(loop_and_bridge(), 64);
  CHECK(v.kind == Verdict::Kind::RF);
  CHECK(v.cert == Verdict::Cert::PrimitiveTarget);
}

TEST_CASE("decide input errors") {
  CHECK(code_of([] { decide(fixtures::primitive_loop(), -1); }) == Errc::InvalidParameters);
  TubularGroup bad({{"v", Lattice2::standard()}},
                   {{"e", "v", "v", vec(0, 0), vec(1, 0)}});
  CHECK(code_of([&] { decide(bad); }) == Errc::SemanticError);
}

TEST_CASE("verdict serialization") {
  Verdict v = decide(fixtures::expanding_terminates());
  json j = verdict_to_json(v);
  CHECK(j["verdict"] == "RF");
  CHECK(j["certificate"]["kind"] == "primitive_target");
  CHECK(j["certificate"]["outcome"]["status"] == "terminated");
  CHECK(group_from_json(j["group"]) == fixtures::expanding_terminates());

  j = verdict_to_json(decide(fixtures::expanding_recurrent()));
  CHECK(j["verdict"] == "NotRF");
  CHECK(j["certificate"]["kind"] == "recurrence");
  CHECK(j["certificate"]["outcome"]["witness"]["matrices"]["v"] ==
        json::array({{"2", "0"}, {"0", "2"}}));
  CHECK(j["certificate"]["outcome"]["witness"]["inverse_matrices"]["v"] ==
        json::array({{"1/2", "0"}, {"0", "1/2"}}));

  j = verdict_to_json(decide(fixtures::subgroup_recurrent()));
  CHECK(j["certificate"]["kind"] == "subtubular_recurrence");
  CHECK(j["certificate"]["edges"] == json::array({"s"}));

  j = verdict_to_json(decide(fixtures::doubling_tail(10), 3));
  CHECK(j["certificate"]["kind"] == "regulating");
  CHECK(j["certificate"]["tuple_certificate"]["tuple"] == json{{"t", "1"}});

  j = verdict_to_json(decide(fixtures::no_regulating_tuple(), 2));
  CHECK(j["certificate"]["kind"] == "no_regulating_tuple");
  CHECK(j["certificate"]["reason"]["kind"] == "non_integer_product");
  CHECK(j["certificate"]["reason"]["t_sequence"]["product"] == "8/3");

  j = verdict_to_json(decide(loop_and_bridge(), 5));
  CHECK(j["verdict"] == "Unknown");
  CHECK(j["certificate"]["kind"] == "budget_exhausted");
  REQUIRE(j["certificate"]["subtubular"].size() == 2);
  CHECK(j["certificate"]["subtubular"][1] ==
        json{{"edges", {"c"}}, {"status", "terminated"}, {"history_length", 1}});
}

TEST_CASE("recheck accepts every certificate it produced") {
  std::vector<Verdict> verdicts = {
      decide(fixtures::expanding_terminates()),
      decide(fixtures::expanding_recurrent()),
      decide(fixtures::subgroup_recurrent()),
      decide(fixtures::no_regulating_tuple()),
      decide(fixtures::no_regulating_tuple(), 2),
      decide(fixtures::doubling_tail(10), 3),
      decide(loop_and_bridge(), 5),
  };
  for (const Verdict& v : verdicts) {
    json doc = verdict_to_json(v);
    RecheckReport rep = recheck_verdict(doc);
    CAPTURE(doc["certificate"]["kind"].get<std::string>());
    CAPTURE(rep.detail);
    CHECK(rep.pass);
    CHECK(rep.detail.empty());
    CHECK(rep.verdict == doc["verdict"].get<std::string>());
  }
}

TEST_CASE("recheck rejects tampered documents") {
  json doc = verdict_to_json(decide(fixtures::expanding_recurrent()));
  doc["certificate"]["outcome"]["witness"]["matrices"]["v"][0][0] = "7";
  RecheckReport rep = recheck_verdict(doc);
  CHECK_FALSE(rep.pass);
  CHECK(rep.detail ==
        "witness is not a rigid isomorphism from the later to the earlier term");

  doc = verdict_to_json(decide(fixtures::expanding_terminates()));
  doc["certificate"]["outcome"]["history"][1]["edges"][0]["u"] = json::array({"1", "0"});
  rep = recheck_verdict(doc);
  CHECK_FALSE(rep.pass);
  CHECK(rep.detail == "history step 1 is not the expansion of its predecessor");

  doc = verdict_to_json(decide(fixtures::expanding_terminates()));
  doc["verdict"] = "NotRF";
  rep = recheck_verdict(doc);
  CHECK_FALSE(rep.pass);
  CHECK(rep.detail == "verdict does not match certificate kind");

  doc = verdict_to_json(decide(fixtures::doubling_tail(10), 3));
  doc["certificate"]["tuple_certificate"]["tuple"]["t"] = "2";
  rep = recheck_verdict(doc);
  CHECK_FALSE(rep.pass);
  CHECK(rep.detail == "certificate does not match the recomputed one");

  doc = verdict_to_json(decide(fixtures::no_regulating_tuple(), 2));
  doc["certificate"]["reason"]["t_sequence"]["product"] = "3";
  rep = recheck_verdict(doc);
  CHECK_FALSE(rep.pass);
  CHECK(rep.detail.rfind("recomputed impossibility reason differs", 0) == 0);

  doc = verdict_to_json(decide(fixtures::expanding_terminates()));
  doc.erase("group");
  rep = recheck_verdict(doc);
  CHECK_FALSE(rep.pass);
  CHECK_FALSE(rep.detail.empty());
}
