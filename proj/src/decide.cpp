#include "tubular/decide.hpp"

#include <algorithm>
#include <set>

namespace tubular {

std::vector<std::vector<std::string>> proper_connected_edge_subsets(const TubularGroup& G) {
  std::vector<std::vector<std::string>> out;
  const auto& es = G.edges();
  const size_t m = es.size();
  if (m < 2 || m > 16) return out;  // nothing proper to try, or too many to enumerate
  for (uint32_t mask = 1; mask + 1 < (1u << m); ++mask) {
    std::vector<const Edge*> sel;
    for (size_t i = 0; i < m; ++i) {
      if (mask & (1u << i)) sel.push_back(&es[i]);
    }
    std::set<std::string> verts;
    for (const Edge* e : sel) {
      verts.insert(e->minus);
      verts.insert(e->plus);
    }
    std::set<std::string> seen{(*sel.front()).minus};
    bool grew = true;
    while (grew) {
      grew = false;
      for (const Edge* e : sel) {
        bool a = seen.count(e->minus) > 0, b = seen.count(e->plus) > 0;
        if (a != b) {
          seen.insert(a ? e->plus : e->minus);
          grew = true;
        }
      }
    }
    if (seen.size() != verts.size()) continue;
    std::vector<std::string> ids;
    for (const Edge* e : sel) ids.push_back(e->id);
    out.push_back(std::move(ids));
  }
  return out;
}

Verdict decide(const TubularGroup& G, int budget) {
  ensure_valid(G);
  Verdict v;
  v.group = G;
  ExpansionOutcome main = run_sequence(G, budget);
  if (main.status == ExpansionOutcome::Status::Terminated) {
    v.kind = Verdict::Kind::RF;
    v.cert = Verdict::Cert::PrimitiveTarget;
    v.outcome = std::move(main);
    return v;
  }
  if (main.status == ExpansionOutcome::Status::Recurrent) {
    v.kind = Verdict::Kind::NotRF;
    v.cert = Verdict::Cert::Recurrence;
    v.outcome = std::move(main);
    return v;
  }
  for (const auto& subset : proper_connected_edge_subsets(G)) {
    TubularGroup H = subtubular(G, subset);
    ExpansionOutcome out = run_sequence(H, budget);
    v.subtubular_tried.push_back({subset, out.status, static_cast<int>(out.history.size())});
    if (out.status == ExpansionOutcome::Status::Recurrent) {
      v.kind = Verdict::Kind::NotRF;
      v.cert = Verdict::Cert::SubtubularRecurrence;
      v.subtubular_edges = subset;
      v.outcome = std::move(out);
      return v;
    }
  }
  if (G.single_vertex()) {
    RegulatingDecision rd = single_vertex_decide(G);
    if (rd.regulating) {
      v.kind = Verdict::Kind::RF;
      v.cert = Verdict::Cert::Regulating;
      v.tuple_cert = std::move(rd.cert);
    } else {
      v.kind = Verdict::Kind::NotRF;
      v.cert = Verdict::Cert::NoTuple;
      v.no_tuple = std::move(rd.reason);
    }
    return v;
  }
  v.kind = Verdict::Kind::Unknown;
  v.cert = Verdict::Cert::BudgetExhausted;
  v.outcome = std::move(main);
  return v;
}

namespace {

const char* status_name(ExpansionOutcome::Status s) {
  switch (s) {
    case ExpansionOutcome::Status::Terminated: return "terminated";
    case ExpansionOutcome::Status::Recurrent: return "recurrent";
    case ExpansionOutcome::Status::Exhausted: return "exhausted";
  }
  return "";
}

}  // namespace

json verdict_to_json(const Verdict& v) {
  json j;
  switch (v.kind) {
    case Verdict::Kind::RF: j["verdict"] = "RF"; break;
    case Verdict::Kind::NotRF: j["verdict"] = "NotRF"; break;
    case Verdict::Kind::Unknown: j["verdict"] = "Unknown"; break;
  }
  json c;
  switch (v.cert) {
    case Verdict::Cert::PrimitiveTarget:
      c["kind"] = "primitive_target";
      c["outcome"] = outcome_to_json(*v.outcome);
      break;
    case Verdict::Cert::Recurrence:
      c["kind"] = "recurrence";
      c["outcome"] = outcome_to_json(*v.outcome);
      break;
    case Verdict::Cert::SubtubularRecurrence:
      c["kind"] = "subtubular_recurrence";
      c["edges"] = v.subtubular_edges;
      c["outcome"] = outcome_to_json(*v.outcome);
      break;
    case Verdict::Cert::Regulating:
      c["kind"] = "regulating";
      c["tuple_certificate"] = tuple_certificate_to_json(*v.tuple_cert);
      break;
    case Verdict::Cert::NoTuple: {
      c["kind"] = "no_regulating_tuple";
      RegulatingDecision rd;
      rd.regulating = false;
      rd.reason = v.no_tuple;
      c["reason"] = regulating_decision_to_json(rd)["reason"];
      break;
    }
    case Verdict::Cert::BudgetExhausted:
      c["kind"] = "budget_exhausted";
      c["outcome"] = outcome_to_json(*v.outcome);
      c["subtubular"] = json::array();
      for (const auto& t : v.subtubular_tried) {
        c["subtubular"].push_back({{"edges", t.edges},
                                   {"status", status_name(t.status)},
                                   {"history_length", t.history_length}});
      }
      break;
  }
  j["certificate"] = c;
  j["group"] = group_to_json(v.group);
  return j;
}

namespace {

// Replays an expansion history: every stored step must be the expansion of the
// previous term and nontrivial. Returns a failure message or "".
std::string replay_chain(const TubularGroup& start, const ExpansionOutcome& out) {
  if (out.history.empty()) return "empty history";
  if (!(out.history.front() == start)) return "history does not start at the stated group";
  for (size_t i = 0; i + 1 < out.history.size(); ++i) {
    auto [next, trivial] = expand(out.history[i]);
    if (trivial) return "history step " + std::to_string(i) + " is already primitive";
    if (!(next == out.history[i + 1])) {
      return "history step " + std::to_string(i + 1) + " is not the expansion of its predecessor";
    }
  }
  return "";
}

std::string check_expansion_cert(const TubularGroup& start, const ExpansionOutcome& out,
                                 ExpansionOutcome::Status want) {
  if (out.status != want) return "outcome status does not match the certificate kind";
  std::string err = replay_chain(start, out);
  if (!err.empty()) return err;
  if (want == ExpansionOutcome::Status::Terminated) {
    if (out.terminated_index != static_cast<int>(out.history.size()) - 1) {
      return "terminated index does not point at the last term";
    }
    if (!expand(out.history.back()).second) return "final term is not primitive";
  }
  if (want == ExpansionOutcome::Status::Recurrent) {
    if (out.earlier < 0 || out.later <= out.earlier ||
        out.later >= static_cast<int>(out.history.size())) {
      return "recurrence indices out of range";
    }
    if (!out.witness) return "recurrence without a witness";
    if (!verify_rigid_iso(out.history[out.later], out.history[out.earlier], *out.witness)) {
      return "witness is not a rigid isomorphism from the later to the earlier term";
    }
  }
  return "";
}

std::string recheck_impl(const json& doc, std::string& verdict) {
  verdict = doc.at("verdict").get<std::string>();
  TubularGroup G = group_from_json(doc.at("group"));
  ensure_valid(G);
  const json& c = doc.at("certificate");
  const std::string kind = c.at("kind").get<std::string>();

  if (kind == "primitive_target" || kind == "recurrence") {
    const bool rf = kind == "primitive_target";
    if (verdict != (rf ? "RF" : "NotRF")) return "verdict does not match certificate kind";
    return check_expansion_cert(G, outcome_from_json(c.at("outcome")),
                                rf ? ExpansionOutcome::Status::Terminated
                                   : ExpansionOutcome::Status::Recurrent);
  }
  if (kind == "subtubular_recurrence") {
    if (verdict != "NotRF") return "verdict does not match certificate kind";
    std::vector<std::string> edges = c.at("edges").get<std::vector<std::string>>();
    if (edges.size() >= G.edges().size()) return "subtubular selection is not proper";
    TubularGroup H = subtubular(G, edges);
    return check_expansion_cert(H, outcome_from_json(c.at("outcome")),
                                ExpansionOutcome::Status::Recurrent);
  }
  if (kind == "regulating") {
    if (verdict != "RF") return "verdict does not match certificate kind";
    TupleCertificate cert = tuple_certificate_from_json(c.at("tuple_certificate"));
    auto re = is_regulating(G, cert.tuple);
    if (!re) return "stated tuple is not regulating";
    if (!(*re == cert)) return "certificate does not match the recomputed one";
    return "";
  }
  if (kind == "no_regulating_tuple") {
    if (verdict != "NotRF") return "verdict does not match certificate kind";
    const json& r = c.at("reason");
    const std::string rk = r.at("kind").get<std::string>();
    RegulatingDecision rd = single_vertex_decide(G);
    if (rd.regulating) return "a regulating tuple exists after all";
    json recomputed = regulating_decision_to_json(rd)["reason"];
    if (recomputed != r) return "recomputed impossibility reason differs: " + recomputed.dump();
    (void)rk;
    return "";
  }
  if (kind == "budget_exhausted") {
    if (verdict != "Unknown") return "verdict does not match certificate kind";
    ExpansionOutcome out = outcome_from_json(c.at("outcome"));
    if (out.status != ExpansionOutcome::Status::Exhausted) {
      return "outcome status does not match the certificate kind";
    }
    return replay_chain(G, out);
  }
  return "unknown certificate kind '" + kind + "'";
}

}  // namespace

RecheckReport recheck_verdict(const json& doc) {
  RecheckReport rep;
  try {
    std::string detail = recheck_impl(doc, rep.verdict);
    rep.pass = detail.empty();
    rep.detail = detail;
  } catch (const std::exception& e) {
    rep.pass = false;
    rep.detail = e.what();
  }
  return rep;
}

}  // namespace tubular
