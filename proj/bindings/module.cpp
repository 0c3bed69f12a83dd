#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tubular/decide.hpp"
#include "tubular/words.hpp"

namespace py = pybind11;

namespace {

// The module speaks JSON strings: one canonical wire format shared with the
// CLI, no duplicated binding surface for the certificate types.

std::string decide_str(const std::string& group, int budget) {
  return verdict_to_json(tubular::decide(tubular::parse_group(group), budget)).dump(2);
}

std::string recheck_str(const std::string& verdict_doc) {
  tubular::json j = tubular::json::parse(verdict_doc, nullptr, false);
  if (j.is_discarded()) tubular::fail(tubular::Errc::SyntaxError, "input is not valid JSON");
  tubular::RecheckReport rep = tubular::recheck_verdict(j);
  tubular::json out;
  out["recheck"] = rep.pass ? "pass" : "fail";
  out["verdict"] = rep.verdict;
  if (!rep.detail.empty()) out["detail"] = rep.detail;
  return out.dump(2);
}

std::string snowflake_str(long long p, long long q) {
  return tubular::serialize_group(tubular::snowflake(tubular::Int(p), tubular::Int(q)));
}

std::vector<std::string> validate_str(const std::string& group) {
  return tubular::validate(tubular::parse_group(group));
}

std::string canonical_str(const std::string& group) {
  return tubular::serialize_group(tubular::parse_group(group));
}

std::string scale_str(const std::string& group, const std::string& factor) {
  auto a = tubular::parse_rat(factor);
  if (!a) tubular::fail(tubular::Errc::SyntaxError, "bad scale factor '" + factor + "'");
  return tubular::serialize_group(tubular::scale(tubular::parse_group(group), *a));
}

std::string subtubular_str(const std::string& group, const std::vector<std::string>& edges) {
  return tubular::serialize_group(tubular::subtubular(tubular::parse_group(group), edges));
}

py::tuple expand_str(const std::string& group) {
  auto [next, trivial] = tubular::expand(tubular::parse_group(group));
  return py::make_tuple(tubular::serialize_group(next), trivial);
}

std::string run_sequence_str(const std::string& group, int budget) {
  return outcome_to_json(tubular::run_sequence(tubular::parse_group(group), budget)).dump(2);
}

std::string regulate_str(const std::string& group) {
  tubular::TubularGroup G = tubular::parse_group(group);
  tubular::RegulatingDecision d = tubular::single_vertex_decide(G);
  tubular::json j = regulating_decision_to_json(d);
  if (d.regulating) {
    j["primitive_domain"] = group_to_json(tubular::primitive_domain(G, *d.cert));
  }
  return j.dump(2);
}

std::string britton_str(const std::string& group, const std::string& word) {
  tubular::TubularGroup G = tubular::parse_group(group);
  return word_to_string(tubular::britton_reduce(G, tubular::parse_word(G, word)));
}

bool trivial_str(const std::string& group, const std::string& word) {
  tubular::TubularGroup G = tubular::parse_group(group);
  return tubular::is_trivial_word(G, tubular::parse_word(G, word));
}

std::string witness_str(const std::string& group, const std::string& word) {
  tubular::TubularGroup G = tubular::parse_group(group);
  tubular::WitnessRecord rec = tubular::witness_modulus(G, tubular::parse_word(G, word));
  tubular::json j;
  j["witness"] = witness_to_json(rec);
  j["quotient"] = finite_gog_to_json(tubular::local_quotient(G, rec.n));
  return j.dump(2);
}

std::string quotient_str(const std::string& group, long long n) {
  return finite_gog_to_json(tubular::local_quotient(tubular::parse_group(group), tubular::Int(n)))
      .dump(2);
}

}  // namespace

PYBIND11_MODULE(_tubular, m) {
  m.doc() = "residual finiteness of tubular groups, with certificates";

  py::register_exception<tubular::Error>(m, "TubularError", PyExc_ValueError);

  m.def("decide", &decide_str, py::arg("group"), py::arg("budget") = 64,
        "Decide residual finiteness; returns a verdict document (JSON string).");
  m.def("recheck", &recheck_str, py::arg("verdict"),
        "Re-verify a verdict document; returns a report (JSON string).");
  m.def("snowflake", &snowflake_str, py::arg("p"), py::arg("q"),
        "The two-letter snowflake group presentation (JSON string).");
  m.def("validate", &validate_str, py::arg("group"), "List of validity violations.");
  m.def("canonical", &canonical_str, py::arg("group"),
        "Parse and reserialize a group in canonical form.");
  m.def("scale", &scale_str, py::arg("group"), py::arg("factor"),
        "Scale lattices and images by a rational factor.");
  m.def("subtubular", &subtubular_str, py::arg("group"), py::arg("edges"),
        "Subgroup generated by a connected subset of edges.");
  m.def("expand", &expand_str, py::arg("group"),
        "One expansion step; returns (group JSON string, trivial flag).");
  m.def("run_sequence", &run_sequence_str, py::arg("group"), py::arg("budget") = 64,
        "Full expansion sequence outcome (JSON string).");
  m.def("regulate", &regulate_str, py::arg("group"),
        "Complete regulating-tuple decision for a single-vertex group (JSON string).");
  m.def("britton_reduce", &britton_str, py::arg("group"), py::arg("word"),
        "Britton-reduced form of a word (word string).");
  m.def("is_trivial_word", &trivial_str, py::arg("group"), py::arg("word"),
        "Whether a word presents the identity.");
  m.def("witness", &witness_str, py::arg("group"), py::arg("word"),
        "Separating modulus and quotient for a nontrivial word (JSON string).");
  m.def("local_quotient", &quotient_str, py::arg("group"), py::arg("n"),
        "Finite graph-of-groups quotient of a primitive group (JSON string).");
}
