#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tubular/decide.hpp"
#include "tubular/words.hpp"

namespace {

using tubular::json;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) tubular::fail(tubular::Errc::SyntaxError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) tubular::fail(tubular::Errc::SyntaxError, "input is not valid JSON");
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int verdict_code(const std::string& verdict) {
  if (verdict == "RF") return 0;
  if (verdict == "NotRF") return 1;
  return 2;
}

int run_decide(const std::string& file, int budget, bool recheck) {
  if (recheck) {
    tubular::RecheckReport rep = tubular::recheck_verdict(parse_json(read_input(file)));
    json j;
    j["recheck"] = rep.pass ? "pass" : "fail";
    j["verdict"] = rep.verdict;
    if (!rep.detail.empty()) j["detail"] = rep.detail;
    emit(j);
    return rep.pass ? verdict_code(rep.verdict) : 3;
  }
  tubular::TubularGroup G = tubular::parse_group(read_input(file));
  tubular::Verdict v = tubular::decide(G, budget);
  emit(verdict_to_json(v));
  switch (v.kind) {
    case tubular::Verdict::Kind::RF: return 0;
    case tubular::Verdict::Kind::NotRF: return 1;
    case tubular::Verdict::Kind::Unknown: return 2;
  }
  return 3;
}

int run_expand(const std::string& file, int steps) {
  tubular::TubularGroup G = tubular::parse_group(read_input(file));
  tubular::ensure_valid(G);
  json hist = json::array();
  hist.push_back(tubular::group_to_json(G));
  bool primitive = false;
  int applied = 0;
  for (int i = 0; i < steps; ++i) {
    auto [next, trivial] = tubular::expand(G);
    if (trivial) {
      primitive = true;
      break;
    }
    G = std::move(next);
    ++applied;
    hist.push_back(tubular::group_to_json(G));
  }
  if (!primitive) primitive = tubular::expand(G).second;
  json degs = json::array();
  for (const auto& d : tubular::edge_degrees(G)) {
    degs.push_back({{"edge", d.edge},
                    {"d_minus", tubular::int_to_json(d.d_minus)},
                    {"d_plus", tubular::int_to_json(d.d_plus)},
                    {"d", tubular::int_to_json(d.d)}});
  }
  json j;
  j["steps_applied"] = applied;
  j["primitive"] = primitive;
  j["degrees"] = degs;
  j["history"] = hist;
  emit(j);
  return 0;
}

int run_regulate(const std::string& file) {
  tubular::TubularGroup G = tubular::parse_group(read_input(file));
  tubular::RegulatingDecision d = tubular::single_vertex_decide(G);
  json j = tubular::regulating_decision_to_json(d);
  if (d.regulating) {
    j["primitive_domain"] = tubular::group_to_json(tubular::primitive_domain(G, *d.cert));
  }
  emit(j);
  return 0;
}

int run_witness(const std::string& file, const std::string& word) {
  tubular::TubularGroup G = tubular::parse_group(read_input(file));
  tubular::Word w = tubular::parse_word(G, word);
  if (tubular::is_trivial_word(G, w)) {
    json j;
    j["trivial"] = true;
    emit(j);
    return 0;
  }
  tubular::WitnessRecord rec = tubular::witness_modulus(G, w);
  json j;
  j["trivial"] = false;
  j["witness"] = tubular::witness_to_json(rec);
  j["quotient"] = tubular::finite_gog_to_json(tubular::local_quotient(G, rec.n));
  emit(j);
  return 0;
}

int run_snowflake(long long p, long long q, bool do_decide, int budget) {
  tubular::TubularGroup G = tubular::snowflake(tubular::Int(p), tubular::Int(q));
  if (!do_decide) {
    emit(tubular::group_to_json(G));
    return 0;
  }
  tubular::Verdict v = tubular::decide(G, budget);
  emit(verdict_to_json(v));
  switch (v.kind) {
    case tubular::Verdict::Kind::RF: return 0;
    case tubular::Verdict::Kind::NotRF: return 1;
    case tubular::Verdict::Kind::Unknown: return 2;
  }
  return 3;
}

int run_validate(const std::string& file) {
  tubular::TubularGroup G = tubular::parse_group(read_input(file));
  std::vector<std::string> violations = tubular::validate(G);
  json j;
  j["valid"] = violations.empty();
  j["violations"] = violations;
  emit(j);
  return violations.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"residual finiteness of tubular groups, with certificates"};
  app.require_subcommand(1);

  std::string file = "-";
  int budget = 64;
  bool recheck = false;
  int steps = 1;
  std::string word;
  long long p = 1, q = 1;
  bool do_decide = false;

  auto* cmd_decide = app.add_subcommand("decide", "decide residual finiteness of a group file");
  cmd_decide->add_option("file", file, "group JSON file, or - for stdin");
  cmd_decide->add_option("--budget", budget, "max nontrivial expansion steps")
      ->default_val(64);
  cmd_decide->add_flag("--recheck", recheck, "input is a verdict document; re-verify it");

  auto* cmd_expand = app.add_subcommand("expand", "apply expansion steps to a group file");
  cmd_expand->add_option("file", file, "group JSON file, or - for stdin");
  cmd_expand->add_option("--steps", steps, "number of steps to apply")->default_val(1);

  auto* cmd_regulate =
      app.add_subcommand("regulate", "decide existence of a regulating tuple (single vertex)");
  cmd_regulate->add_option("file", file, "group JSON file, or - for stdin");

  auto* cmd_witness =
      app.add_subcommand("witness", "separating modulus for a word in a primitive group");
  cmd_witness->add_option("file", file, "group JSON file, or - for stdin");
  cmd_witness->add_option("--word", word, "word, e.g. 't;(2,3);t^-1'")->required();

  auto* cmd_snowflake = app.add_subcommand("snowflake", "build the two-letter snowflake group");
  cmd_snowflake->add_option("p", p, "image x-coordinate")->required();
  cmd_snowflake->add_option("q", q, "edge coordinate, 1 <= q <= p")->required();
  cmd_snowflake->add_flag("--decide", do_decide, "decide it instead of printing it");
  cmd_snowflake->add_option("--budget", budget, "max nontrivial expansion steps")
      ->default_val(64);

  auto* cmd_validate = app.add_subcommand("validate", "list validity violations of a group file");
  cmd_validate->add_option("file", file, "group JSON file, or - for stdin");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_decide->parsed()) return run_decide(file, budget, recheck);
    if (cmd_expand->parsed()) return run_expand(file, steps);
    if (cmd_regulate->parsed()) return run_regulate(file);
    if (cmd_witness->parsed()) return run_witness(file, word);
    if (cmd_snowflake->parsed()) return run_snowflake(p, q, do_decide, budget);
    if (cmd_validate->parsed()) return run_validate(file);
  } catch (const tubular::Error& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
