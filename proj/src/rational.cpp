#include "tubular/rational.hpp"

#include <cctype>

namespace tubular {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::NotInLattice: return "NotInLattice";
    case Errc::NotSublattice: return "NotSublattice";
    case Errc::ZeroScalar: return "ZeroScalar";
    case Errc::InvalidParameters: return "InvalidParameters";
    case Errc::EmptySelection: return "EmptySelection";
    case Errc::DisconnectedSubgraph: return "DisconnectedSubgraph";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::SemanticError: return "SemanticError";
    case Errc::MissingEdgeEntry: return "MissingEdgeEntry";
    case Errc::NotSingleVertex: return "NotSingleVertex";
    case Errc::TooFewEdges: return "TooFewEdges";
    case Errc::RankDeficientEdge: return "RankDeficientEdge";
    case Errc::MalformedWord: return "MalformedWord";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::TrivialWord: return "TrivialWord";
    case Errc::ConditionViolated: return "ConditionViolated";
    case Errc::InvalidCertificate: return "InvalidCertificate";
  }
  return "Error";
}

ExGcd exgcd(Int a, Int b) {
  // Invariants: s0*a0 + t0*b0 == a and s1*a0 + t1*b0 == b throughout.
  Int s0 = 1, t0 = 0, s1 = 0, t1 = 1;
  Int a0 = a, b0 = b;
  while (b != 0) {
    Int q = a / b;
    Int r = a - q * b;
    a = b;
    b = r;
    Int s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = s1;
    t0 = t1;
    s1 = s2;
    t1 = t2;
  }
  if (a < 0) {
    a = -a;
    s0 = -s0;
    t0 = -t0;
  }
  (void)a0;
  (void)b0;
  return {a, s0, t0};
}

std::string int_string(const Int& n) { return n.str(); }

std::string rat_string(const Rat& q) {
  if (is_integer(q)) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

std::string vec_string(const Vec2& v) {
  return "(" + rat_string(v.x) + "," + rat_string(v.y) + ")";
}

namespace {

std::optional<Int> parse_signed_digits(std::string_view s, bool allow_sign) {
  if (s.empty()) return std::nullopt;
  size_t i = 0;
  bool neg = false;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) {
    neg = (s[0] == '-');
    i = 1;
  }
  if (i >= s.size()) return std::nullopt;
  Int value = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    value = value * 10 + (s[i] - '0');
  }
  return neg ? -value : value;
}

}  // namespace

std::optional<Int> parse_int(std::string_view s) { return parse_signed_digits(s, true); }

std::optional<Rat> parse_rat(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    auto n = parse_signed_digits(s, true);
    if (!n) return std::nullopt;
    return Rat(*n);
  }
  auto n = parse_signed_digits(s.substr(0, slash), true);
  auto d = parse_signed_digits(s.substr(slash + 1), false);
  if (!n || !d || *d == 0) return std::nullopt;
  return Rat(*n, *d);
}

}  // namespace tubular
